#include "zermelo/katok.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace zermelo {

KatokData KatokData::make(int n, std::vector<double> a) {
  // The wind factory performs the validation and padding.
  const WindField w = WindField::sphere_rotation(n, std::move(a));
  return {n, std::get<SphereRotation>(w.params()).a};
}

WindField KatokData::wind() const { return WindField::sphere_rotation(n, a); }

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kClosureTol = 1e-8;

double wrap(double x) { return std::remainder(x, kTwoPi); }

// Simpson rule for t -> F(P(t), P'(t)) on [0, T].
double f_length(const RandersMetric& rd, const Point& x0, const Tangent& u, double T, int intervals = 2048) {
  double sum = 0.0;
  for (int j = 0; j <= intervals; ++j) {
    const PathSample s = flow_composed_state(rd, x0, u, T * j / intervals);
    const double wgt = (j == 0 || j == intervals) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    sum += wgt * rd.norm(s.x, s.v);
  }
  return sum * T / (3.0 * intervals);
}

}  // namespace

std::vector<CensusEntry> closed_geodesic_census(const KatokData& k) {
  const RandersMetric rd = k.metric();
  const int d = k.n + 1;
  std::vector<CensusEntry> out;
  for (int i = 0; i < k.blocks(); ++i) {
    for (int o : {+1, -1}) {
      CensusEntry e;
      e.circle = i;
      e.orientation = o;
      e.expected = kTwoPi / (1.0 + o * k.a[i]);
      e.start = Point::Unit(d, 2 * i);
      const Tangent u = o * Tangent::Unit(d, 2 * i + 1);
      e.velocity = rd.wind().eval(e.start) + u;

      // Unwrapped polar angle of P in its plane; march, then bisect on the
      // time at which it has turned through 2 pi.
      auto angle = [&](double t) {
        const Point p = flow_composed_state(rd, e.start, u, t).x;
        return std::atan2(p(2 * i + 1), p(2 * i));
      };
      const double dt = 1e-2;
      double t0 = 0.0, th0 = 0.0;
      while (std::abs(th0) < kTwoPi) {
        const double th = th0 + wrap(angle(t0 + dt) - angle(t0));
        if (std::abs(th) >= kTwoPi) break;
        t0 += dt;
        th0 = th;
      }
      double lo = t0, hi = t0 + dt;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double th = th0 + wrap(angle(mid) - angle(t0));
        (std::abs(th) < kTwoPi ? lo : hi) = mid;
      }
      const double period = 0.5 * (lo + hi);
      e.length = f_length(rd, e.start, u, period);

      DirectOptions opt;
      opt.samples = 256;
      const GeodesicPath direct = integrate_direct(rd, e.start, e.velocity, period, opt);
      for (const PathSample& s : direct.samples)
        e.ode_residual = std::max(e.ode_residual, (s.x - flow_composed_state(rd, e.start, u, s.t).x).norm());
      out.push_back(std::move(e));
    }
  }
  return out;
}

ClosureReport closure_test(const KatokData& k, const Point& x0, const Tangent& y0, int max_loops) {
  const RandersMetric rd = k.metric();
  rd.space().require(x0);
  const Tangent y = rd.normalize(x0, y0);
  const Tangent u = y - rd.wind().eval(x0);

  ClosureReport r;
  for (int l = 1; l <= max_loops; ++l) {
    const PathSample s = flow_composed_state(rd, x0, u, kTwoPi * l);
    const double dx = (s.x - x0).norm(), dv = (s.v - y).norm();
    if (l == 1) {
      r.position_gap_2pi = dx;
      r.velocity_gap_2pi = dv;
      r.self_intersects_at_2pi = dx < kClosureTol && dv > kClosureTol;
    }
    if (dx < kClosureTol && dv < kClosureTol) {
      r.closed = true;
      r.loops = l;
      r.message = "closed after " + std::to_string(l) + " loops";
      return r;
    }
  }
  r.message = "not closed within budget";
  return r;
}

ClosureReport closure_test(const KatokData& k, const GeodesicPath& P, int max_loops) {
  if (P.samples.empty()) throw InvalidArgument("empty path");
  return closure_test(k, P.front().x, P.front().v, max_loops);
}

GeodesicPath pole_geodesic(const KatokData& k, double T, int samples) {
  if (k.n % 2) throw InvalidArgument("the poles are fixed points only for even n");
  const RandersMetric rd = k.metric();
  const Point pole = Point::Unit(k.n + 1, k.n);
  return flow_compose(rd, pole, Tangent::Unit(k.n + 1, 0), T, samples);
}

ZillerChoice ziller_choice(int m, double a, const std::vector<int>& primes, int n) {
  if (m < 1) throw InvalidArgument("need at least one rotation block");
  if (!(a > 0.0 && a < 1.0)) throw InvalidArgument("Ziller choice requires 0 < a < 1");
  if (static_cast<int>(primes.size()) != m) throw InvalidArgument("need exactly m integers p_i");
  for (int i = 0; i < m; ++i) {
    if (primes[i] <= 1) throw InvalidArgument("each p_i must exceed 1");
    if (i > 0 && primes[i] <= primes[i - 1]) throw InvalidArgument("p_i must be increasing");
    for (int j = 0; j < i; ++j)
      if (std::gcd(primes[i], primes[j]) != 1) throw InvalidArgument("p_i must be pairwise relatively prime");
  }
  if (n == 0) n = 2 * m;
  if (n != 2 * m && n != 2 * m - 1) throw InvalidArgument("n must be 2m or 2m - 1");

  std::vector<double> rates(m);
  for (int i = 0; i < m; ++i) rates[i] = a / primes[i];
  ZillerChoice z{KatokData::make(n, rates), {}};
  for (int q = 1; q <= 1000; ++q) {
    if (std::abs(a * q - std::round(a * q)) < 1e-12 * q) {
      std::ostringstream os;
      os << "a = " << std::llround(a * q) << "/" << q
         << " is rational: hypothesis violated, every geodesic closes";
      z.warnings.push_back(os.str());
      break;
    }
  }
  return z;
}

ClosedCount count_closed_geodesics(const KatokData& k, int samples, int max_loops, unsigned seed) {
  ClosedCount c;
  // Invariant circles close after one turn, not at multiples of 2 pi.
  for (const CensusEntry& e : closed_geodesic_census(k))
    if (std::abs(e.length - e.expected) < 1e-9) ++c.census;

  const RandersMetric rd = k.metric();
  const ModelSpace& space = rd.space();
  std::mt19937 rng(seed);
  std::normal_distribution<double> normal;
  auto gaussian = [&](int d) {
    Eigen::VectorXd v(d);
    for (int i = 0; i < d; ++i) v(i) = normal(rng);
    return v;
  };
  for (int j = 0; j < samples; ++j) {
    const Point p = gaussian(k.n + 1).normalized();
    const Tangent u = space.project_tangent(p, gaussian(k.n + 1)).normalized();
    ++c.sampled;
    if (closure_test(k, p, Tangent(rd.wind().eval(p) + u), max_loops).closed) ++c.sampled_closed;
  }
  return c;
}

std::vector<Point> geodesic_sphere(const KatokData& k, const Point& p, double r, int samples) {
  if (!(r > 0.0 && r <= M_PI)) throw InvalidArgument("geodesic sphere radius must lie in (0, pi]");
  if (samples < 1) throw InvalidArgument("sample count must be positive");
  const WindField w = k.wind();
  const ModelSpace& space = w.space();
  space.require(p);
  const Matrix basis = space.tangent_basis(p);

  std::mt19937 rng(11);
  std::normal_distribution<double> normal;
  std::vector<Point> out;
  for (int j = 0; j < samples; ++j) {
    Eigen::VectorXd c(k.n);
    if (k.n == 2) {
      const double th = kTwoPi * j / samples;
      c << std::cos(th), std::sin(th);
    } else {
      for (int i = 0; i < k.n; ++i) c(i) = normal(rng);
      c.normalize();
    }
    const Point q = space.geodesic(p, basis * c, r).x;
    out.push_back(space.project_point(w.flow(r, q)));
  }
  return out;
}

GeodesicPath s2_geodesic(double a, const Point& q, const Tangent& v, double T, int samples, Orientation orientation) {
  const RandersMetric rd = KatokData::make(2, {a}).metric();
  rd.space().require(q);
  rd.space().require_tangent(q, v);
  if (std::abs(rd.norm(q, v) - 1.0) > 1e-9) throw InvalidArgument("non-unit inputs: F(q, v) must be 1");
  return flow_compose(rd, q, v, T, samples, orientation);
}

}  // namespace zermelo
