#include "zermelo/wind.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "ode.hpp"

namespace zermelo {

namespace {

using cd = std::complex<double>;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// (e^{mu t} - 1) / mu, continuous at mu = 0.
cd expm1_over(cd mu, double t) {
  const cd z = mu * t;
  if (std::abs(z) < 1e-5) return t * (1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0);
  return (std::exp(z) - 1.0) / mu;
}

Matrix omega_matrix(int d, const std::vector<double>& a) {
  Matrix om = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    om(2 * i, 2 * i + 1) = a[i];
    om(2 * i + 1, 2 * i) = -a[i];
  }
  return om;
}

// Transpose of Rot(a_1 t, ..., a_m t), so that column vectors map as p -> Rot^T p.
Matrix rot_transpose(int d, const std::vector<double>& a, double t) {
  Matrix r = Matrix::Identity(d, d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double c = std::cos(a[i] * t), s = std::sin(a[i] * t);
    r(2 * i, 2 * i) = c;
    r(2 * i, 2 * i + 1) = -s;
    r(2 * i + 1, 2 * i) = s;
    r(2 * i + 1, 2 * i + 1) = c;
  }
  return r;
}

// Plane rotation by the flow of k J for time t: (u, v) -> (u cos kt + v sin kt, -u sin kt + v cos kt).
void rotate_plane(Eigen::VectorXd& x, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  const double u = x(0), v = x(1);
  x(0) = c * u + s * v;
  x(1) = -s * u + c * v;
}

struct MeridianFrame {
  double phi;              // polar angle from the north pole
  Eigen::Vector2d horiz;   // unit horizontal direction (sin th, cos th)
};

MeridianFrame meridian_frame(const Point& p) {
  const Point q = p.normalized();
  const double rho = std::hypot(q(0), q(1));
  if (rho < 1e-12) throw DomainError("meridional wind is undefined at the poles");
  return {std::atan2(rho, q(2)), Eigen::Vector2d(q(0) / rho, q(1) / rho)};
}

Point meridian_point(const MeridianFrame& f, double phi) {
  Point p(3);
  p << f.horiz(0) * std::sin(phi), f.horiz(1) * std::sin(phi), std::cos(phi);
  return p;
}

Tangent meridian_unit(const MeridianFrame& f, double phi) {
  Tangent e(3);
  e << f.horiz(0) * std::cos(phi), f.horiz(1) * std::cos(phi), -std::sin(phi);
  return e;
}

Tangent azimuth_unit(const MeridianFrame& f) {
  Tangent e(3);
  e << f.horiz(1), -f.horiz(0), 0.0;
  return e;
}

int rotation_block_count(int n) { return n % 2 == 0 ? n / 2 : (n + 1) / 2; }

}  // namespace

WindField::WindField(ModelSpace space, WindParams params) : space_(space), params_(std::move(params)) {}

WindField WindField::euclidean(int n, double sigma, double k, Eigen::VectorXd c) {
  if (c.size() != 0 && c.size() != n) throw InvalidArgument("translation part has wrong dimension");
  if (c.size() == 0) c = Eigen::VectorXd::Zero(n);
  return {ModelSpace::euclidean(n), EuclideanHomothety{sigma, k, std::move(c)}};
}

WindField WindField::poincare_rotation(int n, double omega) {
  return {ModelSpace::poincare_ball(n), PoincareRotation{omega}};
}

WindField WindField::poincare_translation(int n, double speed) {
  return {ModelSpace::poincare_ball(n), PoincareTranslation{speed}};
}

WindField WindField::sphere_rotation(int n, std::vector<double> a, bool require_unit_bound) {
  const int m = rotation_block_count(n);
  if (static_cast<int>(a.size()) > m) throw InvalidArgument("too many rotation rates for S^n");
  a.resize(m, 0.0);
  for (int i = 0; i < m; ++i) {
    if (a[i] < 0.0) throw InvalidArgument("rotation rates must be nonnegative");
    if (i > 0 && a[i] > a[i - 1]) throw InvalidArgument("rotation rates must be ordered a_1 >= ... >= a_m");
  }
  if (require_unit_bound && m > 0 && a[0] >= 1.0)
    throw InvalidArgument("Katok wind requires a_1 < 1");
  return {ModelSpace::sphere(n), SphereRotation{std::move(a)}};
}

WindField WindField::sphere_non_homothety(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("meridional wind requires 0 < eps < 1");
  return {ModelSpace::sphere(2), SphereNonHomothety{eps}};
}

WindField WindField::calm(const ModelSpace& space) {
  switch (space.kind()) {
    case ModelSpace::Kind::Euclidean: return euclidean(space.dim(), 0.0, 0.0);
    case ModelSpace::Kind::PoincareBall: return poincare_rotation(space.dim(), 0.0);
    case ModelSpace::Kind::Sphere: return sphere_rotation(space.dim(), {});
  }
  throw InvalidArgument("unknown model");
}

std::string WindField::describe() const {
  std::ostringstream os;
  os << space_.name() << " ";
  std::visit(overloaded{
                 [&](const EuclideanHomothety& p) {
                   os << "euclidean homothety sigma=" << p.sigma << " k=" << p.k;
                   if (p.c.size() && p.c.norm() > 0) os << " c=(" << p.c.transpose() << ")";
                 },
                 [&](const PoincareRotation& p) { os << "poincare rotation omega=" << p.omega; },
                 [&](const PoincareTranslation& p) { os << "poincare translation speed=" << p.speed; },
                 [&](const SphereRotation& p) {
                   os << "katok rotation a=(";
                   for (std::size_t i = 0; i < p.a.size(); ++i) os << (i ? "," : "") << p.a[i];
                   os << ")";
                 },
                 [&](const SphereNonHomothety& p) { os << "meridional drift eps=" << p.eps; },
             },
             params_);
  return os.str();
}

bool WindField::is_homothety() const { return !std::holds_alternative<SphereNonHomothety>(params_); }

double WindField::sigma() const {
  if (const auto* e = std::get_if<EuclideanHomothety>(&params_)) return e->sigma;
  if (!is_homothety()) throw InvalidArgument("not a homothety");
  return 0.0;
}

Tangent WindField::eval(const Point& x) const {
  return std::visit(
      overloaded{
          [&](const EuclideanHomothety& p) -> Tangent {
            Tangent w = 0.5 * p.sigma * x + p.c;
            w(0) += p.k * x(1);
            w(1) -= p.k * x(0);
            return w;
          },
          [&](const PoincareRotation& p) -> Tangent {
            Tangent w = Tangent::Zero(x.size());
            w(0) = p.omega * x(1);
            w(1) = -p.omega * x(0);
            return w;
          },
          [&](const PoincareTranslation& p) -> Tangent {
            Tangent w = -x(0) * x;
            w(0) += 0.5 * (1.0 + x.squaredNorm());
            return p.speed * w;
          },
          [&](const SphereRotation& p) -> Tangent {
            return omega_matrix(static_cast<int>(x.size()), p.a).transpose() * x;
          },
          [&](const SphereNonHomothety& p) -> Tangent {
            const MeridianFrame f = meridian_frame(x);
            return p.eps * meridian_unit(f, f.phi);
          },
      },
      params_);
}

Matrix WindField::jacobian(const Point& x) const {
  const int d = static_cast<int>(x.size());
  return std::visit(
      overloaded{
          [&](const EuclideanHomothety& p) -> Matrix {
            Matrix a = 0.5 * p.sigma * Matrix::Identity(d, d);
            a(0, 1) += p.k;
            a(1, 0) -= p.k;
            return a;
          },
          [&](const PoincareRotation& p) -> Matrix {
            Matrix a = Matrix::Zero(d, d);
            a(0, 1) = p.omega;
            a(1, 0) = -p.omega;
            return a;
          },
          [&](const PoincareTranslation& p) -> Matrix {
            const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(d, 0);
            return p.speed * (e1 * x.transpose() - x * e1.transpose() - x(0) * Matrix::Identity(d, d));
          },
          [&](const SphereRotation& p) -> Matrix { return omega_matrix(d, p.a).transpose(); },
          [&](const SphereNonHomothety&) -> Matrix {
            const double h = 1e-6;
            Matrix jac(d, d);
            for (int j = 0; j < d; ++j) {
              const Eigen::VectorXd e = h * Eigen::VectorXd::Unit(d, j);
              jac.col(j) = (eval(x + e) - eval(x - e)) / (2.0 * h);
            }
            return jac;
          },
      },
      params_);
}

double WindField::norm_squared(const Point& x) const { return space_.norm_squared(x, eval(x)); }
double WindField::norm(const Point& x) const { return std::sqrt(norm_squared(x)); }

bool WindField::admissible(const Point& x) const {
  if (!space_.contains(x)) return false;
  try {
    return norm_squared(x) < 1.0;
  } catch (const DomainError&) {
    return false;
  }
}

Point WindField::flow(double t, const Point& x) const {
  return std::visit(
      overloaded{
          [&](const EuclideanHomothety& p) -> Point {
            Point y = x;
            const cd mu(0.5 * p.sigma, -p.k);
            const cd z0(x(0), x(1)), cz(p.c(0), p.c(1));
            const cd z = std::exp(mu * t) * z0 + cz * expm1_over(mu, t);
            y(0) = z.real();
            y(1) = z.imag();
            const double scale = std::exp(0.5 * p.sigma * t);
            const double shift = expm1_over(cd(0.5 * p.sigma, 0.0), t).real();
            for (int j = 2; j < x.size(); ++j) y(j) = scale * x(j) + p.c(j) * shift;
            return y;
          },
          [&](const PoincareRotation& p) -> Point {
            Point y = x;
            rotate_plane(y, p.omega * t);
            return y;
          },
          [&](const PoincareTranslation& p) -> Point {
            const Eigen::VectorXd a = std::tanh(0.5 * p.speed * t) * Eigen::VectorXd::Unit(x.size(), 0);
            return mobius::add(a, x);
          },
          [&](const SphereRotation& p) -> Point {
            return rot_transpose(static_cast<int>(x.size()), p.a, t) * x;
          },
          [&](const SphereNonHomothety& p) -> Point {
            const MeridianFrame f = meridian_frame(x);
            const double phi = f.phi + p.eps * t;
            if (phi <= 0.0 || phi >= M_PI) throw DomainError("meridional flow reaches a pole");
            return meridian_point(f, phi);
          },
      },
      params_);
}

Tangent WindField::flow_differential(double t, const Point& x, const Tangent& v) const {
  return std::visit(
      overloaded{
          [&](const EuclideanHomothety& p) -> Tangent {
            Tangent y = v;
            const cd mu(0.5 * p.sigma, -p.k);
            const cd z = std::exp(mu * t) * cd(v(0), v(1));
            y(0) = z.real();
            y(1) = z.imag();
            const double scale = std::exp(0.5 * p.sigma * t);
            for (int j = 2; j < v.size(); ++j) y(j) = scale * v(j);
            return y;
          },
          [&](const PoincareRotation& p) -> Tangent {
            Tangent y = v;
            rotate_plane(y, p.omega * t);
            return y;
          },
          [&](const PoincareTranslation& p) -> Tangent {
            const Eigen::VectorXd a = std::tanh(0.5 * p.speed * t) * Eigen::VectorXd::Unit(x.size(), 0);
            return mobius::add_jacobian(a, x) * v;
          },
          [&](const SphereRotation& p) -> Tangent {
            return rot_transpose(static_cast<int>(x.size()), p.a, t) * v;
          },
          [&](const SphereNonHomothety& p) -> Tangent {
            const MeridianFrame f = meridian_frame(x);
            const double phi = f.phi + p.eps * t;
            if (phi <= 0.0 || phi >= M_PI) throw DomainError("meridional flow reaches a pole");
            const Tangent az = azimuth_unit(f);
            const double alpha = v.dot(az);
            const double beta = v.dot(meridian_unit(f, f.phi));
            return alpha * std::sin(phi) / std::sin(f.phi) * az + beta * meridian_unit(f, phi);
          },
      },
      params_);
}

Matrix lie_derivative(const WindField& w, const Point& x) {
  const ModelSpace& space = w.space();
  space.require(x);
  const LocalChart chart = space.local_chart(x);
  const int n = chart.dim();
  const Eigen::VectorXd u0 = chart.base();

  auto chart_wind = [&](const Eigen::VectorXd& u) { return chart.pull_vector(u, w.eval(chart.embed(u))); };
  auto chart_metric = [&](const Eigen::VectorXd& u) {
    const Matrix j = chart.jacobian(u);
    return Matrix(j.transpose() * space.metric(chart.embed(u)) * j);
  };

  const double step = 1e-6;
  Matrix dw(n, n);  // dw(k, j) = d_j W^k
  Tensor3 dh(n);
  for (int j = 0; j < n; ++j) {
    const Eigen::VectorXd e = step * Eigen::VectorXd::Unit(n, j);
    dw.col(j) = (chart_wind(u0 + e) - chart_wind(u0 - e)) / (2.0 * step);
    dh[j] = (chart_metric(u0 + e) - chart_metric(u0 - e)) / (2.0 * step);
  }
  const Eigen::VectorXd w0 = chart_wind(u0);
  const Matrix h0 = chart_metric(u0);

  Matrix lie = h0 * dw + (h0 * dw).transpose();
  for (int k = 0; k < n; ++k) lie += w0(k) * dh[k];

  // Orthonormal frame E with E^T h0 E = I.
  const Eigen::LLT<Matrix> llt(h0);
  const Matrix e = llt.matrixU().solve(Matrix::Identity(n, n));
  return e.transpose() * lie * e;
}

double lie_derivative_residual(const WindField& w, const Point& x) {
  const Matrix lie = lie_derivative(w, x);
  const double sigma = w.is_homothety() ? w.sigma() : 0.0;
  return (lie - sigma * Matrix::Identity(lie.rows(), lie.cols())).cwiseAbs().maxCoeff();
}

Point numeric_flow(const WindField& w, double t, const Point& x, double tol) {
  const ModelSpace& space = w.space();
  const double dir = t >= 0 ? 1.0 : -1.0;
  detail::OdeRhs rhs = [&](const detail::OdeState& s, detail::OdeState& ds, double) {
    const Eigen::Map<const Eigen::VectorXd> p(s.data(), static_cast<Eigen::Index>(s.size()));
    const Tangent v = w.eval(p);
    for (std::size_t i = 0; i < s.size(); ++i) ds[i] = dir * v(static_cast<Eigen::Index>(i));
  };
  detail::StepHook hook = [&](detail::OdeState& s, double) {
    if (space.kind() == ModelSpace::Kind::Sphere) {
      Eigen::Map<Eigen::VectorXd> p(s.data(), static_cast<Eigen::Index>(s.size()));
      p.normalize();
    }
  };
  detail::OdeOptions opt;
  opt.abs_tol = tol;
  opt.rel_tol = tol;
  const detail::OdeState x0(x.data(), x.data() + x.size());
  const auto out = detail::integrate_grid(rhs, x0, {0.0, std::abs(t)}, opt, hook);
  return Eigen::Map<const Eigen::VectorXd>(out.back().data(), x.size());
}

double admissible_radius(const WindField& w) {
  if (const auto* e = std::get_if<EuclideanHomothety>(&w.params())) {
    if (w.space().dim() != 2 || e->c.norm() != 0.0)
      throw InvalidArgument("admissible region is a disc only for planar winds without translation");
    return 1.0 / std::sqrt(0.25 * e->sigma * e->sigma + e->k * e->k);
  }
  if (const auto* r = std::get_if<PoincareRotation>(&w.params())) {
    if (r->omega == 0.0) return 1.0;
    return std::sqrt(r->omega * r->omega + 1.0) - std::abs(r->omega);
  }
  throw InvalidArgument("admissible region is not a centred disc for this wind");
}

}  // namespace zermelo
