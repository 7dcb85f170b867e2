#pragma once

#include <string>
#include <vector>

#include "zermelo/geodesic.hpp"

namespace zermelo {

/// Rotation rates of a Katok wind on S^n: W(p) = p Omega with
/// Omega = a_1 J (+) ... (+) a_m J (+ 0 when n = 2m is even).
struct KatokData {
  int n = 2;
  std::vector<double> a;  // padded to m entries, a_1 >= ... >= a_m >= 0, a_1 < 1

  /// Validates and pads; throws InvalidArgument on bad input.
  static KatokData make(int n, std::vector<double> a);
  int blocks() const { return static_cast<int>(a.size()); }
  WindField wind() const;
  RandersMetric metric() const { return RandersMetric(wind()); }
};

/// One orientation of an invariant great circle C_i (plane of coordinates
/// 2i, 2i+1, 0-based).
struct CensusEntry {
  int circle = 0;        // 0-based block index i
  int orientation = +1;  // +1 along the rotation, -1 against it
  double length = 0.0;   // F-length measured along the closed-form path
  double expected = 0.0; // 2 pi / (1 +- a_i)
  double ode_residual = 0.0;
  Point start;
  Tangent velocity;
};

/// The 2m closed geodesics through the invariant circles. The length is the
/// numerically located return time times the (quadrature) F-speed; the ODE
/// residual is the max distance to a direct integration over one period.
std::vector<CensusEntry> closed_geodesic_census(const KatokData& k);

struct ClosureReport {
  bool closed = false;
  int loops = 0;                      // smallest l with P(2 pi l) = P(0), P'(2 pi l) = P'(0)
  double position_gap_2pi = 0.0;      // |P(2 pi) - P(0)|
  double velocity_gap_2pi = 0.0;      // |P'(2 pi) - P'(0)|
  bool self_intersects_at_2pi = false;
  std::string message;
};

/// Checks closure of the F-geodesic with P(0) = x0, P'(0) = y0 (F = 1) at the
/// times 2 pi l, l = 1..max_loops, with tolerance 1e-8.
ClosureReport closure_test(const KatokData& k, const Point& x0, const Tangent& y0, int max_loops);
/// Same, reading the initial data off a path.
ClosureReport closure_test(const KatokData& k, const GeodesicPath& P, int max_loops);

/// Unit-speed F-geodesic through the north pole with rho'(0) = e_0 (n even).
GeodesicPath pole_geodesic(const KatokData& k, double T, int samples = 1024);

struct ZillerChoice {
  KatokData data;
  std::vector<std::string> warnings;
};

/// a_i = a / p_i with 1 < p_1 < ... < p_m pairwise coprime; n is 2m - 1 or 2m (default 2m).
/// Warns when a is within 1e-12 of a fraction with denominator <= 1000, since
/// then every geodesic closes.
ZillerChoice ziller_choice(int m, double a, const std::vector<int>& primes, int n = 0);

struct ClosedCount {
  int census = 0;   // invariant circles, both orientations
  int sampled = 0;  // random non-invariant geodesics examined
  int sampled_closed = 0;
};

/// Census entries plus a random sample of non-invariant geodesics, each put
/// through closure_test with the given budget.
ClosedCount count_closed_geodesics(const KatokData& k, int samples, int max_loops, unsigned seed = 7);

/// phi(r, S^h_r(p)): the F-geodesic sphere of radius r about p, 0 < r <= pi.
/// At r = pi every sample is the farthest point phi(pi, -p).
std::vector<Point> geodesic_sphere(const KatokData& k, const Point& p, double r, int samples);

/// Closed-form unit-speed F-geodesic on S^2 with rotation rate a:
/// P(t) = phi(t, cos t q + sin t (v - W_q)). Requires |q| = 1 and F(q, v) = 1.
GeodesicPath s2_geodesic(double a, const Point& q, const Tangent& v, double T, int samples = 1024,
                         Orientation orientation = Orientation::Forward);

}  // namespace zermelo
