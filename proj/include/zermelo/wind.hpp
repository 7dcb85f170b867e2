#pragma once

#include <variant>
#include <vector>

#include "zermelo/model_space.hpp"

namespace zermelo {

/// W(x) = (1/2 sigma I + k J) x + c on R^n, with J = [[0, 1], [-1, 0]] acting
/// on the first two coordinates. Lie derivative of h is sigma h.
struct EuclideanHomothety {
  double sigma = 0.0;
  double k = 0.0;
  Eigen::VectorXd c;  // empty means zero
};

/// W(x) = omega J x on the Poincare ball (rotation about the origin).
struct PoincareRotation {
  double omega = 0.0;
};

/// Killing field of hyperbolic translation along the first axis,
/// W(x) = speed ((1 + |x|^2)/2 e_1 - x_1 x); |W|_h = speed at the origin.
struct PoincareTranslation {
  double speed = 0.0;
};

/// W(p) = p Omega on S^n, Omega = a_1 J (+) ... (+) a_m J (+ 0 when n even).
struct SphereRotation {
  std::vector<double> a;
};

/// W = eps d/dphi in the chart (theta, phi) -> (sin th sin ph, cos th sin ph,
/// cos ph) of S^2: a unit-speed meridional drift, not a homothety.
struct SphereNonHomothety {
  double eps = 0.3;
};

using WindParams = std::variant<EuclideanHomothety, PoincareRotation, PoincareTranslation,
                                SphereRotation, SphereNonHomothety>;

/// A wind field on a model space: evaluation, flow, flow differential.
class WindField {
 public:
  static WindField euclidean(int n, double sigma, double k, Eigen::VectorXd c = {});
  static WindField poincare_rotation(int n, double omega);
  static WindField poincare_translation(int n, double speed);
  /// Validates a_1 >= ... >= a_m >= 0 and, if `require_unit_bound`, a_1 < 1.
  static WindField sphere_rotation(int n, std::vector<double> a, bool require_unit_bound = true);
  static WindField sphere_non_homothety(double eps);
  /// Zero wind on the given space.
  static WindField calm(const ModelSpace& space);

  const ModelSpace& space() const { return space_; }
  const WindParams& params() const { return params_; }
  std::string describe() const;

  bool is_homothety() const;
  /// The constant sigma with L_W h = sigma h. Throws InvalidArgument for the
  /// non-homothety field.
  double sigma() const;

  Tangent eval(const Point& x) const;
  /// Coordinate Jacobian dW^i/dx^j in the representation coordinates.
  Matrix jacobian(const Point& x) const;
  double norm(const Point& x) const;
  double norm_squared(const Point& x) const;
  /// True iff |W(x)|_h < 1.
  bool admissible(const Point& x) const;

  /// Flow phi(t, x) solving x' = W(x), x(0) = x.
  Point flow(double t, const Point& x) const;
  /// Differential of phi(t, .) at x applied to v.
  Tangent flow_differential(double t, const Point& x, const Tangent& v) const;

 private:
  WindField(ModelSpace space, WindParams params);
  ModelSpace space_;
  WindParams params_;
};

/// Lie derivative L_W h at x expressed in an h-orthonormal frame of local_chart(x),
/// computed by central differences of W and h in that chart.
Matrix lie_derivative(const WindField& w, const Point& x);
/// max |(L_W h)_ij - sigma h_ij| in an orthonormal frame; sigma = 0 is used for
/// the non-homothety field.
double lie_derivative_residual(const WindField& w, const Point& x);

/// Reference flow by adaptive Runge-Kutta integration of x' = W(x); used to
/// check the closed-form flows.
Point numeric_flow(const WindField& w, double t, const Point& x, double tol = 1e-12);

/// Radius of the admissible disc {|W| < 1} for rotation-type winds centred at
/// the origin (Euclidean homothety with c = 0, Poincare rotation).
double admissible_radius(const WindField& w);

}  // namespace zermelo
