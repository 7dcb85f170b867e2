#pragma once

#include <functional>
#include <string>

#include "zermelo/types.hpp"

namespace zermelo {

/// Local coordinate chart u -> x around a base point, used where a genuine
/// coordinate system is needed (curvature, Lie derivatives). For the flat and
/// hyperbolic models this is the identity; for the sphere it is the gnomonic
/// chart centred at the base point, so geodesics through the centre are lines.
class LocalChart {
 public:
  /// Identity chart; the base point has chart coordinates x.
  static LocalChart identity(const Point& x);
  /// Gnomonic chart of S^n centred at p (|p| = 1); p has coordinates 0.
  static LocalChart gnomonic(const Point& p);

  int dim() const { return dim_; }
  /// Chart coordinates of the point the chart was built around.
  const Eigen::VectorXd& base() const { return base_; }
  Point embed(const Eigen::VectorXd& u) const;
  /// d x n Jacobian of embed at u.
  Matrix jacobian(const Eigen::VectorXd& u) const;
  /// Second directional derivative d^2/ds^2 embed(u + s w) at s = 0.
  Eigen::VectorXd second(const Eigen::VectorXd& u, const Eigen::VectorXd& w) const;
  /// Chart components of a representation vector y at u (least squares).
  Eigen::VectorXd pull_vector(const Eigen::VectorXd& u, const Tangent& y) const;
  /// Left inverse of jacobian(u).
  Matrix pseudo_inverse(const Eigen::VectorXd& u) const;

 private:
  int dim_ = 0;
  bool identity_ = true;
  Eigen::VectorXd base_;
  Matrix frame_;  // orthogonal (n+1)x(n+1), last column = centre
};

/// One of the three constant-curvature backgrounds.
///
/// Euclidean(n): chart R^n, h = identity.
/// Sphere(n): unit sphere in R^{n+1}, ambient coordinates; tangent vectors
///   satisfy <p, v> = 0 and h is the ambient dot product.
/// PoincareBall(n): open unit ball, h = 4 delta / (1 - |x|^2)^2, curvature -1.
class ModelSpace {
 public:
  enum class Kind { Euclidean, Sphere, PoincareBall };

  static ModelSpace euclidean(int n);
  static ModelSpace sphere(int n);
  static ModelSpace poincare_ball(int n);

  Kind kind() const { return kind_; }
  /// Manifold dimension n.
  int dim() const { return dim_; }
  /// Length of the coordinate vectors (n, or n+1 for the sphere).
  int ambient_dim() const { return kind_ == Kind::Sphere ? dim_ + 1 : dim_; }
  /// Sectional curvature of the model: 0, +1 or -1.
  double curvature() const;
  std::string name() const;

  bool contains(const Point& x) const;
  /// Throws DomainError unless contains(x).
  void require(const Point& x) const;
  /// Throws DomainError unless v is tangent at x (sphere only).
  void require_tangent(const Point& x, const Tangent& v) const;

  /// Re-impose the sphere constraints |p| = 1, <p, v> = 0. No-op otherwise.
  void project(Point& x, Tangent& v) const;
  Point project_point(const Point& x) const;
  Tangent project_tangent(const Point& x, const Tangent& v) const;

  /// Metric coefficients h_ij(x). For the sphere this is the ambient identity,
  /// whose restriction to T_p S^n is the induced metric.
  Matrix metric(const Point& x) const;
  Matrix metric_inverse(const Point& x) const;
  /// Partial derivatives of the metric: result[k] = d h / d x^k.
  Tensor3 metric_partials(const Point& x) const;
  double inner(const Point& x, const Tangent& u, const Tangent& v) const;
  double norm(const Point& x, const Tangent& v) const;
  double norm_squared(const Point& x, const Tangent& v) const;

  /// Christoffel symbols gamma^i_jk. For the sphere these are the ambient
  /// coefficients p^i delta_jk of the constrained geodesic equation.
  Tensor3 christoffel(const Point& x) const;
  /// Spray coefficients G^i = 1/2 gamma^i_jk y^j y^k.
  Tangent spray(const Point& x, const Tangent& y) const;

  /// d x n matrix whose columns form an h-orthonormal basis of T_x.
  Matrix tangent_basis(const Point& x) const;
  LocalChart local_chart(const Point& x) const;

  struct State {
    Point x;
    Tangent v;
  };
  /// Closed-form geodesic with x(0) = x, x'(0) = v, evaluated at t
  /// (exponential map exp_x(t v) together with its velocity).
  State geodesic(const Point& x, const Tangent& v, double t) const;
  /// Riemannian distance.
  double distance(const Point& p, const Point& q) const;
  /// Initial velocity v of the minimizing geodesic with exp_p(v) = q, so that
  /// |v|_h = distance(p, q). Antipodal sphere points use the first vector of
  /// tangent_basis(p); `tie` is set when that convention was needed.
  Tangent log(const Point& p, const Point& q, bool* tie = nullptr) const;

  /// Sectional curvature of span{u, v} at x computed from finite differences
  /// of the Christoffel symbols in local_chart(x).
  double sectional_curvature(const Point& x, const Tangent& u, const Tangent& v) const;

 private:
  ModelSpace(Kind k, int n);
  Kind kind_;
  int dim_;
};

/// Riemannian spray in chart coordinates of a local chart; the chart-level
/// Christoffel symbols follow by polarization.
Eigen::VectorXd chart_spray(const ModelSpace& space, const LocalChart& chart,
                            const Eigen::VectorXd& u, const Eigen::VectorXd& w);

namespace mobius {
/// Mobius addition a (+) x in the Poincare ball.
Eigen::VectorXd add(const Eigen::VectorXd& a, const Eigen::VectorXd& x);
/// Jacobian with respect to x of a (+) x.
Matrix add_jacobian(const Eigen::VectorXd& a, const Eigen::VectorXd& x);
}  // namespace mobius

}  // namespace zermelo
