#pragma once

#include "zermelo/wind.hpp"

namespace zermelo {

/// Randers metric solving the navigation problem for (h, W):
///
///   F(x, y) = (sqrt(lambda |y|^2 + W_0^2) - W_0) / lambda,
///   lambda = 1 - |W|^2,  W_0 = h(W, y).
///
/// Evaluation is only defined on the admissible region |W| < 1; points with
/// |W|^2 > 1 - kAdmissibleMargin are rejected.
class RandersMetric {
 public:
  static constexpr double kAdmissibleMargin = 1e-9;

  explicit RandersMetric(WindField wind) : wind_(std::move(wind)) {}

  const WindField& wind() const { return wind_; }
  const ModelSpace& space() const { return wind_.space(); }

  bool admissible(const Point& x) const;
  /// Throws DomainError when x is outside the chart or the admissible region.
  void require_admissible(const Point& x) const;

  /// F(x, y); F(x, 0) = 0.
  double norm(const Point& x, const Tangent& y) const;

  struct DefiningData {
    Matrix a;           // a_ij = (lambda h_ij + W_i W_j) / lambda^2
    Eigen::VectorXd b;  // b_i = -W_i / lambda
  };
  DefiningData defining_data(const Point& x) const;

  /// Fundamental tensor g_ij = (1/2 F^2)_{y^i y^j}, analytic Randers form
  /// g = (F/alpha)(a - l l^T) + (l + b)(l + b)^T with l = a y / alpha.
  /// On the sphere the ambient matrix is returned; restrict it to T_x.
  Matrix fundamental_tensor(const Point& x, const Tangent& y) const;

  /// y / F(x, y).
  Tangent normalize(const Point& x, const Tangent& y) const;

 private:
  WindField wind_;
};

}  // namespace zermelo
