#pragma once

#include <functional>

#include "zermelo/types.hpp"

namespace zermelo {

/// Spray coefficients G^i(u, w) in some coordinate chart.
using SprayFunction = std::function<Eigen::VectorXd(const Eigen::VectorXd&, const Eigen::VectorXd&)>;

/// Riemann curvature R^i_k(u, y) of a spray,
///
///   R^i_k = 2 dG^i/du^k - y^j d2G^i/du^j dy^k + 2 G^j d2G^i/dy^j dy^k
///           - dG^i/dy^j dG^j/dy^k,
///
/// with every derivative taken by central differences of relative step `step`.
Matrix spray_riemann(const SprayFunction& spray, const Eigen::VectorXd& u, const Eigen::VectorXd& y,
                     double step = 1e-4);

/// Flag curvature g_y(R_y v, v) / (g_y(y,y) g_y(v,v) - g_y(y,v)^2) for a given
/// Riemann operator and fundamental tensor g_y, all in chart components.
double flag_curvature_from(const Matrix& riemann, const Matrix& g, const Eigen::VectorXd& y,
                           const Eigen::VectorXd& v);

}  // namespace zermelo
