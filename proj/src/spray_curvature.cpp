#include "zermelo/spray_curvature.hpp"

#include <algorithm>
#include <cmath>

namespace zermelo {

Matrix spray_riemann(const SprayFunction& spray, const Eigen::VectorXd& u, const Eigen::VectorXd& y,
                     double step) {
  const int n = static_cast<int>(u.size());
  const double hu = step * std::max(1.0, u.norm());
  const double hy = step * std::max(1.0, y.norm());
  auto e = [n](int i) { return Eigen::VectorXd::Unit(n, i); };

  const Eigen::VectorXd g0 = spray(u, y);
  Matrix gu(n, n), gy(n, n), mixed(n, n);  // column k holds the derivative in direction k
  std::vector<Matrix> gyy(n, Matrix(n, n));  // gyy[i](j, k) = d2 G^i / dy^j dy^k

  std::vector<Eigen::VectorXd> yp(n), ym(n);
  for (int k = 0; k < n; ++k) {
    gu.col(k) = (spray(u + hu * e(k), y) - spray(u - hu * e(k), y)) / (2.0 * hu);
    yp[k] = spray(u, y + hy * e(k));
    ym[k] = spray(u, y - hy * e(k));
    gy.col(k) = (yp[k] - ym[k]) / (2.0 * hy);
    // y^j d2G/du^j dy^k as a mixed difference along u + s y.
    mixed.col(k) = (spray(u + hu * y, y + hy * e(k)) - spray(u + hu * y, y - hy * e(k)) -
                    spray(u - hu * y, y + hy * e(k)) + spray(u - hu * y, y - hy * e(k))) /
                   (4.0 * hu * hy);
  }
  for (int j = 0; j < n; ++j) {
    const Eigen::VectorXd djj = (yp[j] - 2.0 * g0 + ym[j]) / (hy * hy);
    for (int i = 0; i < n; ++i) gyy[i](j, j) = djj(i);
    for (int k = j + 1; k < n; ++k) {
      const Eigen::VectorXd djk =
          (spray(u, y + hy * (e(j) + e(k))) - spray(u, y + hy * (e(j) - e(k))) -
           spray(u, y - hy * (e(j) - e(k))) + spray(u, y - hy * (e(j) + e(k)))) /
          (4.0 * hy * hy);
      for (int i = 0; i < n; ++i) gyy[i](j, k) = gyy[i](k, j) = djk(i);
    }
  }

  Matrix r = 2.0 * gu - mixed - gy * gy;
  for (int i = 0; i < n; ++i) r.row(i) += 2.0 * (gyy[i] * g0).transpose();
  return r;
}

double flag_curvature_from(const Matrix& riemann, const Matrix& g, const Eigen::VectorXd& y,
                           const Eigen::VectorXd& v) {
  const double gyy = y.dot(g * y), gvv = v.dot(g * v), gyv = y.dot(g * v);
  const double denom = gyy * gvv - gyv * gyv;
  if (denom <= 1e-12 * gyy * gvv) throw InvalidArgument("degenerate flag: y and v are linearly dependent");
  return v.dot(g * (riemann * v)) / denom;
}

}  // namespace zermelo
