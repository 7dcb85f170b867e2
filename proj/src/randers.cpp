#include "zermelo/randers.hpp"

#include <cmath>
#include <sstream>

namespace zermelo {

bool RandersMetric::admissible(const Point& x) const {
  if (!space().contains(x)) return false;
  try {
    return wind_.norm_squared(x) <= 1.0 - kAdmissibleMargin;
  } catch (const DomainError&) {
    return false;
  }
}

void RandersMetric::require_admissible(const Point& x) const {
  space().require(x);
  const double w2 = wind_.norm_squared(x);
  if (!(w2 <= 1.0 - kAdmissibleMargin)) {
    std::ostringstream os;
    os << "point outside the admissible region |W| < 1 (|W|^2 = " << w2 << ")";
    throw DomainError(os.str());
  }
}

double RandersMetric::norm(const Point& x, const Tangent& y) const {
  require_admissible(x);
  if (y.isZero(0.0)) return 0.0;
  const Tangent w = wind_.eval(x);
  const double lambda = 1.0 - space().norm_squared(x, w);
  const double w0 = space().inner(x, w, y);
  const double yy = space().norm_squared(x, y);
  return (std::sqrt(lambda * yy + w0 * w0) - w0) / lambda;
}

RandersMetric::DefiningData RandersMetric::defining_data(const Point& x) const {
  require_admissible(x);
  const Matrix h = space().metric(x);
  const Tangent w = wind_.eval(x);
  const Eigen::VectorXd wl = h * w;
  const double lambda = 1.0 - w.dot(wl);
  return {(lambda * h + wl * wl.transpose()) / (lambda * lambda), -wl / lambda};
}

Matrix RandersMetric::fundamental_tensor(const Point& x, const Tangent& y) const {
  if (y.isZero(0.0)) throw InvalidArgument("fundamental tensor is undefined at y = 0");
  const DefiningData ab = defining_data(x);
  const Eigen::VectorXd ay = ab.a * y;
  const double alpha = std::sqrt(y.dot(ay));
  const double f = alpha + ab.b.dot(y);
  const Eigen::VectorXd l = ay / alpha;
  return (f / alpha) * (ab.a - l * l.transpose()) + (l + ab.b) * (l + ab.b).transpose();
}

Tangent RandersMetric::normalize(const Point& x, const Tangent& y) const {
  const double f = norm(x, y);
  if (!(f > 0.0)) throw InvalidArgument("cannot normalize the zero vector");
  return y / f;
}

}  // namespace zermelo
