#include "zermelo/model_space.hpp"

#include <cmath>
#include <sstream>

namespace zermelo {

namespace {

constexpr double kSphereTol = 1e-12;

Matrix orthonormal_complement(const Point& p) {
  const int d = static_cast<int>(p.size());
  Eigen::HouseholderQR<Matrix> qr(p);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  return q.rightCols(d - 1);
}

// Euclidean polar data of the Poincare conformal factor c = 4 / (1 - r^2)^2.
double poincare_factor(const Point& x) {
  const double s = 1.0 - x.squaredNorm();
  return 4.0 / (s * s);
}

}  // namespace

// ---------------------------------------------------------------- LocalChart

LocalChart LocalChart::identity(const Point& x) {
  LocalChart c;
  c.dim_ = static_cast<int>(x.size());
  c.identity_ = true;
  c.base_ = x;
  return c;
}

LocalChart LocalChart::gnomonic(const Point& p) {
  LocalChart c;
  const int d = static_cast<int>(p.size());
  c.dim_ = d - 1;
  c.identity_ = false;
  c.base_ = Eigen::VectorXd::Zero(d - 1);
  c.frame_.resize(d, d);
  c.frame_.leftCols(d - 1) = orthonormal_complement(p);
  c.frame_.col(d - 1) = p.normalized();
  return c;
}

Point LocalChart::embed(const Eigen::VectorXd& u) const {
  if (identity_) return u;
  Eigen::VectorXd z(dim_ + 1);
  z << u, 1.0;
  return frame_ * z / std::sqrt(1.0 + u.squaredNorm());
}

Matrix LocalChart::jacobian(const Eigen::VectorXd& u) const {
  if (identity_) return Matrix::Identity(dim_, dim_);
  const double r = std::sqrt(1.0 + u.squaredNorm());
  Eigen::VectorXd z(dim_ + 1);
  z << u, 1.0;
  Matrix inner = -z * u.transpose() / (r * r * r);
  inner.topRows(dim_) += Matrix::Identity(dim_, dim_) / r;
  return frame_ * inner;
}

Eigen::VectorXd LocalChart::second(const Eigen::VectorXd& u, const Eigen::VectorXd& w) const {
  if (identity_) return Eigen::VectorXd::Zero(dim_);
  const double r = std::sqrt(1.0 + u.squaredNorm());
  const double uw = u.dot(w);
  const double r1 = uw / r;
  const double r2 = w.squaredNorm() / r - uw * uw / (r * r * r);
  Eigen::VectorXd z(dim_ + 1), z1(dim_ + 1);
  z << u, 1.0;
  z1 << w, 0.0;
  const Eigen::VectorXd local =
      -2.0 * z1 * r1 / (r * r) - z * r2 / (r * r) + 2.0 * z * r1 * r1 / (r * r * r);
  return frame_ * local;
}

Matrix LocalChart::pseudo_inverse(const Eigen::VectorXd& u) const {
  if (identity_) return Matrix::Identity(dim_, dim_);
  const Matrix j = jacobian(u);
  return (j.transpose() * j).ldlt().solve(j.transpose());
}

Eigen::VectorXd LocalChart::pull_vector(const Eigen::VectorXd& u, const Tangent& y) const {
  return pseudo_inverse(u) * y;
}

// ---------------------------------------------------------------- ModelSpace

ModelSpace::ModelSpace(Kind k, int n) : kind_(k), dim_(n) {
  if (n < 2) throw InvalidArgument("model space dimension must be at least 2");
}

ModelSpace ModelSpace::euclidean(int n) { return {Kind::Euclidean, n}; }
ModelSpace ModelSpace::sphere(int n) { return {Kind::Sphere, n}; }
ModelSpace ModelSpace::poincare_ball(int n) { return {Kind::PoincareBall, n}; }

double ModelSpace::curvature() const {
  switch (kind_) {
    case Kind::Euclidean: return 0.0;
    case Kind::Sphere: return 1.0;
    case Kind::PoincareBall: return -1.0;
  }
  return 0.0;
}

std::string ModelSpace::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Euclidean: os << "R^"; break;
    case Kind::Sphere: os << "S^"; break;
    case Kind::PoincareBall: os << "D^"; break;
  }
  os << dim_;
  return os.str();
}

bool ModelSpace::contains(const Point& x) const {
  if (x.size() != ambient_dim() || !x.allFinite()) return false;
  switch (kind_) {
    case Kind::Euclidean: return true;
    case Kind::Sphere: return std::abs(x.norm() - 1.0) <= kSphereTol;
    case Kind::PoincareBall: return x.squaredNorm() < 1.0;
  }
  return false;
}

void ModelSpace::require(const Point& x) const {
  if (!contains(x)) {
    std::ostringstream os;
    os << "point outside the chart domain of " << name() << ": (" << x.transpose() << ")";
    throw DomainError(os.str());
  }
}

void ModelSpace::require_tangent(const Point& x, const Tangent& v) const {
  if (v.size() != ambient_dim()) throw DomainError("tangent vector has wrong dimension");
  if (kind_ == Kind::Sphere && std::abs(x.dot(v)) > kSphereTol * (1.0 + v.norm()))
    throw DomainError("vector is not tangent to the sphere");
}

void ModelSpace::project(Point& x, Tangent& v) const {
  if (kind_ != Kind::Sphere) return;
  x.normalize();
  v -= x.dot(v) * x;
}

Point ModelSpace::project_point(const Point& x) const {
  return kind_ == Kind::Sphere ? Point(x.normalized()) : x;
}

Tangent ModelSpace::project_tangent(const Point& x, const Tangent& v) const {
  if (kind_ != Kind::Sphere) return v;
  const Point p = x.normalized();
  return v - p.dot(v) * p;
}

Matrix ModelSpace::metric(const Point& x) const {
  const int d = ambient_dim();
  if (kind_ == Kind::PoincareBall) return poincare_factor(x) * Matrix::Identity(d, d);
  return Matrix::Identity(d, d);
}

Matrix ModelSpace::metric_inverse(const Point& x) const {
  const int d = ambient_dim();
  if (kind_ == Kind::PoincareBall) return Matrix::Identity(d, d) / poincare_factor(x);
  return Matrix::Identity(d, d);
}

Tensor3 ModelSpace::metric_partials(const Point& x) const {
  const int d = ambient_dim();
  Tensor3 out(d, Matrix::Zero(d, d));
  if (kind_ == Kind::PoincareBall) {
    const double s = 1.0 - x.squaredNorm();
    for (int k = 0; k < d; ++k)
      out[k] = 16.0 * x(k) / (s * s * s) * Matrix::Identity(d, d);
  }
  return out;
}

double ModelSpace::inner(const Point& x, const Tangent& u, const Tangent& v) const {
  const double c = kind_ == Kind::PoincareBall ? poincare_factor(x) : 1.0;
  return c * u.dot(v);
}

double ModelSpace::norm_squared(const Point& x, const Tangent& v) const { return inner(x, v, v); }

double ModelSpace::norm(const Point& x, const Tangent& v) const {
  return std::sqrt(norm_squared(x, v));
}

Tensor3 ModelSpace::christoffel(const Point& x) const {
  const int d = ambient_dim();
  Tensor3 g(d, Matrix::Zero(d, d));
  switch (kind_) {
    case Kind::Euclidean:
      break;
    case Kind::Sphere:
      for (int i = 0; i < d; ++i) g[i] = x(i) * Matrix::Identity(d, d);
      break;
    case Kind::PoincareBall: {
      // h = e^{2f} delta with df_k = 2 x_k / (1 - |x|^2)
      const Eigen::VectorXd df = 2.0 * x / (1.0 - x.squaredNorm());
      for (int i = 0; i < d; ++i) {
        g[i].row(i) += df.transpose();
        g[i].col(i) += df;
        g[i].diagonal().array() -= df(i);
      }
      break;
    }
  }
  return g;
}

Tangent ModelSpace::spray(const Point& x, const Tangent& y) const {
  switch (kind_) {
    case Kind::Euclidean:
      return Tangent::Zero(y.size());
    case Kind::Sphere:
      return 0.5 * y.squaredNorm() * x;
    case Kind::PoincareBall: {
      const Eigen::VectorXd df = 2.0 * x / (1.0 - x.squaredNorm());
      return df.dot(y) * y - 0.5 * y.squaredNorm() * df;
    }
  }
  return Tangent::Zero(y.size());
}

Matrix ModelSpace::tangent_basis(const Point& x) const {
  switch (kind_) {
    case Kind::Euclidean:
      return Matrix::Identity(dim_, dim_);
    case Kind::Sphere:
      return orthonormal_complement(x);
    case Kind::PoincareBall:
      return Matrix::Identity(dim_, dim_) / std::sqrt(poincare_factor(x));
  }
  return {};
}

LocalChart ModelSpace::local_chart(const Point& x) const {
  if (kind_ == Kind::Sphere) return LocalChart::gnomonic(x);
  return LocalChart::identity(x);
}

ModelSpace::State ModelSpace::geodesic(const Point& x, const Tangent& v, double t) const {
  const double speed = norm(x, v);
  if (!(speed > 0.0)) throw InvalidArgument("geodesic requires a nonzero velocity");
  switch (kind_) {
    case Kind::Euclidean:
      return {x + t * v, v};
    case Kind::Sphere: {
      const double c = std::cos(speed * t), s = std::sin(speed * t);
      return {c * x + s * v / speed, -speed * s * x + c * v};
    }
    case Kind::PoincareBall: {
      // Translate x to the origin, follow the radial geodesic, translate back.
      const Eigen::VectorXd dir = v.normalized();
      const double th = std::tanh(0.5 * speed * t);
      const Eigen::VectorXd z = th * dir;
      const Eigen::VectorXd zdot = 0.5 * speed * (1.0 - th * th) * dir;
      return {mobius::add(x, z), mobius::add_jacobian(x, z) * zdot};
    }
  }
  return {x, v};
}

double ModelSpace::distance(const Point& p, const Point& q) const {
  switch (kind_) {
    case Kind::Euclidean:
      return (p - q).norm();
    case Kind::Sphere: {
      const double c = p.dot(q);
      return std::atan2((q - c * p).norm(), c);
    }
    case Kind::PoincareBall: {
      const double delta = (p - q).squaredNorm() / ((1.0 - p.squaredNorm()) * (1.0 - q.squaredNorm()));
      return 2.0 * std::asinh(std::sqrt(delta));
    }
  }
  return 0.0;
}

Tangent ModelSpace::log(const Point& p, const Point& q, bool* tie) const {
  if (tie) *tie = false;
  switch (kind_) {
    case Kind::Euclidean:
      return q - p;
    case Kind::Sphere: {
      const double d = distance(p, q);
      Tangent perp = q - p.dot(q) * p;
      const double pn = perp.norm();
      if (d == 0.0) return Tangent::Zero(p.size());
      if (pn < 1e-14) {
        if (tie) *tie = true;
        return d * tangent_basis(p).col(0);
      }
      return d * perp / pn;
    }
    case Kind::PoincareBall: {
      const Eigen::VectorXd z = mobius::add(-p, q);
      const double zn = z.norm();
      if (zn == 0.0) return Tangent::Zero(p.size());
      const double d = 2.0 * std::atanh(zn);
      return (1.0 - p.squaredNorm()) * 0.5 * d * z / zn;
    }
  }
  return {};
}

Eigen::VectorXd chart_spray(const ModelSpace& space, const LocalChart& chart,
                            const Eigen::VectorXd& u, const Eigen::VectorXd& w) {
  const Matrix j = chart.jacobian(u);
  const Point x = chart.embed(u);
  const Eigen::VectorXd rhs = 2.0 * space.spray(x, j * w) + chart.second(u, w);
  return 0.5 * chart.pseudo_inverse(u) * rhs;
}

namespace {

Tensor3 chart_christoffel(const ModelSpace& space, const LocalChart& chart, const Eigen::VectorXd& u) {
  const int n = chart.dim();
  Tensor3 g(n, Matrix::Zero(n, n));
  std::vector<Eigen::VectorXd> diag(n);
  for (int j = 0; j < n; ++j) diag[j] = chart_spray(space, chart, u, Eigen::VectorXd::Unit(n, j));
  for (int j = 0; j < n; ++j) {
    for (int k = j; k < n; ++k) {
      Eigen::VectorXd gjk;
      if (j == k) {
        gjk = 2.0 * diag[j];
      } else {
        const Eigen::VectorXd w = Eigen::VectorXd::Unit(n, j) + Eigen::VectorXd::Unit(n, k);
        gjk = chart_spray(space, chart, u, w) - diag[j] - diag[k];
      }
      for (int i = 0; i < n; ++i) g[i](j, k) = g[i](k, j) = gjk(i);
    }
  }
  return g;
}

}  // namespace

double ModelSpace::sectional_curvature(const Point& x, const Tangent& u, const Tangent& v) const {
  require(x);
  const LocalChart chart = local_chart(x);
  const int n = chart.dim();
  const Eigen::VectorXd u0 = chart.base();
  const Eigen::VectorXd a = chart.pull_vector(u0, u);
  const Eigen::VectorXd b = chart.pull_vector(u0, v);

  const Tensor3 g0 = chart_christoffel(*this, chart, u0);
  const double step = 1e-5;
  std::vector<Tensor3> dg(n);  // dg[k][i](l, j) = d_k gamma^i_lj
  for (int k = 0; k < n; ++k) {
    const Eigen::VectorXd e = step * Eigen::VectorXd::Unit(n, k);
    const Tensor3 gp = chart_christoffel(*this, chart, u0 + e);
    const Tensor3 gm = chart_christoffel(*this, chart, u0 - e);
    dg[k].resize(n);
    for (int i = 0; i < n; ++i) dg[k][i] = (gp[i] - gm[i]) / (2.0 * step);
  }

  // R(a, b) b with R^i_jkl = d_k g^i_lj - d_l g^i_kj + g^i_km g^m_lj - g^i_lm g^m_kj
  Eigen::VectorXd rab = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double r = dg[k][i](l, j) - dg[l][i](k, j);
          for (int m = 0; m < n; ++m) r += g0[i](k, m) * g0[m](l, j) - g0[i](l, m) * g0[m](k, j);
          acc += r * b(j) * a(k) * b(l);
        }
    rab(i) = acc;
  }
  const Matrix j = chart.jacobian(u0);
  const Matrix h = j.transpose() * metric(chart.embed(u0)) * j;
  const double denom = a.dot(h * a) * b.dot(h * b) - std::pow(a.dot(h * b), 2);
  if (denom <= 1e-14 * a.dot(h * a) * b.dot(h * b))
    throw InvalidArgument("sectional curvature requires linearly independent vectors");
  return rab.dot(h * a) / denom;
}

namespace mobius {

Eigen::VectorXd add(const Eigen::VectorXd& a, const Eigen::VectorXd& x) {
  const double ax = a.dot(x), aa = a.squaredNorm(), xx = x.squaredNorm();
  return ((1.0 + 2.0 * ax + xx) * a + (1.0 - aa) * x) / (1.0 + 2.0 * ax + aa * xx);
}

Matrix add_jacobian(const Eigen::VectorXd& a, const Eigen::VectorXd& x) {
  const int d = static_cast<int>(a.size());
  const double ax = a.dot(x), aa = a.squaredNorm(), xx = x.squaredNorm();
  const Eigen::VectorXd num = (1.0 + 2.0 * ax + xx) * a + (1.0 - aa) * x;
  const double den = 1.0 + 2.0 * ax + aa * xx;
  const Matrix dnum = a * (2.0 * a + 2.0 * x).transpose() + (1.0 - aa) * Matrix::Identity(d, d);
  const Eigen::VectorXd dden = 2.0 * a + 2.0 * aa * x;
  return dnum / den - num * dden.transpose() / (den * den);
}

}  // namespace mobius

}  // namespace zermelo
