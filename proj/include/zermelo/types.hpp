#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace zermelo {

/// Coordinates of a point in the representation space of a model: chart
/// coordinates for the flat and hyperbolic models, ambient R^{n+1}
/// coordinates for the sphere.
using Point = Eigen::VectorXd;
/// Components of a tangent vector in the same representation as Point.
using Tangent = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Rank-3 array indexed as gamma[i](j, k).
using Tensor3 = std::vector<Matrix>;

/// Point outside the domain of a chart, or outside the admissible region.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure failed (no bracket, step collapse, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zermelo
