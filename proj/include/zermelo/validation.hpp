#pragma once

#include <random>
#include <string>
#include <vector>

#include "zermelo/geodesic.hpp"

namespace zermelo {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double value = 0.0;
  std::string bound;  // e.g. "< 1e-06"
};

/// Names accepted by run_suite.
std::vector<std::string> suite_names();
/// Runs one invariant suite; throws InvalidArgument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& name);
std::vector<CheckResult> run_all_suites();
std::string format_result(const CheckResult& r);

/// The homothety winds of the worked examples, labelled.
struct NamedWind {
  std::string label;
  WindField wind;
};
std::vector<NamedWind> example_winds();

/// Random point of the model (sphere: uniform; flat and hyperbolic: uniform
/// in the ball of the given Euclidean radius).
Point random_point(const ModelSpace& space, std::mt19937& rng, double radius = 0.9);
/// Random h-unit tangent vector at x.
Tangent random_unit(const ModelSpace& space, const Point& x, std::mt19937& rng);

struct Start {
  Point x;
  Tangent y;  // F(x, y) = 1
};
/// Rejection-samples (x, y) such that the flow-composed geodesic stays
/// admissible, checked on a grid of 64 steps over [0, T].
Start random_admissible_start(const RandersMetric& rd, std::mt19937& rng, double T, double radius = 0.9);

}  // namespace zermelo
