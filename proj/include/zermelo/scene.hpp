#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zermelo/geodesic.hpp"

namespace zermelo {

/// Parse failure; the message carries "source:line: ...".
class ConfigError : public InvalidArgument {
 public:
  ConfigError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Flat `key = value` scene description. `#` starts a comment; blank lines are
/// ignored; keys are unique. Numbers accept decimal literals, `pi`, `p/q` and
/// `sqrt(x)`; lists are comma separated.
///
/// Recognised keys:
///   model     euclidean | sphere | poincare
///   dim       manifold dimension (default 2)
///   wind      calm | homothety | poincare-rotation | poincare-translation |
///             katok | meridional
///   sigma k c omega speed a eps   wind parameters
///   x0 y0     initial point and velocity (geodesic)
///   u0        initial base direction rho'(0) instead of y0
///   orientation forward | reverse
///   T samples duration and number of sample intervals
///   p q       endpoints (navigate)
///   csv svg   output paths
class SceneConfig {
 public:
  static SceneConfig parse(std::string_view text, const std::string& source = "<config>");
  static SceneConfig load(const std::string& path);

  /// Canonical form: one `key = value` per line in key order.
  std::string render() const;

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  std::string text(const std::string& key, const std::string& fallback = "") const;
  double number(const std::string& key, double fallback) const;
  double number(const std::string& key) const;
  int integer(const std::string& key, int fallback) const;
  std::vector<double> list(const std::string& key) const;
  Eigen::VectorXd vector(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  const std::map<std::string, std::string>& entries() const { return entries_; }
  bool operator==(const SceneConfig& o) const { return entries_ == o.entries_; }

  /// Throws ConfigError pointing at the line that defined `key`.
  [[noreturn]] void fail(const std::string& key, const std::string& what) const;

 private:
  std::map<std::string, std::string> entries_;
  std::map<std::string, int> lines_;
  std::string source_ = "<config>";
};

/// Parses one scalar: decimal, `pi`, `p/q`, `sqrt(x)`, optionally negated.
double parse_number(std::string_view s);

ModelSpace build_space(const SceneConfig& c);
WindField build_wind(const SceneConfig& c);

}  // namespace zermelo
