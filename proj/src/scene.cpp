#include "zermelo/scene.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace zermelo {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {"model", "dim", "wind",  "sigma",       "k", "c", "omega",
                                             "speed", "a",   "eps",   "x0",          "y0", "u0", "orientation",
                                             "T",     "samples", "p", "q",           "csv", "svg"};
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Canonical spelling of a value: trimmed, list items separated by ", ".
std::string normalize(std::string_view v) {
  std::string out;
  std::size_t start = 0;
  while (true) {
    const auto comma = v.find(',', start);
    const std::string_view item = trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start));
    if (!out.empty() || start > 0) out += ", ";
    out += item;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_plain(std::string_view s) {
  if (s == "pi") return M_PI;
  const std::string str(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not a number: '" + str + "'");
  }
  if (used != str.size()) throw InvalidArgument("not a number: '" + str + "'");
  return v;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& what)
    : InvalidArgument(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

double parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw InvalidArgument("empty number");
  if (s.front() == '-') return -parse_number(s.substr(1));
  if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') return std::sqrt(parse_number(s.substr(5, s.size() - 6)));
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    const double den = parse_number(s.substr(slash + 1));
    if (den == 0.0) throw InvalidArgument("division by zero");
    return parse_number(s.substr(0, slash)) / den;
  }
  return parse_plain(s);
}

SceneConfig SceneConfig::parse(std::string_view text, const std::string& source) {
  SceneConfig c;
  c.source_ = source;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(source, line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(source, line_no, "missing key");
    if (!known_keys().count(key)) throw ConfigError(source, line_no, "unknown key '" + key + "'");
    if (value.empty()) throw ConfigError(source, line_no, "missing value for '" + key + "'");
    if (c.entries_.count(key)) throw ConfigError(source, line_no, "duplicate key '" + key + "'");
    c.entries_[key] = normalize(value);
    c.lines_[key] = line_no;
  }
  return c;
}

SceneConfig SceneConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

std::string SceneConfig::render() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

void SceneConfig::fail(const std::string& key, const std::string& what) const {
  const auto it = lines_.find(key);
  throw ConfigError(source_, it == lines_.end() ? 0 : it->second, what);
}

std::string SceneConfig::text(const std::string& key, const std::string& fallback) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double SceneConfig::number(const std::string& key) const {
  if (!has(key)) throw InvalidArgument("missing required key '" + key + "'");
  try {
    return parse_number(entries_.at(key));
  } catch (const InvalidArgument& e) {
    fail(key, key + ": " + e.what());
  }
}

double SceneConfig::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

int SceneConfig::integer(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  const double v = number(key);
  if (v != std::floor(v) || std::abs(v) > 1e9) fail(key, key + ": expected an integer");
  return static_cast<int>(v);
}

std::vector<double> SceneConfig::list(const std::string& key) const {
  if (!has(key)) throw InvalidArgument("missing required key '" + key + "'");
  std::vector<double> out;
  const std::string& v = entries_.at(key);
  std::size_t start = 0;
  while (true) {
    const auto comma = v.find(',', start);
    try {
      out.push_back(parse_number(std::string_view(v).substr(start, comma == std::string::npos ? v.npos : comma - start)));
    } catch (const InvalidArgument& e) {
      fail(key, key + ": " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Eigen::VectorXd SceneConfig::vector(const std::string& key) const {
  const std::vector<double> l = list(key);
  return Eigen::Map<const Eigen::VectorXd>(l.data(), static_cast<Eigen::Index>(l.size()));
}

void SceneConfig::set(const std::string& key, const std::string& value) {
  if (!known_keys().count(key)) throw InvalidArgument("unknown key '" + key + "'");
  entries_[key] = normalize(value);
}

ModelSpace build_space(const SceneConfig& c) {
  const std::string model = c.text("model", "euclidean");
  const int n = c.integer("dim", 2);
  if (model == "euclidean") return ModelSpace::euclidean(n);
  if (model == "sphere") return ModelSpace::sphere(n);
  if (model == "poincare") return ModelSpace::poincare_ball(n);
  c.fail("model", "unknown model '" + model + "'");
}

WindField build_wind(const SceneConfig& c) {
  const ModelSpace space = build_space(c);
  const std::string wind = c.text("wind", "calm");
  const int n = space.dim();
  auto expect = [&](ModelSpace::Kind k) {
    if (space.kind() != k) throw InvalidArgument("wind '" + wind + "' does not live on model " + space.name());
  };
  if (wind == "calm") return WindField::calm(space);
  if (wind == "homothety") {
    expect(ModelSpace::Kind::Euclidean);
    return WindField::euclidean(n, c.number("sigma", 0.0), c.number("k", 0.0),
                                c.has("c") ? c.vector("c") : Eigen::VectorXd());
  }
  if (wind == "poincare-rotation") {
    expect(ModelSpace::Kind::PoincareBall);
    return WindField::poincare_rotation(n, c.number("omega"));
  }
  if (wind == "poincare-translation") {
    expect(ModelSpace::Kind::PoincareBall);
    return WindField::poincare_translation(n, c.number("speed", 0.5));
  }
  if (wind == "katok") {
    expect(ModelSpace::Kind::Sphere);
    return WindField::sphere_rotation(n, c.list("a"));
  }
  if (wind == "meridional") {
    expect(ModelSpace::Kind::Sphere);
    if (n != 2) throw InvalidArgument("meridional wind lives on S^2");
    return WindField::sphere_non_homothety(c.number("eps", 0.3));
  }
  c.fail("wind", "unknown wind '" + wind + "'");
}

}  // namespace zermelo
