#include "w2line/json_io.hpp"

#include <cmath>

namespace w2line {

namespace {

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number()) {
    throw std::invalid_argument(std::string("json: missing numeric field '") + key + "'");
  }
  return j.at(key).get<double>();
}

const Json& array_field(const Json& j, const char* key, bool required) {
  static const Json empty = Json::array();
  if (!j.contains(key)) {
    if (required) throw std::invalid_argument(std::string("json: missing '") + key + "'");
    return empty;
  }
  if (!j.at(key).is_array()) {
    throw std::invalid_argument(std::string("json: '") + key + "' must be an array");
  }
  return j.at(key);
}

Json bound(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

Json to_json(const Measure1D& mu) {
  Json atoms = Json::array();
  for (const auto& a : mu.atoms()) atoms.push_back({{"x", a.x}, {"w", a.w}});
  Json uniform = Json::array();
  for (const auto& u : mu.uniform_pieces()) {
    uniform.push_back({{"a", u.a}, {"b", u.b}, {"mass", u.mass}});
  }
  return {{"atoms", atoms}, {"uniform", uniform}};
}

Measure1D measure1d_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("json: measure must be an object");
  std::vector<Atom> atoms;
  std::vector<UniformPiece> uniform;
  for (const auto& a : array_field(j, "atoms", false)) {
    atoms.push_back({number(a, "x"), number(a, "w")});
  }
  for (const auto& u : array_field(j, "uniform", false)) {
    uniform.push_back({number(u, "a"), number(u, "b"), number(u, "mass")});
  }
  return Measure1D::from_parts(atoms, uniform);
}

Json to_json(const MeasureRn& mu) {
  Json points = Json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const auto p = mu.point(i);
    points.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return {{"dim", mu.dim()},
          {"points", points},
          {"weights", std::vector<double>(mu.weights().begin(), mu.weights().end())}};
}

MeasureRn measure_rn_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("json: measure must be an object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long>() < 1) {
    throw std::invalid_argument("json: 'dim' must be a positive integer");
  }
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<std::vector<double>> points;
  for (const auto& p : array_field(j, "points", true)) {
    if (!p.is_array()) throw std::invalid_argument("json: point must be an array");
    std::vector<double> coords;
    for (const auto& c : p) {
      if (!c.is_number()) throw std::invalid_argument("json: non-numeric coordinate");
      coords.push_back(c.get<double>());
    }
    points.push_back(std::move(coords));
  }
  std::vector<double> weights;
  for (const auto& w : array_field(j, "weights", true)) {
    if (!w.is_number()) throw std::invalid_argument("json: non-numeric weight");
    weights.push_back(w.get<double>());
  }
  if (points.size() != weights.size()) {
    throw std::invalid_argument("json: points and weights differ in length");
  }
  return MeasureRn(dim, points, weights);
}

Json to_json(const Coupling& plan, double cost) {
  Json entries = Json::array();
  for (const auto& e : plan.entries()) entries.push_back({e.source, e.target, e.mass});
  return {{"entries", entries}, {"cost", cost}};
}

Json to_json(const Interval& interval) {
  return {{"lo", bound(interval.lo)}, {"hi", bound(interval.hi)}};
}

Json to_json(const Geodesic1D& gamma) {
  Json q0 = Json::array();
  Json q1 = Json::array();
  for (const auto& p : gamma.quantiles.first) q0.push_back({p.start, p.end});
  for (const auto& p : gamma.quantiles.second) q1.push_back({p.start, p.end});
  return {{"breakpoints", gamma.quantiles.breakpoints},
          {"q0", q0},
          {"q1", q1},
          {"speed", gamma.speed},
          {"extension", to_json(gamma.extension)}};
}

Json to_json(const IsometryElement& g) { return Json::array({g.eps, g.v, g.eta, g.t}); }

IsometryElement isometry_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4 || !j[0].is_number_integer() || !j[1].is_number() ||
      !j[2].is_number_integer() || !j[3].is_number()) {
    throw std::invalid_argument("json: isometry must be [eps, v, eta, t]");
  }
  IsometryElement g{j[0].get<int>(), j[1].get<double>(), j[2].get<int>(),
                    j[3].get<double>()};
  validate(g);
  return g;
}

}  // namespace w2line
