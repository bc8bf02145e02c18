#pragma once

// JSON encodings:
//   line measure  {"atoms":[{"x":0.0,"w":0.5},...],"uniform":[{"a":0,"b":1,"mass":0.5},...]}
//   R^n measure   {"dim":2,"points":[[0,0],[1,0]],"weights":[0.5,0.5]}
//   coupling      {"entries":[[source,target,mass],...],"cost":c}
//   geodesic      {"breakpoints":[...],"q0":[[start,end],...],"q1":[...],
//                  "speed":s,"extension":{"lo":..,"hi":..}}  infinities as "inf"/"-inf"
//   isometry      [eps, v, eta, t]
//
// Decoders throw std::invalid_argument on malformed documents.

#include <string>

#include "json.hpp"
#include "w2line/isometry1d.hpp"
#include "w2line/measure.hpp"
#include "w2line/transport1d.hpp"
#include "w2line/transport_rn.hpp"

namespace w2line {

using Json = nlohmann::json;

Json to_json(const Measure1D& mu);
Measure1D measure1d_from_json(const Json& j);

Json to_json(const MeasureRn& mu);
MeasureRn measure_rn_from_json(const Json& j);

Json to_json(const Coupling& plan, double cost);
Json to_json(const Interval& interval);
Json to_json(const Geodesic1D& gamma);

Json to_json(const IsometryElement& g);
IsometryElement isometry_from_json(const Json& j);

// Parses text, converting parse errors to std::invalid_argument.
Json parse_json(const std::string& text);

}  // namespace w2line
