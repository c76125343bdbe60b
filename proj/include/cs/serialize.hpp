#pragma once

#include <string>

#include <json.hpp>

#include "cs/diagram.hpp"

namespace cs {

/// JSON type with deterministic (insertion-ordered) key output, so that
/// serialization is byte-stable.
using Json = nlohmann::ordered_json;

/// Exact scalar <-> JSON: {"terms": [[deltaParity, zetaExp, num, den], ...]}
/// encoding sum_t (num/den) * zeta^zetaExp * delta^deltaParity with the
/// numerator/denominator as decimal strings (arbitrary precision).
Json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const RingParams& ring, const Json& j);

/// Diagram document:
/// {"version": 1, "d": ..., "top": ..., "bottom": ...,
///  "pairs": [[a, b], ...], "charges": [[point, value], ...],
///  "scalar": {...}, "loops": n (optional, absorbed as delta^n on parse)}
/// Boundary points are numbered counterclockwise from the bottom-left.
Json diagram_to_json(const ChargedDiagram& diagram);
ChargedDiagram diagram_from_json(const Json& j);

std::string serialize_diagram(const ChargedDiagram& diagram);
ChargedDiagram parse_diagram(const std::string& text);

}  // namespace cs
