#pragma once
#include "omega/figure.hpp"
#include "omega/formulas.hpp"
#include "omega/quadext.hpp"

#include <json.hpp>

namespace omega {

// All serialization is exact and deterministic: rationals go out as canonical
// "num/den" strings, quadratic values as {"a","b","d"} objects, points as
// 3-element arrays. Key order is fixed (ordered_json), no timestamps anywhere.
using Json = nlohmann::ordered_json;

Json rat_json(const Rat& v);
Rat rat_from_json(const Json& j);

Json quad_json(const Quad& v);
Quad quad_from_json(const Json& j);

Json pt_json(const PtR& p);
PtR pt_from_json(const Json& j);
Json ptq_json(const PtQ& p);

Json line_json(const LnR& l);
Json metric_json(const Metric& m);
Metric metric_from_json(const Json& j);

Json circle_json(const Circle& c); // {"p","q","r"} relative to its metric
Circle circle_from_json(const Json& j, const Metric& m);

Json figure_json(const Figure& fig);
Figure figure_from_json(const Json& j);
Json ledger_json(const std::vector<LedgerEntry>& entries);

//! strict parse: DataError on malformed input
Json parse_json(const std::string& text);

} // namespace omega
