#pragma once

#include <json.hpp>

#include "fewinv/bijections.hpp"
#include "fewinv/series.hpp"

namespace fewinv {

// JSON schemas:
//   series       {"order": N, "coefficients": ["decimal strings"]}
//   signed tuple {"partitions": [[ints, weakly decreasing]], "tail": [ints]}
//   marked pair  {"marks": [ints], "beta": [ints]}
//   good pair    {"lambda": [ints, increasing], "mu": [ints]}
// Coefficients are decimal strings on purpose: they exceed 64-bit range.

nlohmann::json series_to_json(const IntegerSeries& s);
IntegerSeries series_from_json(const nlohmann::json& j);

nlohmann::json signed_tuple_to_json(const SignedTuple& t);
SignedTuple signed_tuple_from_json(const nlohmann::json& j);

nlohmann::json marked_pair_to_json(const MarkedPair& p);
MarkedPair marked_pair_from_json(const nlohmann::json& j);

nlohmann::json good_pair_to_json(const GoodPair& g);
GoodPair good_pair_from_json(const nlohmann::json& j);

} // namespace fewinv
