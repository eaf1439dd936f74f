#pragma once

#include <map>
#include <memory>

#include "json.hpp"
#include "qshuffle/laurent.hpp"
#include "qshuffle/root_data.hpp"
#include "qshuffle/shuffle.hpp"

namespace qshuffle {

using Json = nlohmann::json;

constexpr int kFormatVersion = 1;

// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json to_json(const Integer& x);
Integer integer_from_json(const Json& j);

// [[exponent, coefficient], ...] sorted by exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"cartan_type": "G2", "words": [{"w": [1,2,1], "c": [[0,1]]}, ...]}, words
// in decreasing order.
Json to_json(const ShuffleElement& x);
ShuffleElement element_from_json(const Json& j, std::shared_ptr<const CartanDatum> cartan);

Json to_json(const MVector& m);
MVector mvector_from_json(const Json& j);

// [{"m": [...], "c": [[e,c],...]}, ...]
Json to_json(const std::map<MVector, LaurentPoly>& expansion);
std::map<MVector, LaurentPoly> expansion_from_json(const Json& j);

}  // namespace qshuffle
