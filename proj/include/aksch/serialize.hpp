#pragma once

// JSON renderings. Keys come out sorted, lists in canonical order, and every
// number is an exact integer; infinity is the string "inf".

#include "json.hpp"

#include "aksch/blocks.hpp"
#include "aksch/combinatorics.hpp"
#include "aksch/grading.hpp"
#include "aksch/jantzen.hpp"
#include "aksch/parameters.hpp"
#include "aksch/quiver.hpp"

namespace aksch {

using json = nlohmann::json;

json to_json(const ExtendedInt& x);
json to_json(const Multipartition& mu);
json to_json(const MultiComposition& mu);
json to_json(const ParameterSet& p);
json to_json(const SpreadInvariants& s);
json to_json(const Verdict& v);
json to_json(const Block& b);
json to_json(const MoritaReduction& red);
json to_json(const ModularConfig& cfg, int n);
json to_json(const JantzenTable& t);
json to_json(const DecompositionResult& d);
json to_json(const SemistandardTableau& t);
json to_json(const AmAlgebra& a);
json to_json(const GradedDimReport& rep);

// [[2,1],[]] -> ((2,1),-). Throws InvalidArgument on malformed input.
Multipartition multipartition_from_json(const json& j);

}  // namespace aksch
