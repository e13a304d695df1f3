#pragma once

#include <string>

#include <json.hpp>

#include "dominion/bounds.hpp"
#include "dominion/exact.hpp"
#include "dominion/reductions.hpp"
#include "dominion/witness.hpp"

namespace dominion {

using json = nlohmann::ordered_json;

// Finite values as numbers, otherwise the string "infinity".
json value_json(const Value& v);
// Integers as numbers, proper fractions as "p/q" strings.
json rational_json(const Rational& r);

json witness_json(Param p, const Witness& w);
struct ParsedWitness {
    Param param;
    Witness witness;
};
// Throws ParseError on malformed input.
ParsedWitness witness_from_json(const json& j);

SetCoverInstance set_cover_from_json(const json& j);
json set_cover_json(const SetCoverInstance& j);
// Accepts {"vertices", "edges"} or the set cover spelling {"ground", "sets"}.
Hypergraph hypergraph_from_json(const json& j);

json read_json_file(const std::string& path);
// Inline text starting with '{' is parsed directly, anything else is read as a path.
json json_argument(const std::string& text);

}  // namespace dominion
