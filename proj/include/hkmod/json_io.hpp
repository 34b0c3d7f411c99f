#pragma once

#include <json.hpp>

#include "hkmod/cohomology.hpp"

namespace hkmod {

using nlohmann::json;

// Exact-rational JSON encoding: {"num": "...", "den": "..."} with decimal
// string payloads, never floating point.
json rat_json(const Rat& r);
json ratvec_json(const RatVec& v);
json ratmat_json(const RatMat& m);
json ratten3_json(const RatTen3& t);

// Accepts an integer literal, a string "p" or "p/q", or {"num","den"}.
Rat rat_from_json(const json& j);

json lattice_json(const GramLattice& L);
GramLattice lattice_from_json(const json& j);

// Character schema:
// {"model": {"gram": [[...]]}, "ch0": r, "ch1": [...],
//  "ch2": {"sym2": [[...]], "c2": r}, "ch3": {"sym3": [[[...]]], "c2_h2": [...]},
//  "ch4": r}
// ch2/ch3/ch4 may be omitted (zero).
json character_json(const FujikiModel& m, const ChernCharacter& ch);
std::pair<FujikiModel, ChernCharacter> character_from_json(const json& j);

}  // namespace hkmod
