#pragma once

#include "cayley/zoo.hpp"

#include <json.hpp>

#include <string>

namespace cayley {

using Json = nlohmann::json;

// Builds a zoo oracle from a JSON descriptor:
//   {"type":"free","rank":2}
//   {"type":"abelian","rank":2}
//   {"type":"raag","vertices":3,"edges":[[0,1],[1,2]],"labels":["a","z","b"]}
//   {"type":"raag","graph_file":"gamma.txt"}
//   {"type":"symmetric","degree":4,"mode":"pos"|"neg"|"complete"}
//   {"type":"symmetric","degree":4,"mode":"custom","generators":[[1,0,2,3],...]}
//   {"type":"heisenberg"} {"type":"dihedral_inf"} {"type":"z2_rtimes_z6"}
//   {"type":"product","factors":[<desc>,<desc>]}
//   {"type":"free_product_free","base":<desc>,"rank":3}
// Throws ParseError on malformed input.
OraclePtr make_group(const Json& descriptor);

// CLI group argument: a shorthand (f2, z3, heis, dinf, z2xz6, s4pos, s5neg,
// s4complete, f2xz), inline JSON (leading '{'), or a path to a JSON file.
Json group_arg_to_descriptor(const std::string& arg);

// Stable serialized form (sorted keys) used for cache keying.
std::string canonical_descriptor(const Json& descriptor);

// Hex cache key derived from the canonical form.
std::string descriptor_cache_key(const Json& descriptor);

} // namespace cayley
