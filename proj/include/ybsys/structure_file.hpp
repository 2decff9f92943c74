#pragma once

// JSON interchange for spaces, structure constants and named linear maps.
//
//   {
//     "scalars": ["s", "q"],
//     "spaces": [{"label": "A", "basis": ["1", "x"]}],
//     "algebra": {"space": "A", "mult": [{"i": 1, "j": 1, "k": 0, "coeff": "1/(s+1)"}],
//                 "unit": [{"i": 0, "coeff": "1"}]},
//     "coalgebra": {"space": "C", "comult": [{"i": .., "j": .., "k": .., "coeff": ..}],
//                   "counit": [{"i": .., "coeff": ..}]},
//     "maps": {"psi": {"domain": ["C", "A"], "codomain": ["A", "C"],
//                      "entries": [{"row": 1, "col": 2, "coeff": "q"}]}}
//   }
//
// Indices are 0-based, omitted entries are zero and an empty factor list is
// the ground field. Map entries are row-per-input. When "scalars" is present,
// coefficients may only use the variables it lists.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybsys/registry.hpp"

namespace ybsys {

struct StructureFile {
  std::vector<Var> scalars;
  std::vector<Space> spaces;
  std::optional<Algebra> algebra;
  std::optional<Coalgebra> coalgebra;
  std::map<std::string, LinMap> maps;

  const LinMap& map(const std::string& name) const;
  friend bool operator==(const StructureFile&, const StructureFile&) = default;
};

/// Throws ParseError for malformed JSON or coefficients and InvalidArgument
/// for unknown spaces, out-of-range indices, duplicates or undeclared scalars.
StructureFile read_structure_file(std::string_view json_text);
/// Pretty-printed JSON; read_structure_file inverts it exactly.
std::string write_structure_file(const StructureFile& f);

/// File form of a payload, with the scalars and spaces the writer derives. Maps are named "mult"/"unit", "comult"/"counit",
/// "psi", "W"/"X"/"Z", or `map_name` for a bare LinMap.
StructureFile to_structure_file(const Payload& p, const std::string& map_name = "map");

/// Needs "algebra", "coalgebra" and map "psi".
EntwiningStructure entwining_from_file(const StructureFile& f);
/// Needs maps "W", "X" and "Z".
WXZSystem wxz_from_file(const StructureFile& f);

}  // namespace ybsys
