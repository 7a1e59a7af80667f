#pragma once

// The JSON structure-constant file format.
//
//   {"dim": 2,
//    "mult":   [[i, j, k, "p/q"], ...],   e_i e_j contains (p/q) e_k
//    "comult": [[i, j, k, "p/q"], ...],   Delta(e_i) contains (p/q) e_j (x) e_k
//    "unit":   [[i, "p/q"], ...],
//    "counit": [[i, "p/q"], ...],
//    "name": "...", "basis": ["...", ...]}   (both optional)
//
// Unlisted entries are zero; integers may stand in for rational strings.

#include <stdexcept>
#include <string>
#include <string_view>

#include "wbalg/prebialgebra.hpp"

namespace wbalg {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InputError on malformed JSON, bad indices, unknown fields or
/// repeated entries. Does not check any algebraic law.
StructureConstants parse_constants(std::string_view text);

/// Canonical text: fixed field order, entries sorted, zeros omitted,
/// one entry per line.
std::string serialize(const StructureConstants& sc);

StructureConstants read_constants(const std::string& path);
void write_constants(const std::string& path, const StructureConstants& sc);

}  // namespace wbalg
