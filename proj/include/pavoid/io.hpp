#pragma once

#include <string>
#include <variant>

#include "pavoid/binary_matrix.hpp"
#include "pavoid/highdim.hpp"
#include "pavoid/permutation.hpp"

namespace pavoid {

using ParsedInput = std::variant<BinaryMatrix, Permutation, DDimPermutation>;

// Auto-detecting parser for the three shared text formats:
//   - a single non-blank line of images, e.g. "1 4 3 2 5"   -> Permutation
//   - "rows cols" then `rows` lines over {0,1}              -> BinaryMatrix
//   - "d n" then n lines of d coordinates                   -> DDimPermutation
// Malformed input raises std::invalid_argument with a 1-based line number.
ParsedInput parse_input_text(const std::string& text);
ParsedInput parse_input_file(const std::string& path);

std::string emit_text(const BinaryMatrix& m);
std::string emit_text(const Permutation& p);
std::string emit_text(const DDimPermutation& p);
std::string emit_text(const ParsedInput& in);

// Coercions for commands that need one specific shape.  A permutation-matrix
// BinaryMatrix converts to a Permutation and vice versa; a 2-dimensional
// DDimPermutation converts both ways.  Impossible conversions raise
// std::invalid_argument.
Permutation as_permutation(const ParsedInput& in);
BinaryMatrix as_binary_matrix(const ParsedInput& in);

const char* input_kind(const ParsedInput& in);  // "matrix", "permutation", "ddim"

}  // namespace pavoid
