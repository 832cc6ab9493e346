#pragma once

#include <string>
#include <string_view>

#include "cosr/matrix.hpp"

namespace cosr {

/// Matrix text format:
///
///   # comment lines anywhere
///   m n
///   <m rows of n cells, each 0 or 1, whitespace separated or packed>
///
/// Throws ParseError with the offending 1-based line number.
BinaryMatrix parse_matrix(std::string_view text);

/// Canonical form: "m n" header, one row per line, cells separated by single
/// spaces, trailing newline. Labels are not written.
std::string serialize_matrix(const BinaryMatrix& m);

}  // namespace cosr
