#pragma once

#include <string>
#include <string_view>

#include "mlfb/lattice.hpp"

namespace mlfb {

/// Integers separated by commas and/or whitespace, e.g. "12, 13,\t17".
/// Throws Malformed with a line:column position.
IntVec parse_vector(std::string_view text);

/// "m n" header line, then m lines of n whitespace-separated integers. Blank
/// lines and lines starting with '#' are ignored.
IntMat parse_matrix(std::string_view text);

/// "1,2,3"
std::string format_vector(const IntVec& v);

/// Inverse of parse_matrix.
std::string format_matrix(const IntMat& m);

}  // namespace mlfb
