#pragma once

#include <string>
#include <string_view>

#include "qsylv/quaternion.hpp"

namespace qsylv {

/// Parse a quaternion literal: signed decimal terms with units i/j/k in any
/// order ("1-2i+0.5k", "i", "-k"), or the positional form "(w,x,y,z)".
/// Whitespace-insensitive; duplicate terms are rejected. Throws ParseError with
/// the offending character position.
Quaternion parse_quaternion(std::string_view text);

/// Term form ("1-2i+0.5k"), `digits` significant digits; "0" for zero.
std::string format_quaternion(const Quaternion& q, int digits = 12);

/// Positional form "(w,x,y,z)" with shortest decimal components that parse
/// back bit-exactly (signed zeros included).
std::string format_exact(const Quaternion& q);

/// Shortest decimal representation of v that strtod maps back to v exactly.
std::string shortest_repr(double v);

} // namespace qsylv
