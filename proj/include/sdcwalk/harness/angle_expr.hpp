#pragma once

#include <string_view>

#include "sdcwalk/angle.hpp"

namespace sdcwalk::harness {

// Parses an angle expression such as "pi/7", "pi/3*(1+3/10)", "-0.25*pi" or
// "0.7". Grammar: numbers (integer or decimal), the constant pi, + - * /,
// unary sign and parentheses. Every operation is carried out on exact
// rationals, so the result keeps its rational multiple of pi. Sums mixing pi
// and non-pi terms fall back to a plain radian value.
//
// Throws ValidationError for malformed input, division by zero, or powers of
// pi other than 0 and 1.
Angle parse_angle(std::string_view text);

}  // namespace sdcwalk::harness
