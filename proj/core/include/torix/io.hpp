#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torix/divisors.hpp"
#include "torix/fan.hpp"

namespace torix {

/// Fan file: {"rank": n, "rays": [[...], ...], "max_cones": [[...], ...]},
/// ray indices 0-based. Errors are InputError with "source:line:col: " prefixes.
Fan parse_fan(std::string_view text, const std::string& source = "<fan>");
Fan read_fan_file(const std::string& path);

/// Canonical text: rays in input order, cones sorted, trailing newline.
std::string emit_fan(const Fan& fan);

/// "a1,a2,...,ad" with integers or rationals "p/q"; d must match the fan.
QDivisor parse_divisor(std::string_view text, std::size_t rays, const std::string& source = "<divisor>");
/// As above, throwing when some coefficient is not an integer.
WeilDivisor parse_weil_divisor(std::string_view text, std::size_t rays, const std::string& source = "<divisor>");

std::string emit_divisor(const QDivisor& d);

/// "0,2" or "{0,2}" -> Cone; indices checked against the ray count.
Cone parse_cone(std::string_view text, std::size_t rays);

std::string read_text_file(const std::string& path);

} // namespace torix
