#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torix {

using Int = std::int64_t;
using Rational = mpq_class;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

// Overflow-checked integer arithmetic; throws std::overflow_error.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

// Extended gcd: returns g = gcd(a, b) >= 0 with g = x*a + y*b.
Int extended_gcd(Int a, Int b, Int& x, Int& y);

Int floor_div(Int a, Int b);
Int ceil_div(Int a, Int b);

Int dot(std::span<const Int> a, std::span<const Int> b);
Rational dot(std::span<const Rational> a, std::span<const Int> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

Int floor(const Rational& q);
Int ceil(const Rational& q);
bool is_integral(const Rational& q);

// Converts an integral rational to Int; throws when not integral or too big.
Int to_int(const Rational& q);

RationalVector to_rational(std::span<const Int> v);

std::string to_string(const Rational& q);
std::string to_string(std::span<const Int> v, const char* sep = ",");
std::string to_string(std::span<const Rational> v, const char* sep = ",");

} // namespace torix
