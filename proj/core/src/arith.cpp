#include "torix/arith.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

namespace torix {

Int gcd(Int a, Int b) {
    if (a == std::numeric_limits<Int>::min() || b == std::numeric_limits<Int>::min())
        throw std::overflow_error("gcd of INT64_MIN");
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b) {
    if (a == 0 || b == 0)
        return 0;
    Int g = gcd(a, b);
    return std::llabs(checked_mul(a / g, b));
}

Int extended_gcd(Int a, Int b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int ceil_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        ++q;
    return q;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

Rational dot(std::span<const Rational> a, std::span<const Int> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0)
            s += a[i] * Rational(static_cast<long>(b[i]));
    return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Int floor(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!r.fits_slong_p())
        throw std::overflow_error("rational floor out of range");
    return r.get_si();
}

Int ceil(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!r.fits_slong_p())
        throw std::overflow_error("rational ceil out of range");
    return r.get_si();
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Int to_int(const Rational& q) {
    if (!is_integral(q))
        throw std::domain_error("rational " + q.get_str() + " is not integral");
    if (!q.get_num().fits_slong_p())
        throw std::overflow_error("rational out of Int range");
    return q.get_num().get_si();
}

RationalVector to_rational(std::span<const Int> v) {
    RationalVector r;
    r.reserve(v.size());
    for (Int x : v)
        r.emplace_back(static_cast<long>(x));
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Int> v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i];
    }
    return os.str();
}

std::string to_string(std::span<const Rational> v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << sep;
        os << v[i].get_str();
    }
    return os.str();
}

} // namespace torix
