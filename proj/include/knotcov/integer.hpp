#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace knotcov {

// Exact arbitrary-precision integer. Everything in this library is computed
// over Z; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// gcd of absolute values; gcd(0, 0) = 0, result always >= 0.
inline Int gcd(const Int& x, const Int& y) {
    Int a = abs_int(x), b = abs_int(y);
    while (b != 0) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Int gcd(const Int& x, const Int& y, const Int& z) { return gcd(gcd(x, y), z); }

// lcm of absolute values; lcm(x, 0) = 0.
inline Int lcm(const Int& x, const Int& y) {
    if (x == 0 || y == 0) return 0;
    Int g = gcd(x, y);
    return abs_int(x / g * y);
}

// Quotient x / y that must be exact. 0/0 yields 0 (the zero-propagation
// convention used by the closed-form group formulas); a nonzero remainder or
// a nonzero / 0 is an internal-invariant violation.
inline Int exact_div(const Int& x, const Int& y, const std::string& what) {
    if (y == 0) {
        if (x == 0) return 0;
        throw std::logic_error(what + ": nonzero value " + x.str() + " divided by zero");
    }
    Int q = x / y;
    if (q * y != x)
        throw std::logic_error(what + ": " + y.str() + " does not divide " + x.str());
    return q;
}

// Non-throwing variant: reports whether the division was exact. On failure
// the truncated quotient is still produced so callers can record a
// diagnostic and continue.
inline bool try_exact_div(const Int& x, const Int& y, Int& quotient) {
    if (y == 0) {
        quotient = 0;
        return x == 0;
    }
    quotient = x / y;
    return quotient * y == x;
}

}  // namespace knotcov
