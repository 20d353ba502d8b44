#pragma once

#include "knotcov/integer.hpp"
#include "knotcov/zmat.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>

namespace knotcov {

// Coefficients of the order-8, step-2 linear recurrence satisfied by every
// scalar sequence built from powers of Gamma and Gamma - I in the genus-2
// family: with c = (c0, c1, c2, c3, c4),
//   c0 u(n) + c1 u(n+2) + c2 u(n+4) + c3 u(n+6) + c4 u(n+8) = 0,  c4 = 1.
// They are the even-degree coefficients of the product of the two quartic
// characteristic polynomials P0(x) = x^4 - 2x^3 + (1+3a+b)x^2 - (3a+b)x + a
// and P1(x) = P0(x+1); the odd-degree ones vanish.
struct RecurrenceCoeffs {
    Int c0, c1, c2, c3, c4;

    bool operator==(const RecurrenceCoeffs&) const = default;
};

inline RecurrenceCoeffs recurrence_coeffs(const Int& a, const Int& b) {
    return RecurrenceCoeffs{
        a * a,
        2 * a - 3 * a * a - 4 * a * b - b * b,
        1 - 4 * a + 9 * a * a - 2 * b + 6 * a * b + b * b,
        -2 + 6 * a + 2 * b,
        1,
    };
}

// The scalar pair (s(n), t(n)) defined by parity-split seeds plus the step-2
// recurrence. They are the coordinates of 2*B(n) in the basis (2L, 2R) of
// bn_decomposition below. Defined directly by seeds + recurrence -- never
// via eigenvalues, so degenerate parameter choices cost nothing.
inline std::pair<Int, Int> st_sequences(const Int& a, const Int& b, unsigned n) {
    const unsigned start = n % 2;
    std::array<Int, 4> s, t;
    if (start == 1) {
        s = {2,
             2 - 9 * a - 3 * b,
             2 - 25 * a + 45 * a * a - 5 * b + 30 * a * b + 5 * b * b,
             2 - 49 * a + 189 * a * a - 189 * a * a * a - 7 * b + 105 * a * b -
                 189 * a * a * b + 14 * b * b - 63 * a * b * b - 7 * b * b * b};
        t = {0, -3, 5 * (-1 + 3 * a + b),
             -7 * (1 - 7 * a + 9 * a * a - 2 * b + 6 * a * b + b * b)};
    } else {
        s = {0, 2, 2 * (1 - 3 * a - b),
             2 - 18 * a + 27 * a * a - 4 * b + 18 * a * b + 3 * b * b};
        t = {0, 0, -2, -4 + 9 * a + 3 * b};
    }
    unsigned idx = (n - start) / 2;
    if (idx < 4) return {s[idx], t[idx]};
    const RecurrenceCoeffs c = recurrence_coeffs(a, b);
    auto advance = [&c](std::array<Int, 4>& w) {
        Int next = -(c.c0 * w[0] + c.c1 * w[1] + c.c2 * w[2] + c.c3 * w[3]);
        w = {std::move(w[1]), std::move(w[2]), std::move(w[3]), std::move(next)};
    };
    for (unsigned i = 4; i <= idx; ++i) {
        advance(s);
        advance(t);
    }
    return {s[3], t[3]};
}

// Derived scalars feeding the closed-form homology of the genus-2 family:
//   zeta = (s + (5a - b) t) / 2          (always an integer on this family;
//                                         a failed parity is an internal bug)
//   mu   = (s^2 + (4a - (3a+b)^2) t^2)/4  (even n only)
//   k    = 1 + 4a - 4b                    (order parameter of the n = 2 cover)
struct SeqValues {
    unsigned n = 0;
    Int s, t, zeta;
    std::optional<Int> mu;
    Int k;

    bool operator==(const SeqValues&) const = default;
};

inline SeqValues seq_values(const Int& a, const Int& b, unsigned n) {
    auto [s, t] = st_sequences(a, b, n);
    SeqValues v;
    v.n = n;
    v.zeta = exact_div(s + (5 * a - b) * t, 2, "seq_values: zeta parity");
    v.k = 1 + 4 * a - 4 * b;
    if (n % 2 == 0) {
        Int disc = 4 * a - (3 * a + b) * (3 * a + b);
        v.mu = exact_div(s * s + disc * t * t, 4, "seq_values: mu divisibility");
    }
    v.s = std::move(s);
    v.t = std::move(t);
    return v;
}

// Genus-1 integer pair (alpha(n), beta(n)), both satisfying
//   u(n+2) = u(n+1) - b u(n)
// with seeds alpha(0) = 2, alpha(1) = 1 and beta(0) = 0, beta(1) = 1.
// H1 of the n-fold cover is (Z_alpha)^2 for odd n and
// Z_beta + Z_{(4b-1) beta} for even n.
inline std::pair<Int, Int> genus1_alpha_beta(const Int& b, unsigned n) {
    Int a0 = 2, a1 = 1, b0 = 0, b1 = 1;
    for (unsigned i = 0; i < n; ++i) {
        Int a2 = a1 - b * a0;
        Int b2 = b1 - b * b0;
        a0 = std::move(a1);
        a1 = std::move(a2);
        b0 = std::move(b1);
        b1 = std::move(b2);
    }
    return {std::move(a0), std::move(b0)};
}

// Parity-dependent basis (2L, 2R) such that 2 B(n) = s(n) (2L) + t(n) (2R)
// for the genus-2 family. The halved matrices L, R have half-integer
// entries, so the doubled pair is the integral object of record.
struct BnDecomposition {
    IntMatrix two_l, two_r;
};

inline BnDecomposition bn_decomposition(const Int& a, const Int& b, bool even_n) {
    if (!even_n) {
        IntMatrix two_r{{a - b, -2 + 2 * a + 4 * b, 2 * a - 2 * b, -2 * a},
                        {2 * a, -a + b, 2 * a, 0},
                        {0, 2 * a, -a + b, 2 * a},
                        {-2 * a, 2 * a - 2 * b, -2 + 2 * a + 4 * b, a - b}};
        return BnDecomposition{IntMatrix::identity(4), std::move(two_r)};
    }
    IntMatrix two_l{{-1 + 2 * a, -2 + 2 * b, -2 * b, -2 * a},
                    {2 * a, -1 + 2 * b, -2 * b, -2 * a},
                    {2 * a, 2 * b, 1 - 2 * b, -2 * a},
                    {2 * a, 2 * b, 2 - 2 * b, 1 - 2 * a}};
    IntMatrix two_r{{-5 * a + 6 * a * a + b + 2 * a * b, 2 - 4 * a - 6 * b + 6 * a * b + 2 * b * b,
                     2 * (-a + b - 3 * a * b - b * b), -2 * a * (-1 + 3 * a + b)},
                    {2 * a * (-1 + 3 * a + b), (3 * a + b) * (-1 + 2 * b),
                     2 * (a - 3 * a * b - b * b), -2 * a * (3 * a + b)},
                    {2 * a * (3 * a + b), 2 * (-a + 3 * a * b + b * b),
                     -(3 * a + b) * (-1 + 2 * b), -2 * a * (-1 + 3 * a + b)},
                    {2 * a * (-1 + 3 * a + b), 2 * (a - b + 3 * a * b + b * b),
                     -2 + 4 * a + 6 * b - 6 * a * b - 2 * b * b,
                     5 * a - 6 * a * a - b - 2 * a * b}};
    return BnDecomposition{std::move(two_l), std::move(two_r)};
}

}  // namespace knotcov
