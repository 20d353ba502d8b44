#pragma once

#include "knotcov/integer.hpp"
#include "knotcov/zmat.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotcov {

// Alexander polynomial of a 2-bridge knot of Seifert genus 1 or 2,
// normalised so that A(1) = 1:
//   genus 1:  A(z) = b + (1-2b) z + b z^2,                        b != 0
//   genus 2:  A(z) = a + (b-a) z + (1-2b) z^2 + (b-a) z^3 + a z^4, a != 0
class AlexanderPoly {
public:
    static AlexanderPoly genus1(Int b) {
        if (b == 0)
            throw std::invalid_argument(
                "genus-1 parameter b = 0 gives the trivial knot (constant Alexander "
                "polynomial); nothing to compute");
        return AlexanderPoly(1, 0, std::move(b));
    }

    static AlexanderPoly genus2(Int a, Int b) {
        if (a == 0)
            throw std::invalid_argument(
                "genus-2 parameter a = 0 degenerates the quartic Alexander polynomial; "
                "use the genus-1 form instead");
        return AlexanderPoly(2, std::move(a), std::move(b));
    }

    int genus() const { return genus_; }

    const Int& a() const {
        if (genus_ != 2)
            throw std::logic_error("AlexanderPoly: a is defined for genus 2 only");
        return a_;
    }

    const Int& b() const { return b_; }

    // Coefficients c_0 .. c_{2g}, lowest degree first; they sum to 1.
    std::vector<Int> coefficients() const {
        if (genus_ == 1) return {b_, 1 - 2 * b_, b_};
        return {a_, b_ - a_, 1 - 2 * b_, b_ - a_, a_};
    }

    bool operator==(const AlexanderPoly&) const = default;

private:
    AlexanderPoly(int genus, Int a, Int b) : genus_(genus), a_(std::move(a)), b_(std::move(b)) {}

    int genus_;
    Int a_, b_;
};

// Horner evaluation of a coefficient vector (lowest degree first).
inline Int poly_eval(const std::vector<Int>& coeffs, const Int& z) {
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline Int alexander_eval(const AlexanderPoly& p, const Int& z) {
    return poly_eval(p.coefficients(), z);
}

// Knot determinant A(-1), reported with its sign.
inline Int knot_determinant(const AlexanderPoly& p) { return alexander_eval(p, Int(-1)); }

// A named knot: the polynomial plus optional display metadata.
struct KnotRecord {
    std::string name;
    AlexanderPoly poly;
    std::string slope;   // 2-bridge fraction p/q, informational only
    std::string source;  // free-form provenance note

    bool operator==(const KnotRecord&) const = default;
};

// The companion pair (U, V) of a degree-s coefficient vector c_0..c_s:
// U has -1 on the superdiagonal and last row (c_0, .., c_{s-1});
// V is the identity with V(s-1, s-1) = c_s. Then det(U + zV) = A(z)
// up to the construction's sign conventions, and det(U + V) = A(1) = 1,
// which is exactly what makes Gamma = (U+V)^{-1} U integral.
struct CompanionPair {
    IntMatrix u, v;
};

inline CompanionPair companion_from_coefficients(const std::vector<Int>& coeffs) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("companion_from_coefficients: degree must be >= 1");
    const std::size_t s = coeffs.size() - 1;
    IntMatrix u(s, s), v = IntMatrix::identity(s);
    for (std::size_t i = 0; i + 1 < s; ++i) u(i, i + 1) = -1;
    for (std::size_t j = 0; j < s; ++j) u(s - 1, j) = coeffs[j];
    v(s - 1, s - 1) = coeffs[s];
    return CompanionPair{std::move(u), std::move(v)};
}

inline CompanionPair companion_pair(const AlexanderPoly& p) {
    return companion_from_coefficients(p.coefficients());
}

inline IntMatrix gamma_from_companion(const CompanionPair& cp) {
    return unimodular_inverse(cp.u + cp.v) * cp.u;
}

// Gamma = (U+V)^{-1} U, the integral matrix whose powers drive every
// homology formula in this library.
inline IntMatrix gamma_matrix(const AlexanderPoly& p) {
    return gamma_from_companion(companion_pair(p));
}

inline IntMatrix b_matrix_from_gamma(const IntMatrix& gamma, unsigned n) {
    IntMatrix shifted = gamma - IntMatrix::identity(gamma.rows());
    return mat_pow(gamma, n) - mat_pow(shifted, n);
}

// Presentation matrix B(n) = Gamma^n - (Gamma - I)^n of H1 of the n-fold
// branched cyclic cover. B(1) = I (trivial cover).
inline IntMatrix b_matrix(const AlexanderPoly& p, unsigned n) {
    return b_matrix_from_gamma(gamma_matrix(p), n);
}

// Independent n x n presentation straight from the Alexander coefficients:
// entry (i, j) collects sum of c_l over l = j - i (mod n). Its cokernel is
// H1 of the n-fold branched cyclic cover; used to cross-check b_matrix.
inline IntMatrix circulant_presentation(const AlexanderPoly& p, unsigned n) {
    if (n == 0) throw std::invalid_argument("circulant_presentation: n must be >= 1");
    const std::vector<Int> c = p.coefficients();
    IntMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (std::size_t l = 0; l < c.size(); ++l) m(i, (i + l) % n) += c[l];
    return m;
}

}  // namespace knotcov
