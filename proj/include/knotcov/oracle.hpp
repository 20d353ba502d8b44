#pragma once

#include "knotcov/homology.hpp"
#include "knotcov/knot_model.hpp"
#include "knotcov/sequences.hpp"
#include "knotcov/zmat.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace knotcov {

// A Seifert matrix V (square, size 2g). The branched-cover pipeline needs
// det(V - V^T) = +-1, which holds for every honest Seifert matrix; it is
// checked where it is used so that a bad fixture fails loudly.
struct SeifertMatrix {
    IntMatrix v;

    explicit SeifertMatrix(IntMatrix m) : v(std::move(m)) {
        if (!v.is_square() || v.rows() % 2 != 0)
            throw std::invalid_argument("SeifertMatrix: must be square of even size 2g");
    }

    bool operator==(const SeifertMatrix&) const = default;
};

// Gamma = (V - V^T)^{-1} V, the Seifert-side analogue of the companion
// construction. Integral exactly because det(V - V^T) = +-1.
inline IntMatrix seifert_gamma(const SeifertMatrix& sm) {
    IntMatrix anti = sm.v - sm.v.transpose();
    Int det = determinant(anti);
    if (det != 1 && det != -1)
        throw std::invalid_argument("seifert_gamma: det(V - V^T) = " + det.str() +
                                    "; the antisymmetrised Seifert matrix must be unimodular");
    return unimodular_inverse(anti) * sm.v;
}

// H1 of the n-fold branched cyclic cover straight from a Seifert matrix:
// cokernel of Gamma^n - (Gamma - I)^n.
inline AbelianGroup homology_via_seifert(const SeifertMatrix& sm, unsigned n) {
    if (n == 0) throw std::invalid_argument("homology_via_seifert: n must be >= 1");
    return cokernel(b_matrix_from_gamma(seifert_gamma(sm), n));
}

// Brute-force pipeline 1: Smith normal form of the 2g x 2g presentation
// B(n) built from the polynomial's companion matrices.
inline AbelianGroup homology_via_bn(const AlexanderPoly& p, unsigned n) {
    if (n == 0) throw std::invalid_argument("homology_via_bn: n must be >= 1");
    return cokernel(b_matrix(p, n));
}

// Brute-force pipeline 2: Smith normal form of the n x n circulant
// presentation assembled from the Alexander coefficients. Independent of
// pipeline 1 in both the matrix built and its size.
inline AbelianGroup homology_via_circulant(const AlexanderPoly& p, unsigned n) {
    return cokernel(circulant_presentation(p, n));
}

// Genus-1 twist-form Seifert matrix [[l1, 1], [0, l2]]; the associated knot
// has the genus-1 polynomial with b = l1 l2, so inequivalent factorisations
// of b give distinct Seifert matrices with identical covers.
inline SeifertMatrix double_twist_seifert(const Int& l1, const Int& l2) {
    return SeifertMatrix(IntMatrix{{l1, 1}, {0, l2}});
}

// The stevedore knot 6_1 (genus 1, b = -2).
inline SeifertMatrix stevedore_seifert() { return double_twist_seifert(1, -2); }

// The knot 9_46: shares the stevedore's Alexander polynomial (the genus-1
// form with b = -2), but H1 of its double branched cover is Z_3 + Z_3 rather
// than Z_9 -- the Seifert pipeline tells them apart where the polynomial
// cannot.
inline SeifertMatrix nine_forty_six_seifert() {
    return SeifertMatrix(IntMatrix{
        {1, 0, 0, 0}, {0, -1, 0, 0}, {1, 0, 1, 1}, {-1, -1, 0, 0}});
}

// Checks the decomposition 2 B(n) = s(n) (2L) + t(n) (2R) for the genus-2
// family at one (a, b, n).
inline bool verify_lemma_decomposition(const Int& a, const Int& b, unsigned n) {
    IntMatrix gamma = gamma_matrix(AlexanderPoly::genus2(a, b));
    auto [s, t] = st_sequences(a, b, n);
    BnDecomposition basis = bn_decomposition(a, b, n % 2 == 0);
    return Int(2) * b_matrix_from_gamma(gamma, n) == s * basis.two_l + t * basis.two_r;
}

// One knot, one n: closed form vs both brute-force pipelines, plus every
// identity that applies at this parity. all_ok() is the single verdict the
// verify command aggregates.
struct CrossCheckReport {
    AlexanderPoly poly;
    unsigned n = 0;
    HomologyResult closed_form;
    AbelianGroup via_bn;
    AbelianGroup via_circulant;
    bool groups_agree = false;
    std::optional<bool> lemma_ok;                       // genus 2 only
    std::optional<bool> det_identity_ok;                // genus 2, even n
    std::optional<ExactSequenceReport> exact_sequence;  // genus 2, even n

    bool all_ok() const {
        if (!groups_agree) return false;
        if (!closed_form.certificate.violations.empty()) return false;
        if (lemma_ok && !*lemma_ok) return false;
        if (det_identity_ok && !*det_identity_ok) return false;
        if (exact_sequence && exact_sequence->applicable && !exact_sequence->pass) return false;
        return true;
    }
};

inline CrossCheckReport cross_check(const AlexanderPoly& p, unsigned n) {
    CrossCheckReport r{p, n, homology(p, n), homology_via_bn(p, n),
                       homology_via_circulant(p, n)};
    r.groups_agree =
        r.closed_form.group == r.via_bn && r.via_bn == r.via_circulant;
    if (p.genus() == 2) {
        const Int &a = p.a(), &b = p.b();
        r.lemma_ok = verify_lemma_decomposition(a, b, n);
        if (n % 2 == 0) {
            SeqValues v = seq_values(a, b, n);
            r.det_identity_ok =
                determinant(b_matrix(p, n)) == v.k * *v.mu * *v.mu;
            r.exact_sequence = exact_sequence_check(a, b, n);
        }
    }
    return r;
}

}  // namespace knotcov
