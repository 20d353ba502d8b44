#pragma once

#include "knotcov/abelian_group.hpp"
#include "knotcov/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotcov {

// Dense matrix over Z, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }

    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
        : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            for (const Int& e : r) entries_.push_back(e);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(entries_[i * cols_ + c], entries_[j * cols_ + c]);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap(entries_[r * cols_ + i], entries_[r * cols_ + j]);
    }

    // row i += q * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t c = 0; c < cols_; ++c)
            entries_[i * cols_ + c] += q * entries_[j * cols_ + c];
    }

    // col i += q * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t r = 0; r < rows_; ++r)
            entries_[r * cols_ + i] += q * entries_[r * cols_ + j];
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out << (i == 0 ? "[" : " ");
            out << "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out << ", ";
                out << (*this)(i, j);
            }
            out << "]" << (i + 1 == rows_ ? "]" : "\n");
        }
        return out.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("IntMatrix +: shape mismatch");
    IntMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
    return r;
}

inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("IntMatrix -: shape mismatch");
    IntMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
    return r;
}

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix *: inner dimensions disagree");
    IntMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline IntMatrix operator*(const Int& c, const IntMatrix& a) {
    IntMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= c;
    return r;
}

// base^n by binary powering; base^0 = I.
inline IntMatrix mat_pow(const IntMatrix& base, unsigned long n) {
    if (!base.is_square()) throw std::invalid_argument("mat_pow: matrix must be square");
    IntMatrix result = IntMatrix::identity(base.rows());
    IntMatrix sq = base;
    while (n) {
        if (n & 1UL) result = result * sq;
        n >>= 1UL;
        if (n) sq = sq * sq;
    }
    return result;
}

// Exact determinant by fraction-free (Bareiss) elimination. Every interior
// division in the Bareiss step is exact over Z.
inline Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && w(p, k) == 0) ++p;
            if (p == n) return 0;
            w.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                w(i, j) = exact_div(w(i, j) * w(k, k) - w(i, k) * w(k, j), prev,
                                    "determinant: Bareiss step");
        prev = w(k, k);
    }
    return sign < 0 ? Int(-w(n - 1, n - 1)) : w(n - 1, n - 1);
}

namespace detail {

// Determinant of the submatrix picked out by row/column index lists.
inline Int minor_det(const IntMatrix& m, const std::vector<std::size_t>& ri,
                     const std::vector<std::size_t>& ci) {
    IntMatrix sub(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j) sub(i, j) = m(ri[i], ci[j]);
    return determinant(sub);
}

// Advances idx to the next k-combination of {0,..,limit-1}; false when done.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] + (k - i) < limit) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

}  // namespace detail

// gcd of all k x k minors (nonnegative; 0 when all vanish). Exponential in k;
// intended as an independent oracle for small matrices, not a fast path.
inline Int gcd_of_minors(const IntMatrix& m, std::size_t k) {
    if (k == 0 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("gcd_of_minors: order out of range");
    Int g = 0;
    auto ri = detail::first_combination(k);
    do {
        auto ci = detail::first_combination(k);
        do {
            g = gcd(g, detail::minor_det(m, ri, ci));
            if (g == 1) return g;
        } while (detail::next_combination(ci, m.cols()));
    } while (detail::next_combination(ri, m.rows()));
    return g;
}

struct SnfResult {
    // Nonnegative diagonal of the Smith normal form, d1 | d2 | ... | dr,
    // length min(rows, cols); trailing zeros once the rank is exhausted.
    std::vector<Int> diagonal;
};

// Smith normal form diagonal via integer row/column elimination. Pivot
// choice: smallest nonzero magnitude in the trailing block, which keeps
// intermediate entries tame at the sizes this library targets.
inline SnfResult smith_normal_form(const IntMatrix& m) {
    IntMatrix w = m;
    const std::size_t nr = w.rows(), nc = w.cols();
    const std::size_t r = std::min(nr, nc);
    std::vector<Int> diag;
    diag.reserve(r);

    for (std::size_t k = 0; k < r; ++k) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        std::size_t pi = k, pj = k;
        bool found = false;
        Int best;
        for (std::size_t i = k; i < nr; ++i)
            for (std::size_t j = k; j < nc; ++j) {
                const Int& e = w(i, j);
                if (e == 0) continue;
                Int a = abs_int(e);
                if (!found || a < best) {
                    found = true;
                    best = std::move(a);
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;  // trailing block is zero
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        for (bool settled = false; !settled;) {
            settled = true;
            // Clear column k below the pivot. A nonzero remainder is
            // strictly smaller than the pivot: swap it up and restart.
            for (std::size_t i = k + 1; i < nr; ++i) {
                if (w(i, k) == 0) continue;
                Int q = w(i, k) / w(k, k);
                if (q != 0) w.add_row_multiple(i, k, -q);
                if (w(i, k) != 0) {
                    w.swap_rows(k, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Clear row k right of the pivot (column ops leave column k intact).
            for (std::size_t j = k + 1; j < nc; ++j) {
                if (w(k, j) == 0) continue;
                Int q = w(k, j) / w(k, k);
                if (q != 0) w.add_col_multiple(j, k, -q);
                if (w(k, j) != 0) {
                    w.swap_cols(k, j);
                    settled = false;
                }
            }
            if (!settled) continue;
            // Pivot must divide the trailing block for the chain property;
            // fold the first offending row into row k and re-eliminate.
            for (std::size_t i = k + 1; i < nr && settled; ++i)
                for (std::size_t j = k + 1; j < nc; ++j)
                    if (w(i, j) % w(k, k) != 0) {
                        w.add_row_multiple(k, i, 1);
                        settled = false;
                        break;
                    }
        }
        diag.push_back(abs_int(w(k, k)));
    }
    while (diag.size() < r) diag.emplace_back(0);
    return SnfResult{std::move(diag)};
}

// Cokernel Z^n / im(M) of a square integer matrix, in canonical form.
inline AbelianGroup cokernel(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("cokernel: matrix must be square");
    return canonicalize(smith_normal_form(m).diagonal);
}

// Exact inverse of a matrix with det = +-1, via the adjugate. Anything else
// is rejected: this library never leaves Z.
inline IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("unimodular_inverse: matrix must be square");
    const std::size_t n = m.rows();
    Int det = determinant(m);
    if (det != 1 && det != -1)
        throw std::invalid_argument("unimodular_inverse: determinant is " + det.str() +
                                    ", not a unit");
    IntMatrix inv(n, n);
    if (n == 1) {
        inv(0, 0) = det;
        return inv;
    }
    std::vector<std::size_t> ri, ci;
    ri.reserve(n - 1);
    ci.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ri.clear();
            ci.clear();
            for (std::size_t t = 0; t < n; ++t) {
                if (t != i) ri.push_back(t);
                if (t != j) ci.push_back(t);
            }
            Int cof = detail::minor_det(m, ri, ci);
            if ((i + j) % 2) cof = -cof;
            inv(j, i) = det * cof;  // adjugate transposes; det is +-1
        }
    return inv;
}

}  // namespace knotcov
