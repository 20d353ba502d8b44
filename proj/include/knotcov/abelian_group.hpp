#pragma once

#include "knotcov/integer.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace knotcov {

// Finitely generated abelian group in canonical form:
//   Z^free_rank  +  Z_d1 + ... + Z_dm   with 2 <= d1 | d2 | ... | dm.
// Equality of canonical forms is isomorphism.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianGroup&) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }

    // Group order; nullopt when infinite.
    std::optional<Int> order() const {
        if (free_rank > 0) return std::nullopt;
        Int prod = 1;
        for (const Int& d : torsion) prod *= d;
        return prod;
    }

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream out;
        bool first = true;
        auto sep = [&] {
            if (!first) out << " + ";
            first = false;
        };
        if (free_rank == 1) {
            sep();
            out << "Z";
        } else if (free_rank > 1) {
            sep();
            out << "Z^" << free_rank;
        }
        for (const Int& d : torsion) {
            sep();
            out << "Z_" << d;
        }
        return out.str();
    }
};

// Builds the canonical form of  Z_{c1} + Z_{c2} + ...  from an arbitrary
// list of cyclic orders: signs are dropped, 0 means an infinite factor,
// +-1 factors vanish, and the rest are merged into a divisibility chain by
// repeated gcd/lcm exchange (Z_x + Z_y ~ Z_gcd(x,y) + Z_lcm(x,y)).
inline AbelianGroup canonicalize(std::vector<Int> summands) {
    AbelianGroup g;
    std::vector<Int>& tor = g.torsion;
    for (Int& c : summands) {
        if (c < 0) c = -c;
        if (c == 0)
            ++g.free_rank;
        else if (c > 1)
            tor.push_back(std::move(c));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < tor.size(); ++i) {
            for (std::size_t j = i + 1; j < tor.size(); ++j) {
                if (tor[j] % tor[i] == 0) continue;
                Int d = gcd(tor[i], tor[j]);
                Int m = tor[i] / d * tor[j];
                tor[i] = std::move(d);
                tor[j] = std::move(m);
                changed = true;
            }
        }
    }
    std::erase(tor, Int(1));
    return g;
}

}  // namespace knotcov
