#include "knotcov/homology.hpp"

#include "knotcov/knot_model.hpp"
#include "knotcov/zmat.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

using knotcov::AbelianGroup;
using knotcov::AlexanderPoly;
using knotcov::HomologyResult;
using knotcov::Int;

namespace {

std::vector<std::pair<Int, Int>> genus2_grid() {
    std::vector<std::pair<Int, Int>> g;
    for (int a = -3; a <= 3; ++a) {
        if (a == 0) continue;
        for (int b = -3; b <= 3; ++b) g.emplace_back(a, b);
    }
    return g;
}

AbelianGroup torsion_group(std::vector<Int> factors) {
    AbelianGroup g;
    g.torsion = std::move(factors);
    return g;
}

}  // namespace

TEST_CASE("canonicalize") {
    REQUIRE(knotcov::canonicalize({}) == AbelianGroup{});
    REQUIRE(knotcov::canonicalize({1, -11, 1, 1}) == torsion_group({11}));
    REQUIRE(knotcov::canonicalize({0, 0}).free_rank == 2);
    REQUIRE(knotcov::canonicalize({2, 3}) == torsion_group({6}));
    REQUIRE(knotcov::canonicalize({4, 6}) == torsion_group({2, 12}));
    REQUIRE(knotcov::canonicalize({-5, 5, 0}) ==
            AbelianGroup{1, {5, 5}});
    // agreement with the Smith normal form of the same diagonal
    REQUIRE(knotcov::canonicalize({4, 6}) ==
            knotcov::cokernel(knotcov::IntMatrix{{4, 0}, {0, 6}}));
    REQUIRE(knotcov::canonicalize({6, 10, 15}) ==
            knotcov::cokernel(knotcov::IntMatrix{{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}));
}

TEST_CASE("group formatting and order") {
    REQUIRE(AbelianGroup{}.to_string() == "0");
    REQUIRE(AbelianGroup{1, {}}.to_string() == "Z");
    REQUIRE(AbelianGroup{2, {}}.to_string() == "Z^2");
    REQUIRE(torsion_group({2, 4}).to_string() == "Z_2 + Z_4");
    REQUIRE(AbelianGroup{1, {3}}.to_string() == "Z + Z_3");
    REQUIRE(AbelianGroup{}.order() == Int(1));
    REQUIRE_FALSE(AbelianGroup{1, {}}.order().has_value());
    REQUIRE(torsion_group({2, 4}).order() == Int(8));
}

TEST_CASE("genus-1 homology") {
    HomologyResult h = knotcov::homology_genus1(-2, 2);
    REQUIRE(h.group == torsion_group({9}));
    REQUIRE(h.certificate.branch == "genus1-even");

    REQUIRE(knotcov::homology_genus1(1, 6).group == AbelianGroup{2, {}});
    REQUIRE(knotcov::homology_genus1(4, 3).group == torsion_group({11, 11}));
    REQUIRE(knotcov::homology_genus1(-2, 5).group == torsion_group({31, 31}));

    REQUIRE_THROWS_AS(knotcov::homology_genus1(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(knotcov::homology_genus1(2, 0), std::invalid_argument);
}

TEST_CASE("genus-2 odd theorem") {
    HomologyResult h = knotcov::homology_genus2_odd(-1, 2, 3);
    REQUIRE(h.group == torsion_group({5, 5}));
    REQUIRE(h.certificate.value("alpha_hat") == Int(1));
    REQUIRE(h.certificate.value("beta_hat") == Int(-5));
    REQUIRE(h.certificate.value("s") == Int(5));
    REQUIRE(h.certificate.value("t") == Int(-3));
    REQUIRE(h.certificate.violations.empty());

    REQUIRE(knotcov::homology_genus2_odd(1, -4, 7).group == torsion_group({421, 421}));
    REQUIRE(knotcov::homology_genus2_odd(1, -2, 1).group.is_trivial());
    REQUIRE(knotcov::homology_genus2_odd(-1, 2, 5).group == torsion_group({2, 2, 2, 2}));

    REQUIRE_THROWS_AS(knotcov::homology_genus2_odd(0, 2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(knotcov::homology_genus2_odd(1, 2, 4), std::invalid_argument);
}

TEST_CASE("genus-2 even theorem") {
    HomologyResult h = knotcov::homology_genus2_even(-1, 2, 4);
    REQUIRE(h.group == torsion_group({11}));
    REQUIRE(h.certificate.value("d1") == Int(1));
    REQUIRE(h.certificate.value("d2") == Int(1));
    REQUIRE(h.certificate.value("d3") == Int(-1));
    REQUIRE(h.certificate.value("d4") == Int(-11));
    REQUIRE(h.certificate.value("zeta") == Int(9));
    REQUIRE(h.certificate.value("mu") == Int(-1));
    REQUIRE(h.certificate.value("k") == Int(-11));
    REQUIRE(h.certificate.violations.empty());

    REQUIRE(knotcov::homology_genus2_even(1, -2, 10).group == torsion_group({8, 8, 8, 104}));
    REQUIRE(knotcov::homology_genus2_even(1, -4, 12).group ==
            torsion_group({5, 105, 1365, 1365}));
    REQUIRE(knotcov::homology_genus2_even(-1, 2, 12).group == torsion_group({11, 55, 55}));

    // vanishing B(n): whole ladder is zero, group is free of rank 4,
    // and the 0/0 quotients are conventions, not violations
    HomologyResult z = knotcov::homology_genus2_even(1, 1, 12);
    REQUIRE(z.group == AbelianGroup{4, {}});
    REQUIRE(z.certificate.violations.empty());
    REQUIRE(knotcov::homology_genus2_even(1, 0, 10).group == AbelianGroup{4, {}});

    // n = 2 is the order-|k| cyclic group across the family
    for (const auto& [a, b] : genus2_grid()) {
        Int k = 1 + 4 * a - 4 * b;
        REQUIRE(knotcov::homology_genus2_even(a, b, 2).group == knotcov::canonicalize({k}));
    }

    REQUIRE_THROWS_AS(knotcov::homology_genus2_even(1, 2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(knotcov::homology_genus2_even(1, 2, 0), std::invalid_argument);
}

TEST_CASE("dispatch") {
    REQUIRE(knotcov::homology(AlexanderPoly::genus2(1, -2), 7).group ==
            torsion_group({43, 43}));
    REQUIRE(knotcov::homology(AlexanderPoly::genus2(1, -2), 13).group ==
            torsion_group({1171, 1171}));
    REQUIRE(knotcov::homology(AlexanderPoly::genus2(1, -4), 12).certificate.branch ==
            "genus2-even");
    REQUIRE(knotcov::homology(AlexanderPoly::genus1(-2), 2).group == torsion_group({9}));

    HomologyResult triv = knotcov::homology(AlexanderPoly::genus2(3, 3), 1);
    REQUIRE(triv.group.is_trivial());
    REQUIRE(triv.certificate.branch == "trivial-cover");
    REQUIRE(triv.certificate.intermediates.empty());

    REQUIRE_THROWS_AS(knotcov::homology(AlexanderPoly::genus1(2), 0), std::invalid_argument);
}

TEST_CASE("certificates reproduce their groups") {
    for (const auto& [a, b] : genus2_grid()) {
        AlexanderPoly p = AlexanderPoly::genus2(a, b);
        for (unsigned n = 1; n <= 9; ++n) {
            HomologyResult h = knotcov::homology(p, n);
            REQUIRE(knotcov::group_from_certificate(h.certificate) == h.group);
        }
    }
    for (int b = -3; b <= 3; ++b) {
        if (b == 0) continue;
        for (unsigned n = 1; n <= 9; ++n) {
            HomologyResult h = knotcov::homology(AlexanderPoly::genus1(b), n);
            REQUIRE(knotcov::group_from_certificate(h.certificate) == h.group);
        }
    }
    // synthetic vanishing-ladder certificate assembles to Z^4
    knotcov::HomologyCertificate c;
    c.branch = "genus2-odd";
    c.intermediates = {{"alpha_hat", 0}, {"beta_hat", 0}};
    REQUIRE(knotcov::group_from_certificate(c) == AbelianGroup{4, {}});
    c.intermediates.clear();
    REQUIRE_THROWS_AS(knotcov::group_from_certificate(c), std::logic_error);
}

TEST_CASE("odd covers carry a doubled group") {
    for (const auto& [a, b] : genus2_grid()) {
        AlexanderPoly p = AlexanderPoly::genus2(a, b);
        for (unsigned n = 3; n <= 13; n += 2) {
            AbelianGroup g = knotcov::homology(p, n).group;
            REQUIRE(g.free_rank % 2 == 0);
            std::map<Int, int> mult;
            for (const Int& d : g.torsion) ++mult[d];
            for (const auto& [d, m] : mult) REQUIRE(m % 2 == 0);
        }
    }
}

TEST_CASE("double cover matches the knot determinant") {
    for (const auto& [a, b] : genus2_grid()) {
        AlexanderPoly p = AlexanderPoly::genus2(a, b);
        REQUIRE(knotcov::homology(p, 2).group ==
                knotcov::canonicalize({knot_determinant(p)}));
    }
    for (int b = -4; b <= 4; ++b) {
        if (b == 0) continue;
        AlexanderPoly p = AlexanderPoly::genus1(b);
        REQUIRE(knotcov::homology(p, 2).group ==
                knotcov::canonicalize({knot_determinant(p)}));
    }
}

TEST_CASE("table pair recovery") {
    using knotcov::table_pair;
    auto odd = knotcov::homology(AlexanderPoly::genus2(-1, 2), 3);
    REQUIRE(table_pair(odd.certificate) == std::pair<Int, Int>{1, 5});
    auto even = knotcov::homology(AlexanderPoly::genus2(-1, 2), 12);
    REQUIRE(table_pair(even.certificate) == std::pair<Int, Int>{1, 55});
    auto triv = knotcov::homology(AlexanderPoly::genus2(-1, 2), 1);
    REQUIRE(table_pair(triv.certificate) == std::pair<Int, Int>{1, 1});
    auto g1 = knotcov::homology(AlexanderPoly::genus1(-2), 5);
    REQUIRE(table_pair(g1.certificate) == std::pair<Int, Int>{31, 11});
}

TEST_CASE("exact sequence order identity") {
    auto rep = knotcov::exact_sequence_check(-1, 2, 4);
    REQUIRE(rep.applicable);
    REQUIRE(rep.pass);
    REQUIRE(rep.h1_order == Int(11));
    REQUIRE(rep.k_abs == 11);
    REQUIRE(rep.sub_order == 1);

    auto rep12 = knotcov::exact_sequence_check(1, -4, 12);
    REQUIRE(rep12.applicable);
    REQUIRE(rep12.pass);

    auto infinite = knotcov::exact_sequence_check(1, 1, 12);
    REQUIRE_FALSE(infinite.applicable);
    REQUIRE_FALSE(infinite.h1_order.has_value());

    for (const auto& [a, b] : genus2_grid())
        for (unsigned n = 2; n <= 10; n += 2) {
            auto r = knotcov::exact_sequence_check(a, b, n);
            if (r.applicable) REQUIRE(r.pass);
        }
}
