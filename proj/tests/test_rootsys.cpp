/**
 * Unit tests for the root-system layer.
 *
 * Oracle data (root counts, Coxeter numbers, highest roots, orthogonal
 * simple nodes) is frozen from the standard classification tables and
 * must never be regenerated from the code under test.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "minorb/rootsys.hpp"

#include <algorithm>
#include <map>
#include <vector>

using minorb::rootsys::build;
using minorb::rootsys::CartanDatum;
using minorb::rootsys::Family;
using minorb::rootsys::family_letter;
using minorb::rootsys::Rational;
using minorb::rootsys::Root;
using minorb::rootsys::RootSystem;

namespace {

struct TypeFacts {
    Family family;
    int rank;
    int num_roots;
    int coxeter;
    int dual_coxeter;
    int num_long;
};

// |Φ| = n(n+1) for A_n, 2n² for B_n/C_n, 2n(n−1) for D_n; h and h∨ per type.
const std::vector<TypeFacts> kFacts = {
    {Family::A, 1, 2, 2, 2, 2},       {Family::A, 2, 6, 3, 3, 6},
    {Family::A, 5, 30, 6, 6, 30},     {Family::A, 11, 132, 12, 12, 132},
    {Family::B, 2, 8, 4, 3, 4},       {Family::B, 3, 18, 6, 5, 12},
    {Family::B, 8, 128, 16, 15, 112}, {Family::C, 2, 8, 4, 3, 4},
    {Family::C, 3, 18, 6, 4, 6},      {Family::C, 8, 128, 16, 9, 16},
    {Family::D, 3, 12, 4, 4, 12},     {Family::D, 4, 24, 6, 6, 24},
    {Family::D, 8, 112, 14, 14, 112}, {Family::E, 6, 72, 12, 12, 72},
    {Family::E, 7, 126, 18, 18, 126}, {Family::E, 8, 240, 30, 30, 240},
    {Family::F, 4, 48, 12, 9, 24},    {Family::G, 2, 12, 6, 4, 6},
};

}  // namespace

TEST_CASE("family letters") {
    CHECK(family_letter(Family::A) == 'A');
    CHECK(family_letter(Family::G) == 'G');
}

TEST_CASE("root counts, Coxeter numbers, long-root counts") {
    for (const auto& f : kFacts) {
        CAPTURE(family_letter(f.family));
        CAPTURE(f.rank);
        RootSystem rs = build(f.family, f.rank);
        CHECK(rs.num_roots() == f.num_roots);
        CHECK(static_cast<int>(rs.positive_indices().size()) == f.num_roots / 2);
        CHECK(rs.coxeter_number() == f.coxeter);
        CHECK(rs.dual_coxeter_number() == f.dual_coxeter);
        CHECK(rs.long_count() == f.num_long);
    }
}

TEST_CASE("highest root coefficients") {
    auto hr = [](Family f, int n) { return build(f, n).highest_root().coeffs; };
    CHECK(hr(Family::A, 4) == std::vector<int>{1, 1, 1, 1});
    CHECK(hr(Family::B, 4) == std::vector<int>{1, 2, 2, 2});
    CHECK(hr(Family::C, 4) == std::vector<int>{2, 2, 2, 1});
    CHECK(hr(Family::D, 5) == std::vector<int>{1, 2, 2, 1, 1});
    CHECK(hr(Family::E, 6) == std::vector<int>{1, 2, 2, 3, 2, 1});
    CHECK(hr(Family::E, 7) == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
    CHECK(hr(Family::E, 8) == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
    CHECK(hr(Family::F, 4) == std::vector<int>{2, 3, 4, 2});
    CHECK(hr(Family::G, 2) == std::vector<int>{2, 3});
    for (const auto& f : kFacts) {
        RootSystem rs = build(f.family, f.rank);
        CHECK(rs.highest_root().is_long);
        CHECK(rs.highest_root().is_positive());
    }
}

TEST_CASE("simple nodes orthogonal to the highest root") {
    auto it = [](Family f, int n) { return build(f, n).i_tilde(); };
    // 0-based positions.
    CHECK(it(Family::A, 1) == std::vector<int>{});
    CHECK(it(Family::A, 2) == std::vector<int>{});
    CHECK(it(Family::A, 5) == std::vector<int>{1, 2, 3});
    CHECK(it(Family::B, 2) == std::vector<int>{0});
    CHECK(it(Family::B, 5) == std::vector<int>{0, 2, 3, 4});
    CHECK(it(Family::C, 4) == std::vector<int>{1, 2, 3});
    CHECK(it(Family::D, 5) == std::vector<int>{0, 2, 3, 4});
    CHECK(it(Family::E, 6) == std::vector<int>{0, 2, 3, 4, 5});
    CHECK(it(Family::E, 7) == std::vector<int>{1, 2, 3, 4, 5, 6});
    CHECK(it(Family::E, 8) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(it(Family::F, 4) == std::vector<int>{1, 2, 3});
    CHECK(it(Family::G, 2) == std::vector<int>{1});
}

TEST_CASE("long simple positions") {
    auto lsi = [](Family f, int n) { return build(f, n).long_simple_indices(); };
    CHECK(lsi(Family::A, 3) == std::vector<int>{0, 1, 2});
    CHECK(lsi(Family::B, 4) == std::vector<int>{0, 1, 2});
    CHECK(lsi(Family::C, 4) == std::vector<int>{3});
    CHECK(lsi(Family::D, 4) == std::vector<int>{0, 1, 2, 3});
    CHECK(lsi(Family::F, 4) == std::vector<int>{0, 1});
    CHECK(lsi(Family::G, 2) == std::vector<int>{0});
}

TEST_CASE("pairings and reflections") {
    RootSystem g2 = build(Family::G, 2);
    const Root& a1 = g2.root(g2.simple_root_index(0));
    const Root& a2 = g2.root(g2.simple_root_index(1));
    CHECK(g2.pairing(a1, a2) == -3);
    CHECK(g2.pairing(a2, a1) == -1);
    CHECK(g2.pairing(a1, a1) == 2);
    CHECK(a1.is_long);
    CHECK_FALSE(a2.is_long);

    // s_j(α_i) = α_i − ⟨α_i, α_j∨⟩α_j across several systems.
    for (Family f : {Family::A, Family::B, Family::F, Family::G}) {
        int rank = (f == Family::A) ? 3 : (f == Family::G ? 2 : 4);
        RootSystem rs = build(f, rank);
        for (int i = 0; i < rs.rank(); ++i) {
            for (int j = 0; j < rs.rank(); ++j) {
                Root ai = rs.root(rs.simple_root_index(i));
                Root aj = rs.root(rs.simple_root_index(j));
                Root refl = rs.reflect(aj, ai);
                std::vector<int> expect = ai.coeffs;
                expect[j] -= rs.datum().cartan[i][j];
                CHECK(refl.coeffs == expect);
            }
        }
        // Reflections are involutions and preserve length class.
        for (int idx = 0; idx < rs.num_roots(); ++idx) {
            for (int j = 0; j < rs.rank(); ++j) {
                int s = rs.simple_root_index(j);
                int once = rs.reflect_idx(s, idx);
                CHECK(rs.root(once).is_long == rs.root(idx).is_long);
                CHECK(rs.reflect_idx(s, once) == idx);
            }
        }
    }
}

TEST_CASE("pairing values are bounded as expected") {
    for (const auto& f : kFacts) {
        RootSystem rs = build(f.family, f.rank);
        for (int b : rs.positive_indices()) {
            for (int g : rs.positive_indices()) {
                int m = rs.pairing_idx(b, g);
                CHECK(m >= -3);
                CHECK(m <= (b == g ? 2 : 3));
            }
        }
        if (rs.num_roots() > 60) break;  // bound the quadratic sweep
    }
}

TEST_CASE("dual heights") {
    RootSystem b2 = build(Family::B, 2);
    CHECK(b2.dual_height(b2.root(b2.simple_root_index(1))) == Rational(1, 2));
    CHECK(b2.dual_height(b2.root(b2.simple_root_index(0))) == Rational(1));
    for (const auto& f : kFacts) {
        RootSystem rs = build(f.family, f.rank);
        CHECK(rs.dual_height(rs.highest_root()) == Rational(f.dual_coxeter - 1));
    }
}

TEST_CASE("levels of long roots") {
    RootSystem a1 = build(Family::A, 1);
    CHECK(a1.level(Root{{1}, true}) == 0);
    CHECK(a1.level(Root{{-1}, true}) == 1);

    RootSystem g2 = build(Family::G, 2);
    CHECK(g2.level(Root{{2, 3}, true}) == 0);
    CHECK(g2.level(Root{{1, 3}, true}) == 1);
    CHECK(g2.level(Root{{1, 0}, true}) == 2);
    CHECK(g2.level(Root{{-1, 0}, true}) == 3);
    CHECK(g2.level(Root{{-1, -3}, true}) == 4);
    CHECK(g2.level(Root{{-2, -3}, true}) == 5);
    CHECK_THROWS_AS(g2.level(Root{{0, 1}, false}), std::invalid_argument);

    RootSystem f4 = build(Family::F, 4);
    CHECK_THROWS_AS(f4.level(f4.root(f4.simple_root_index(3))), std::invalid_argument);

    for (const auto& f : kFacts) {
        CAPTURE(family_letter(f.family));
        CAPTURE(f.rank);
        RootSystem rs = build(f.family, f.rank);
        const int top = 2 * rs.dual_coxeter_number() - 3;
        std::map<int, int> histogram;
        for (int idx = 0; idx < rs.num_roots(); ++idx) {
            if (!rs.root(idx).is_long) continue;
            int lvl = rs.level_idx(idx);
            CHECK(lvl >= 0);
            CHECK(lvl <= top);
            ++histogram[lvl];
        }
        // Every level occupied; counts form a palindrome; the top level of the
        // positive half (and bottom of the negative half) is the extreme one.
        int total = 0;
        for (int lvl = 0; lvl <= top; ++lvl) {
            CHECK(histogram.count(lvl) == 1);
            CHECK(histogram[lvl] == histogram[top - lvl]);
            total += histogram[lvl];
        }
        CHECK(total == f.num_long);
        CHECK(histogram[0] == 1);
        CHECK(rs.level_idx(rs.highest_root_index()) == 0);
        CHECK(rs.level_idx(rs.negative_of(rs.highest_root_index())) == top);
    }
}

TEST_CASE("long simple subsystems") {
    auto sub = [](Family f, int n) { return build(f, n).long_simple_subsystem(); };
    auto type_of = [](const RootSystem& rs) {
        return std::pair<char, int>{family_letter(rs.datum().family), rs.rank()};
    };
    CHECK(type_of(sub(Family::B, 3)) == std::pair<char, int>{'A', 2});
    CHECK(sub(Family::B, 3).num_roots() == 6);
    CHECK(type_of(sub(Family::B, 8)) == std::pair<char, int>{'A', 7});
    CHECK(sub(Family::B, 8).num_roots() == 56);
    CHECK(type_of(sub(Family::C, 4)) == std::pair<char, int>{'A', 1});
    CHECK(sub(Family::C, 4).num_roots() == 2);
    CHECK(type_of(sub(Family::F, 4)) == std::pair<char, int>{'A', 2});
    CHECK(type_of(sub(Family::G, 2)) == std::pair<char, int>{'A', 1});
    CHECK(type_of(sub(Family::D, 4)) == std::pair<char, int>{'D', 4});
    CHECK(sub(Family::D, 4).num_roots() == 24);
    CHECK(type_of(sub(Family::E, 6)) == std::pair<char, int>{'E', 6});
    CHECK(type_of(sub(Family::A, 4)) == std::pair<char, int>{'A', 4});
    // The subsystem is simply laced: r = 1 and every root long.
    RootSystem s = sub(Family::B, 5);
    CHECK(s.r() == 1);
    CHECK(s.long_count() == s.num_roots());
}

TEST_CASE("weight-basis helpers") {
    for (Family f : {Family::A, Family::C, Family::F}) {
        int rank = (f == Family::A) ? 4 : 4;
        RootSystem rs = build(f, rank);
        for (int i = 0; i < rs.rank(); ++i) {
            auto v = rs.simple_root_weight_coords(i);
            for (int j = 0; j < rs.rank(); ++j) {
                // ⟨α_i, α_j∨⟩ = C[i][j] in both coordinate systems.
                CHECK(v[j] == rs.datum().cartan[i][j]);
                CHECK(rs.weight_pairing(v, rs.simple_root_index(j)) ==
                      rs.pairing_idx(rs.simple_root_index(i), rs.simple_root_index(j)));
            }
        }
        // s_γ negates the pairing with γ and is an involution.
        std::vector<long long> rho(rs.rank(), 1);
        for (int idx = 0; idx < rs.num_roots(); ++idx) {
            auto w = rs.weight_reflect(idx, rho);
            CHECK(rs.weight_pairing(w, idx) == -rs.weight_pairing(rho, idx));
            CHECK(rs.weight_reflect(idx, w) == rho);
        }
    }
}

TEST_CASE("root enumeration is deterministic") {
    RootSystem a2 = build(Family::A, 2);
    CHECK(a2.root(0).coeffs == std::vector<int>{1, 1});  // descending lex order
    CHECK(a2.index_of(std::vector<int>{1, 1}) == 0);
    CHECK(a2.index_of(std::vector<int>{5, 5}) == -1);
    for (const auto& f : kFacts) {
        RootSystem rs = build(f.family, f.rank);
        for (int idx = 0; idx < rs.num_roots(); ++idx) {
            CHECK(rs.negative_of(rs.negative_of(idx)) == idx);
            CHECK(rs.index_of(rs.root(idx)) == idx);
        }
    }
}

TEST_CASE("invalid types are rejected with diagnostics") {
    CHECK_THROWS_AS(build(Family::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::A, 33), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::C, 17), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::E, 5), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::E, 9), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::F, 3), std::invalid_argument);
    CHECK_THROWS_AS(build(Family::G, 4), std::invalid_argument);
    try {
        build(Family::E, 9);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("E9") != std::string::npos);
    }
}

TEST_CASE("datum validation") {
    CartanDatum good{Family::A, 2, {{2, -1}, {-1, 2}}, {1, 1}, 1};
    CHECK_NOTHROW(good.validate());

    CartanDatum bad_diag = good;
    bad_diag.cartan[0][0] = 1;
    CHECK_THROWS_AS(bad_diag.validate(), std::invalid_argument);

    CartanDatum bad_zero = good;
    bad_zero.cartan[0][1] = 0;
    CHECK_THROWS_AS(bad_zero.validate(), std::invalid_argument);

    CartanDatum bad_sym{Family::B, 2, {{2, -2}, {-1, 2}}, {1, 1}, 1};
    CHECK_THROWS_AS(bad_sym.validate(), std::invalid_argument);

    CartanDatum good_b2{Family::B, 2, {{2, -2}, {-1, 2}}, {2, 1}, 2};
    CHECK_NOTHROW(good_b2.validate());

    CartanDatum unnormalized{Family::B, 2, {{2, -2}, {-1, 2}}, {4, 2}, 2};
    CHECK_THROWS_AS(unnormalized.validate(), std::invalid_argument);
}
