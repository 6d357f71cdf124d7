#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "minorb/golden.hpp"
#include "minorb/gysin.hpp"
#include "minorb/orbitposet.hpp"
#include "minorb/rootsys.hpp"

#include <map>
#include <stdexcept>
#include <string>

using minorb::golden::bidiagonal_square;
using minorb::golden::bidiagonal_tall;
using minorb::golden::closed_form_table;
using minorb::golden::exceptional_tables;
using minorb::golden::expected_differential;
using minorb::golden::printed_matrices;
using minorb::golden::unsigned_cartan;
using minorb::gysin::minimal_orbit_cohomology;
using minorb::rootsys::build;
using minorb::rootsys::Family;
using minorb::zlinalg::IntMatrix;

namespace orbitposet = minorb::orbitposet;

TEST_CASE("matrix builders") {
    CHECK(bidiagonal_square(1) == IntMatrix{{1}});
    CHECK(bidiagonal_square(3) == IntMatrix{{1, 0, 0}, {1, 1, 0}, {0, 1, 1}});
    CHECK(bidiagonal_tall(1) == IntMatrix{{1}, {1}});
    CHECK(bidiagonal_tall(2) == IntMatrix{{1, 0}, {1, 1}, {0, 1}});
    CHECK(unsigned_cartan(Family::A, 3) == IntMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
    CHECK(unsigned_cartan(Family::G, 2) == IntMatrix{{2, 3}, {1, 2}});
    CHECK(unsigned_cartan(Family::D, 4) ==
          IntMatrix{{2, 1, 0, 0}, {1, 2, 1, 1}, {0, 1, 2, 0}, {0, 1, 0, 2}});
}

TEST_CASE("closed-form tables equal the computed cohomology") {
    const struct {
        Family family;
        int lo;
        int hi;
    } sweeps[] = {{Family::A, 1, 5}, {Family::B, 2, 5}, {Family::C, 2, 5}, {Family::D, 3, 5}};
    for (const auto& sweep : sweeps) {
        for (int rank = sweep.lo; rank <= sweep.hi; ++rank) {
            CAPTURE(static_cast<int>(sweep.family));
            CAPTURE(rank);
            CHECK(closed_form_table(sweep.family, rank) ==
                  minimal_orbit_cohomology(build(sweep.family, rank)));
        }
    }
    CHECK_THROWS_AS(closed_form_table(Family::E, 6), std::invalid_argument);
}

TEST_CASE("closed-form differentials equal the computed matrices") {
    const struct {
        Family family;
        int rank;
    } cases[] = {{Family::A, 3},  {Family::A, 5}, {Family::B, 2}, {Family::B, 4},
                 {Family::C, 3},  {Family::D, 3}, {Family::D, 4}, {Family::D, 5},
                 {Family::D, 6}};
    for (const auto& c : cases) {
        CAPTURE(static_cast<int>(c.family));
        CAPTURE(c.rank);
        const auto rs = build(c.family, c.rank);
        const auto diag = orbitposet::build_level_diagram(rs);
        const int d = 2 * rs.dual_coxeter_number() - 2;
        for (int i = 0; i <= d; ++i) {
            CAPTURE(i);
            CHECK(orbitposet::differential_matrix(diag, i).matrix ==
                  expected_differential(c.family, c.rank, i));
        }
        CHECK_THROWS_AS(expected_differential(c.family, c.rank, d + 1), std::out_of_range);
    }
    CHECK_THROWS_AS(expected_differential(Family::G, 2, 1), std::invalid_argument);
}

TEST_CASE("exceptional fixture tables match the computed cohomology") {
    const auto tables = exceptional_tables();
    REQUIRE(tables.size() == 5);
    std::map<std::pair<char, int>, bool> seen;
    for (const auto& t : tables) {
        CAPTURE(minorb::rootsys::family_letter(t.family));
        CAPTURE(t.rank);
        seen[{minorb::rootsys::family_letter(t.family), t.rank}] = true;
        const auto rs = build(t.family, t.rank);
        CHECK(t.h_dual == rs.dual_coxeter_number());
        CHECK(t.table == minimal_orbit_cohomology(rs));
    }
    CHECK(seen.size() == 5);
    CHECK(seen.count({'E', 6}) == 1);
    CHECK(seen.count({'E', 7}) == 1);
    CHECK(seen.count({'E', 8}) == 1);
    CHECK(seen.count({'F', 4}) == 1);
    CHECK(seen.count({'G', 2}) == 1);
}

TEST_CASE("transcribed matrix lists match the computed differentials") {
    const struct {
        Family family;
        int rank;
        int count;
    } cases[] = {{Family::G, 2, 5},
                 {Family::F, 4, 8},
                 {Family::E, 6, 10},
                 {Family::E, 7, 16},
                 {Family::E, 8, 28}};
    for (const auto& c : cases) {
        CAPTURE(static_cast<int>(c.family));
        CAPTURE(c.rank);
        const auto fixture = printed_matrices(c.family, c.rank);
        REQUIRE(static_cast<int>(fixture.printed.size()) == c.count);
        const auto rs = build(c.family, c.rank);
        const auto diag = orbitposet::build_level_diagram(rs);
        for (const auto& [index, matrix] : fixture.printed) {
            CAPTURE(index);
            CHECK(orbitposet::differential_matrix(diag, index).matrix == matrix);
        }
    }
    CHECK_THROWS_AS(printed_matrices(Family::B, 3), std::invalid_argument);
}

TEST_CASE("fixture directory resolves") {
    const std::string dir = minorb::golden::fixture_dir();
    CHECK(dir.find("fixtures") != std::string::npos);
}
