#include "minorb/golden.hpp"

#include "minorb/format.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#ifndef MINORB_DEFAULT_FIXTURE_DIR
#define MINORB_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace minorb::golden {

using rootsys::Family;
using zlinalg::FGAbelianGroup;
using zlinalg::Int;

namespace {

void add_free(std::map<int, FGAbelianGroup>& groups, int degree) { ++groups[degree].free_rank; }

void set_torsion(std::map<int, FGAbelianGroup>& groups, int degree, std::vector<Int> divisors) {
    groups[degree].torsion = std::move(divisors);
}

/// First value ≥ from congruent to residue mod 4.
int first_mod4(int from, int residue) {
    int i = from;
    while (((i % 4) + 4) % 4 != residue) ++i;
    return i;
}

GradedCohomology finish(int top, std::map<int, FGAbelianGroup> groups) {
    GradedCohomology out;
    out.top_degree = top;
    out.groups = std::move(groups);
    return out;
}

// A_{n−1}: ℤ at even 0..2n−4 and odd 2n−1..4n−5, ℤ/n at 2n−2.
GradedCohomology table_a(int n) {
    std::map<int, FGAbelianGroup> g;
    for (int i = 0; i <= 2 * n - 4; i += 2) add_free(g, i);
    set_torsion(g, 2 * n - 2, {Int(n)});
    for (int i = 2 * n - 1; i <= 4 * n - 5; i += 2) add_free(g, i);
    return finish(4 * n - 5, std::move(g));
}

// B_n: ℤ at i ≡ 0 (4) in [0, 4n−8] and i ≡ 3 (4) in [4n−1, 8n−9],
// ℤ/2 at i ≡ 2 (4) in [2n−2, 6n−6], ℤ/n at 4n−4.
GradedCohomology table_b(int n) {
    std::map<int, FGAbelianGroup> g;
    for (int i = 0; i <= 4 * n - 8; i += 4) add_free(g, i);
    for (int i = first_mod4(4 * n - 1, 3); i <= 8 * n - 9; i += 4) add_free(g, i);
    for (int i = first_mod4(2 * n - 2, 2); i <= 6 * n - 6; i += 4) set_torsion(g, i, {Int(2)});
    set_torsion(g, 4 * n - 4, {Int(n)});
    return finish(8 * n - 9, std::move(g));
}

// C_n: ℤ at 0 and 4n−1, ℤ/2 at every other even degree 2..4n−2.
GradedCohomology table_c(int n) {
    std::map<int, FGAbelianGroup> g;
    add_free(g, 0);
    for (int i = 2; i <= 4 * n - 2; i += 2) set_torsion(g, i, {Int(2)});
    add_free(g, 4 * n - 1);
    return finish(4 * n - 1, std::move(g));
}

// D_n: ℤ at i ≡ 0 (4) in [0, 4n−8] and i ≡ 3 (4) in [4n−5, 8n−13];
// ℤ/2 at i ≡ 2 (4) strictly inside (2n−4, 4n−6) and (4n−6, 6n−8);
// middle 4n−6 is (ℤ/2)² for n even, ℤ/4 for n odd; an extra ℤ summand
// sits at 2n−4 and at 6n−9.
GradedCohomology table_d(int n) {
    std::map<int, FGAbelianGroup> g;
    for (int i = 0; i <= 4 * n - 8; i += 4) add_free(g, i);
    for (int i = first_mod4(4 * n - 5, 3); i <= 8 * n - 13; i += 4) add_free(g, i);
    for (int i = first_mod4(2 * n - 3, 2); i < 4 * n - 6; i += 4) set_torsion(g, i, {Int(2)});
    for (int i = first_mod4(4 * n - 5, 2); i < 6 * n - 8; i += 4) set_torsion(g, i, {Int(2)});
    if (n % 2 == 0) {
        set_torsion(g, 4 * n - 6, {Int(2), Int(2)});
    } else {
        set_torsion(g, 4 * n - 6, {Int(4)});
    }
    add_free(g, 2 * n - 4);
    add_free(g, 6 * n - 9);
    return finish(8 * n - 13, std::move(g));
}

/// Add delta at 1-based (i, j); out-of-range positions are silently dropped,
/// matching the convention that a unit matrix with an out-of-range support
/// is the zero matrix.
void bump(IntMatrix& m, int i, int j, long long delta) {
    if (i < 1 || j < 1 || i > static_cast<int>(m.rows()) || j > static_cast<int>(m.cols()))
        return;
    m.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) += delta;
}

/// Stack a (1, below.cols()) row (1, 0, …, 0) on top of `below`.
IntMatrix stack_unit_row(const IntMatrix& below) {
    IntMatrix out(below.rows() + 1, below.cols());
    if (below.cols() > 0) out.at(0, 0) = 1;
    for (std::size_t r = 0; r < below.rows(); ++r)
        for (std::size_t c = 0; c < below.cols(); ++c) out.at(r + 1, c) = below.at(r, c);
    return out;
}

IntMatrix lower_half_differential(Family family, int rank, int n, int i) {
    switch (family) {
        case Family::A:
            if (i <= n - 2) return bidiagonal_tall(i);
            return unsigned_cartan(Family::A, n - 1);  // middle, i = n−1
        case Family::C:
            return IntMatrix{{2}};
        case Family::B: {
            if (i == 2 * n - 2) return unsigned_cartan(Family::A, n - 1);  // middle
            IntMatrix base =
                (i % 2 != 0) ? bidiagonal_square((i + 1) / 2) : bidiagonal_tall(i / 2);
            if (i >= n - 1) bump(base, i + 2 - n, i + 2 - n, 1);
            return base;
        }
        case Family::D: {
            if (i == 2 * n - 3) return unsigned_cartan(Family::D, n);  // middle
            if (i <= n - 3)
                return (i % 2 != 0) ? bidiagonal_square((i + 1) / 2) : bidiagonal_tall(i / 2);
            if (i == n - 2)
                return stack_unit_row((n % 2 == 0) ? bidiagonal_tall((n - 2) / 2)
                                                   : bidiagonal_square((n - 1) / 2));
            // n−1 ≤ i ≤ 2n−4: bidiagonal block with a three-entry correction.
            IntMatrix base =
                (i % 2 != 0) ? bidiagonal_square((i + 3) / 2) : bidiagonal_tall((i + 2) / 2);
            bump(base, i + 2 - n, i + 3 - n, 1);
            bump(base, i + 3 - n, i + 3 - n, -1);
            bump(base, i + 3 - n, i + 4 - n, 1);
            return base;
        }
        default:
            throw std::invalid_argument("closed-form differentials exist only for families A-D");
    }
}

}  // namespace

GradedCohomology closed_form_table(Family family, int rank) {
    switch (family) {
        case Family::A:
            return table_a(rank + 1);
        case Family::B:
            return table_b(rank);
        case Family::C:
            return table_c(rank);
        case Family::D:
            return table_d(rank);
        default:
            throw std::invalid_argument("closed-form tables exist only for families A-D");
    }
}

IntMatrix bidiagonal_square(int k) {
    IntMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
        m.at(r, r) = 1;
        if (r > 0) m.at(r, r - 1) = 1;
    }
    return m;
}

IntMatrix bidiagonal_tall(int k) {
    IntMatrix m(static_cast<std::size_t>(k) + 1, static_cast<std::size_t>(k));
    for (int r = 0; r <= k; ++r) {
        if (r < k) m.at(r, r) = 1;
        if (r > 0) m.at(r, r - 1) = 1;
    }
    return m;
}

IntMatrix unsigned_cartan(Family family, int rank) {
    const auto rs = rootsys::build(family, rank);
    const auto& cartan = rs.datum().cartan;
    IntMatrix m(static_cast<std::size_t>(rank), static_cast<std::size_t>(rank));
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) m.at(r, c) = std::abs(cartan[r][c]);
    return m;
}

IntMatrix expected_differential(Family family, int rank, int i) {
    int n = 0;
    int d = 0;
    switch (family) {
        case Family::A:
            n = rank + 1;
            d = 2 * n - 2;
            break;
        case Family::B:
            n = rank;
            d = 4 * n - 4;
            break;
        case Family::C:
            n = rank;
            d = 2 * n;
            break;
        case Family::D:
            n = rank;
            d = 4 * n - 6;
            break;
        default:
            throw std::invalid_argument("closed-form differentials exist only for families A-D");
    }
    if (i < 0 || i > d) {
        throw std::out_of_range("differential index " + std::to_string(i) +
                                " outside [0, " + std::to_string(d) + "]");
    }
    if (2 * i > d) return expected_differential(family, rank, d - i).transpose();
    if (i == 0) return IntMatrix(1, 0);
    return lower_half_differential(family, rank, n, i);
}

std::string fixture_dir() {
    if (const char* env = std::getenv("MINORB_FIXTURE_DIR")) return env;
    return MINORB_DEFAULT_FIXTURE_DIR;
}

namespace {

nlohmann::json load_json_file(const std::string& filename) {
    const std::string path = fixture_dir() + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("cannot parse fixture file " + path + ": " + e.what());
    }
    return j;
}

IntMatrix matrix_from_rows(const nlohmann::json& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r > 0 ? rows.at(0).size() : 0;
    IntMatrix m(r, c);
    for (std::size_t a = 0; a < r; ++a) {
        if (rows.at(a).size() != c) throw std::runtime_error("ragged matrix rows in fixture");
        for (std::size_t b = 0; b < c; ++b) m.at(a, b) = rows.at(a).at(b).get<long long>();
    }
    return m;
}

}  // namespace

std::vector<ExceptionalTable> exceptional_tables() {
    const nlohmann::json j = load_json_file("tables_exceptional.json");
    if (!j.is_array()) throw std::runtime_error("tables_exceptional.json: expected an array");
    std::vector<ExceptionalTable> out;
    for (const auto& entry : j) {
        // Reuse the CLI parser so the fixture format and the JSON output
        // format can never drift apart.
        format::ParsedCohomology parsed = format::parse_cohomology_json(entry.dump());
        out.push_back({parsed.family, parsed.rank, parsed.h_dual, std::move(parsed.table)});
    }
    return out;
}

PrintedMatrices printed_matrices(Family family, int rank) {
    std::string filename;
    if (family == Family::E && rank == 6) {
        filename = "matrices_e6.json";
    } else if (family == Family::E && rank == 7) {
        filename = "matrices_e7.json";
    } else if (family == Family::E && rank == 8) {
        filename = "matrices_e8.json";
    } else if (family == Family::F && rank == 4) {
        filename = "matrices_f4.json";
    } else if (family == Family::G && rank == 2) {
        filename = "matrices_g2.json";
    } else {
        throw std::invalid_argument("no transcribed matrix list for this type");
    }
    const nlohmann::json j = load_json_file(filename);
    PrintedMatrices out;
    out.family = family;
    out.rank = rank;
    const std::string expect_letter(1, rootsys::family_letter(family));
    if (j.value("type", "") != expect_letter || j.value("rank", -1) != rank) {
        throw std::runtime_error(filename + ": type/rank header does not match the request");
    }
    for (const auto& entry : j.at("printed")) {
        out.printed.emplace_back(entry.at("index").get<int>(),
                                 matrix_from_rows(entry.at("rows")));
    }
    return out;
}

}  // namespace minorb::golden
