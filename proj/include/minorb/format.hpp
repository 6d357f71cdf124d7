/**
 * format.hpp — text and JSON rendering of computed results.
 *
 * Two complementary renderings of the same data guard against transcription
 * slips: text output shows each group in primary decomposition (e.g.
 * "(ℤ/2)^2"), while JSON carries the invariant factors exactly as computed.
 * JSON output round-trips losslessly through parse_cohomology_json.
 */
#pragma once

#include "minorb/gysin.hpp"
#include "minorb/orbitposet.hpp"
#include "minorb/rootsys.hpp"
#include "minorb/zlinalg.hpp"

#include <string>

namespace minorb::format {

/**
 * Primary decomposition of a finitely generated abelian group:
 * "0", "ℤ", "ℤ^2", "ℤ/4", "(ℤ/2)^2", "ℤ ⊕ ℤ/2 ⊕ ℤ/3", … — free part first,
 * then prime-power cyclic factors ordered by prime and exponent.
 */
std::string group_text(const zlinalg::FGAbelianGroup& g);

/// One "H^n = …" line per nonzero degree, in increasing degree order.
std::string table_text(const gysin::GradedCohomology& coh);

/**
 * Stable JSON schema:
 *   {"type": "<letter>", "rank": k, "h_dual": h∨,
 *    "groups": [{"degree": n, "free_rank": r, "torsion": [d₁,…]}, …]}
 * Zero groups are omitted; torsion lists the invariant factors d₁ | d₂ | ….
 */
std::string cohomology_json(rootsys::Family family, int rank, int h_dual,
                            const gysin::GradedCohomology& coh);

struct ParsedCohomology {
    rootsys::Family family = rootsys::Family::A;
    int rank = 0;
    int h_dual = 0;
    gysin::GradedCohomology table;

    bool operator==(const ParsedCohomology&) const = default;
};

/// Inverse of cohomology_json; the top degree is recovered as 4h∨−5.
/// Throws std::invalid_argument on malformed input.
ParsedCohomology parse_cohomology_json(const std::string& text);

/**
 * Compact one-line matrix: "(2)" for 1×1, "(2;1)" for a column, "(1,2)" for
 * a row, otherwise the row list "[[1,2],[0,1]]".
 */
std::string matrix_text(const zlinalg::IntMatrix& m);

/// "D_i = …" lines for every interior differential (1 ≤ i ≤ 2h∨−3).
std::string matrices_text(const orbitposet::LevelDiagram& d);

/// JSON {"type","rank","matrices":[{"index": i, "rows": [[…]]}…]} for the
/// interior differentials.
std::string matrices_json(rootsys::Family family, int rank, const orbitposet::LevelDiagram& d);

/// Plain-text level diagram: one "level: labels…" line per level, then the
/// edge list with multiplicities.
std::string diagram_text(const orbitposet::LevelDiagram& d);

/// JSON {"type","rank","levels":[[labels…]…],"edges":[{"from","to","m"}…]}.
std::string diagram_json(rootsys::Family family, int rank, const orbitposet::LevelDiagram& d);

}  // namespace minorb::format
