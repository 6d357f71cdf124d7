/**
 * golden.hpp — independent reference data for the verification suite.
 *
 * Two kinds of reference values live here, both produced without running
 * the main computation:
 *   - closed-form cohomology tables and differential matrices for the
 *     classical families, generated from explicit formulas;
 *   - hand-transcribed tables and matrix lists for the exceptional types,
 *     loaded from JSON data files kept apart from the code (fixtures/ by
 *     default; override with the MINORB_FIXTURE_DIR environment variable).
 */
#pragma once

#include "minorb/gysin.hpp"
#include "minorb/rootsys.hpp"
#include "minorb/zlinalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace minorb::golden {

using gysin::GradedCohomology;
using zlinalg::IntMatrix;

/**
 * Closed-form cohomology table of the minimal orbit for a classical system
 * (families A–D only; throws std::invalid_argument otherwise). The rank is
 * the Lie rank, as in rootsys::build.
 */
GradedCohomology closed_form_table(rootsys::Family family, int rank);

/// k×k matrix with ones on the diagonal and the subdiagonal.
IntMatrix bidiagonal_square(int k);

/// (k+1)×k matrix with ones on the diagonal and the subdiagonal.
IntMatrix bidiagonal_tall(int k);

/// Entrywise absolute value of the Cartan matrix of the given system.
IntMatrix unsigned_cartan(rootsys::Family family, int rank);

/**
 * Closed-form differential D_i (0 ≤ i ≤ 2h∨−2) of a classical system in the
 * level-diagram basis; the upper half is the transpose of the lower half.
 * Families A–D only; throws std::invalid_argument/std::out_of_range.
 */
IntMatrix expected_differential(rootsys::Family family, int rank, int i);

/** One hand-transcribed exceptional cohomology table. */
struct ExceptionalTable {
    rootsys::Family family = rootsys::Family::E;
    int rank = 0;
    int h_dual = 0;
    GradedCohomology table;
};

/** The transcribed differential list of one exceptional system. */
struct PrintedMatrices {
    rootsys::Family family = rootsys::Family::E;
    int rank = 0;
    std::vector<std::pair<int, IntMatrix>> printed;  // (index i, D_i)
};

/// Directory holding the fixture files (environment override, else the
/// compiled-in default next to the sources).
std::string fixture_dir();

/// All five exceptional tables (E6, E7, E8, F4, G2) from the fixture file.
std::vector<ExceptionalTable> exceptional_tables();

/// The transcribed matrix list of one exceptional system (E6/E7/E8/F4/G2).
PrintedMatrices printed_matrices(rootsys::Family family, int rank);

}  // namespace minorb::golden
