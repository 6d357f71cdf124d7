/**
 * gysin.hpp — graded integral cohomology assembled from difference-one
 * multiplication matrices.
 *
 * Degree bookkeeping, fixed once for the whole library:
 *   d            = 2h∨ − 2          (number of levels; the middle degree)
 *   levels       = 0 .. d−1         (long roots by level)
 *   D_i          : level i−1 → level i, defined for 0 ≤ i ≤ d
 *                  (D_0 has zero columns, D_d zero rows)
 *   even n       : H^n = coker(D_{n/2}),          0 ≤ n ≤ 2d−2
 *   odd n        : H^n = ℤ^{ker-rank(D_{(n+1)/2})}, 1 ≤ n ≤ 2d−1
 *   top degree   = 2d − 1 = 4h∨ − 5.
 * The same rules drive the general line-bundle computation with d replaced
 * by d_I = dim G/P_I + 1 and levels replaced by coset-length strata.
 */
#pragma once

#include "minorb/rootsys.hpp"
#include "minorb/zlinalg.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace minorb::gysin {

using rootsys::RootSystem;
using zlinalg::FGAbelianGroup;

/** Graded abelian group; degrees absent from the map are zero. */
struct GradedCohomology {
    int top_degree = 0;
    std::map<int, FGAbelianGroup> groups;

    /// Group at a degree (zero group if absent).
    const FGAbelianGroup& at(int degree) const;

    bool operator==(const GradedCohomology& other) const = default;
};

/** An integral character, in coordinates over the fundamental-weight basis. */
struct CharacterWeight {
    std::vector<long long> coords;
};

/// The highest root as a character weight (its pairings with the simple
/// coroots), suitable for the parabolic attached to its stabilizer.
CharacterWeight highest_root_weight(const RootSystem& rs);

/// Integral cohomology of the minimal nilpotent orbit of the root system.
GradedCohomology minimal_orbit_cohomology(const RootSystem& rs);

/**
 * The middle-degree group computed by an independent route: the cokernel of
 * the Cartan matrix of the subsystem generated by the long simple roots
 * (its coweight lattice modulo its coroot lattice).
 */
FGAbelianGroup middle_group(const RootSystem& rs);

/**
 * Cohomology of the complement of the zero section in the line bundle on
 * G/P_I attached to λ. λ must be invariant under the parabolic factor
 * (coordinates on I vanish), otherwise std::invalid_argument; the coset
 * enumeration cap propagates as weyl::CapExceeded.
 */
GradedCohomology line_bundle_cohomology(const RootSystem& rs, const std::vector<int>& I,
                                        const CharacterWeight& lambda,
                                        std::size_t cap = 10000);

/** One named assertion of a verification report. */
struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/**
 * Structural cross-checks of the computed cohomology against compiled-in
 * reference data: (a) the free ranks below the middle degree sit exactly at
 * degrees 2(dᵢ−2) for the first |Δlg| reflection degrees dᵢ of the Weyl
 * group; (b) torsion away from the middle degree only involves the bad
 * primes of the system; (c) the transpose identity D_{d−i} = ᵗD_i.
 */
VerifyReport verify_profiles(const RootSystem& rs);

/// Reflection degrees d₁ ≤ … ≤ d_rank of the Weyl group (compiled table).
std::vector<int> weyl_degrees(rootsys::Family family, int rank);

/// Bad primes of the root system (compiled table; empty for type A).
std::vector<int> bad_primes(rootsys::Family family, int rank);

}  // namespace minorb::gysin
