/**
 * typea.hpp — second, independent computation of the minimal-orbit
 * cohomology in type A.
 *
 * The orbit closure for sl_n (rank-one traceless matrices plus zero) is
 * resolved by a line bundle over projective (n−1)-space, so the graded
 * groups follow from multiplication by the last Chern class c = n·y^{n−1}
 * in the truncated polynomial ring ℤ[y]/(yⁿ), with the same even/odd
 * cokernel/kernel assembly as the root-combinatorial route. Only the
 * isomorphism class of each group is reported, so the sign convention
 * for y is immaterial.
 */
#pragma once

#include "minorb/gysin.hpp"
#include "minorb/zlinalg.hpp"

#include <vector>

namespace minorb::typea {

/** Element of ℤ[y]/(yⁿ), coefficients c₀..c_{n−1}. */
struct TruncatedPolynomial {
    int modulus_degree = 0;  // n
    std::vector<zlinalg::Int> coeffs;

    explicit TruncatedPolynomial(int n) : modulus_degree(n), coeffs(n) {}

    static TruncatedPolynomial monomial(int n, const zlinalg::Int& coefficient, int degree);

    const zlinalg::Int& coeff(int degree) const { return coeffs.at(degree); }

    bool operator==(const TruncatedPolynomial&) const = default;
};

/// Product in ℤ[y]/(yⁿ); degrees at or past the modulus are dropped.
TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/**
 * Total Chern class (1+y)ⁿ of the rank-(n−1) kernel bundle of the
 * resolution, as an element of ℤ[y]/(yⁿ). Requires n ≥ 2.
 */
TruncatedPolynomial total_chern_kernel_bundle(int n);

/**
 * H*(O_min, ℤ) for the traceless n×n rank-one matrices, n ≥ 2, computed
 * through the projective-space route only (no root combinatorics).
 */
gysin::GradedCohomology typea_cohomology(int n);

/// True iff typea_cohomology(n) agrees degree-by-degree with the
/// root-combinatorial computation for the rank-(n−1) system of type A.
bool crosscheck_typea(int n);

}  // namespace minorb::typea
