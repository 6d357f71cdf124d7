#include "minorb/typea.hpp"

#include "minorb/rootsys.hpp"

#include <stdexcept>

namespace minorb::typea {

using zlinalg::FGAbelianGroup;
using zlinalg::Int;
using zlinalg::IntMatrix;

TruncatedPolynomial TruncatedPolynomial::monomial(int n, const Int& coefficient, int degree) {
    TruncatedPolynomial p(n);
    if (degree < n) p.coeffs[degree] = coefficient;
    return p;
}

TruncatedPolynomial multiply(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    if (a.modulus_degree != b.modulus_degree)
        throw std::invalid_argument("multiply: mixed truncation moduli");
    TruncatedPolynomial out(a.modulus_degree);
    for (int i = 0; i < a.modulus_degree; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; i + j < a.modulus_degree; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

TruncatedPolynomial total_chern_kernel_bundle(int n) {
    if (n < 2) throw std::invalid_argument("total_chern_kernel_bundle: requires n >= 2");
    TruncatedPolynomial one_plus_y(n);
    one_plus_y.coeffs[0] = 1;
    one_plus_y.coeffs[1] = 1;
    TruncatedPolynomial out = TruncatedPolynomial::monomial(n, 1, 0);
    for (int k = 0; k < n; ++k) out = multiply(out, one_plus_y);
    return out;
}

gysin::GradedCohomology typea_cohomology(int n) {
    if (n < 2) throw std::invalid_argument("typea_cohomology: requires n >= 2");
    // The multiplier class: top-degree coefficient of the total Chern class.
    TruncatedPolynomial c =
        TruncatedPolynomial::monomial(n, total_chern_kernel_bundle(n).coeff(n - 1), n - 1);

    // H^j of projective (n−1)-space is ℤ·y^{j/2} for even j in [0, 2n−2].
    auto proj_rank = [&](int j) {
        return (j >= 0 && j <= 2 * n - 2 && j % 2 == 0) ? 1 : 0;
    };
    // Matrix of multiplication by c from H^{j}(ℙ) to H^{j+2n−2}(ℙ).
    auto mult_matrix = [&](int j) {
        int target = j + 2 * n - 2;
        IntMatrix m(proj_rank(target), proj_rank(j));
        if (m.rows() > 0 && m.cols() > 0) {
            TruncatedPolynomial image =
                multiply(c, TruncatedPolynomial::monomial(n, 1, j / 2));
            m.at(0, 0) = image.coeff(target / 2);
        }
        return m;
    };

    gysin::GradedCohomology out;
    out.top_degree = 4 * n - 5;
    for (int i = 0; i <= out.top_degree; ++i) {
        if (i % 2 == 0) {
            FGAbelianGroup g = zlinalg::cokernel(mult_matrix(i - 2 * n + 2));
            if (!g.is_zero()) out.groups[i] = std::move(g);
        } else {
            std::size_t kr = zlinalg::kernel_rank(mult_matrix(i - 2 * n + 3));
            if (kr > 0) out.groups[i] = FGAbelianGroup::free(kr);
        }
    }
    return out;
}

bool crosscheck_typea(int n) {
    if (n < 2) throw std::invalid_argument("crosscheck_typea: requires n >= 2");
    gysin::GradedCohomology via_roots =
        gysin::minimal_orbit_cohomology(rootsys::build(rootsys::Family::A, n - 1));
    return typea_cohomology(n) == via_roots;
}

}  // namespace minorb::typea
