#include "minorb/gysin.hpp"

#include "minorb/orbitposet.hpp"
#include "minorb/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace minorb::gysin {

using rootsys::Family;
using zlinalg::IntMatrix;

const FGAbelianGroup& GradedCohomology::at(int degree) const {
    static const FGAbelianGroup zero{};
    auto it = groups.find(degree);
    return it == groups.end() ? zero : it->second;
}

namespace {

/// Shared assembly: given the matrices D_0..D_d (one per map between
/// consecutive strata), produce the graded groups per the even/odd rules.
GradedCohomology assemble(const std::vector<IntMatrix>& diffs) {
    const int d = static_cast<int>(diffs.size()) - 1;
    GradedCohomology out;
    out.top_degree = 2 * d - 1;
    for (int i = 0; i <= d; ++i) {
        if (2 * i <= 2 * d - 2) {
            FGAbelianGroup even = zlinalg::cokernel(diffs[i]);
            if (!even.is_zero()) out.groups[2 * i] = std::move(even);
        }
        if (i >= 1) {
            std::size_t kr = zlinalg::kernel_rank(diffs[i]);
            if (kr > 0) out.groups[2 * i - 1] = FGAbelianGroup::free(kr);
        }
    }
    return out;
}

}  // namespace

CharacterWeight highest_root_weight(const RootSystem& rs) {
    CharacterWeight w;
    w.coords.resize(rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
        w.coords[j] = rs.pairing_idx(rs.highest_root_index(), rs.simple_root_index(j));
    return w;
}

GradedCohomology minimal_orbit_cohomology(const RootSystem& rs) {
    orbitposet::LevelDiagram diagram = orbitposet::build_level_diagram(rs);
    const int d = diagram.num_levels();  // 2h∨ − 2
    std::vector<IntMatrix> diffs;
    diffs.reserve(d + 1);
    for (int i = 0; i <= d; ++i)
        diffs.push_back(orbitposet::differential_matrix(diagram, i).matrix);
    return assemble(diffs);
}

FGAbelianGroup middle_group(const RootSystem& rs) {
    RootSystem sub = rs.long_simple_subsystem();
    IntMatrix cartan(sub.rank(), sub.rank());
    for (int i = 0; i < sub.rank(); ++i)
        for (int j = 0; j < sub.rank(); ++j) cartan.at(i, j) = sub.datum().cartan[i][j];
    return zlinalg::cokernel(cartan);
}

GradedCohomology line_bundle_cohomology(const RootSystem& rs, const std::vector<int>& I,
                                        const CharacterWeight& lambda, std::size_t cap) {
    if (static_cast<int>(lambda.coords.size()) != rs.rank())
        throw std::invalid_argument("line_bundle_cohomology: weight has wrong dimension");
    for (int i : I) {
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("line_bundle_cohomology: simple index out of range");
        if (lambda.coords[i] != 0)
            throw std::invalid_argument(
                "line_bundle_cohomology: weight is not invariant under the parabolic factor");
    }

    weyl::CosetFamily fam = weyl::coset_reps(rs, I, cap);
    auto images = fam.weight_images(rs, lambda.coords);

    // Stratify by length; strata are the cell dimensions of the base.
    int dim = *std::max_element(fam.lengths.begin(), fam.lengths.end());
    std::vector<std::vector<int>> strata(dim + 1);
    for (std::size_t a = 0; a < fam.size(); ++a) strata[fam.lengths[a]].push_back(a);
    std::vector<int> position(fam.size());
    for (const auto& s : strata)
        for (std::size_t p = 0; p < s.size(); ++p) position[s[p]] = static_cast<int>(p);

    // D_i holds ⟨w(λ), γ∨⟩ for each cover w → s_γ·w from length i−1 to i.
    const int d = dim + 1;
    std::vector<IntMatrix> diffs(d + 1);
    diffs[0] = IntMatrix(strata[0].size(), 0);
    diffs[d] = IntMatrix(0, strata[dim].size());
    for (int i = 1; i <= dim; ++i)
        diffs[i] = IntMatrix(strata[i].size(), strata[i - 1].size());
    for (std::size_t a = 0; a < fam.size(); ++a) {
        const int i = fam.lengths[a] + 1;
        if (i > dim) continue;
        for (int gamma : rs.positive_indices()) {
            std::vector<long long> key = rs.weight_reflect(gamma, fam.keys[a]);
            int b = fam.find(key);
            if (b < 0 || fam.lengths[b] != fam.lengths[a] + 1) continue;
            if (!(weyl::compose(weyl::WeylElement::reflection(rs, gamma), fam.reps[a]) ==
                  fam.reps[b]))
                continue;
            diffs[i].at(position[b], position[a]) = rs.weight_pairing(images[a], gamma);
        }
    }
    return assemble(diffs);
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

std::vector<int> weyl_degrees(Family family, int rank) {
    std::vector<int> deg;
    switch (family) {
        case Family::A:
            for (int i = 2; i <= rank + 1; ++i) deg.push_back(i);
            break;
        case Family::B:
        case Family::C:
            for (int i = 2; i <= 2 * rank; i += 2) deg.push_back(i);
            break;
        case Family::D:
            for (int i = 2; i <= 2 * rank - 2; i += 2) deg.push_back(i);
            deg.push_back(rank);
            std::sort(deg.begin(), deg.end());
            break;
        case Family::E:
            if (rank == 6) deg = {2, 5, 6, 8, 9, 12};
            if (rank == 7) deg = {2, 6, 8, 10, 12, 14, 18};
            if (rank == 8) deg = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
        case Family::F: deg = {2, 6, 8, 12}; break;
        case Family::G: deg = {2, 6}; break;
    }
    return deg;
}

std::vector<int> bad_primes(Family family, int rank) {
    switch (family) {
        case Family::A: return {};
        case Family::B:
        case Family::C:
        case Family::D: return {2};
        case Family::E: return rank == 8 ? std::vector<int>{2, 3, 5} : std::vector<int>{2, 3};
        case Family::F:
        case Family::G: return {2, 3};
    }
    return {};
}

namespace {

std::string group_brief(const FGAbelianGroup& g) {
    std::ostringstream out;
    out << "free rank " << g.free_rank;
    if (!g.torsion.empty()) {
        out << ", torsion";
        for (const auto& t : g.torsion) out << " " << t;
    }
    return out.str();
}

}  // namespace

VerifyReport verify_profiles(const RootSystem& rs) {
    VerifyReport report;
    GradedCohomology coh = minimal_orbit_cohomology(rs);
    const int d = 2 * rs.dual_coxeter_number() - 2;

    // (a) Free ranks below the middle degree sit at 2(dᵢ−2) for the first
    // |Δlg| reflection degrees, with multiplicity.
    {
        std::vector<int> degrees = weyl_degrees(rs.datum().family, rs.rank());
        const int k = static_cast<int>(rs.long_simple_indices().size());
        std::multiset<int> expected_degrees, observed;
        for (int i = 0; i < k; ++i) expected_degrees.insert(2 * (degrees[i] - 2));
        for (int n = 0; n <= d - 1; ++n)
            for (std::size_t c = 0; c < coh.at(n).free_rank; ++c) observed.insert(n);
        bool ok = expected_degrees == observed;
        std::ostringstream detail;
        detail << "expected degrees";
        for (int v : expected_degrees) detail << " " << v;
        detail << "; observed";
        for (int v : observed) detail << " " << v;
        report.checks.push_back({"free ranks below middle follow the reflection degrees",
                                 ok, detail.str()});
    }

    // (b) Torsion outside the middle degree only involves bad primes.
    {
        std::vector<int> allowed = bad_primes(rs.datum().family, rs.rank());
        bool ok = true;
        std::ostringstream detail;
        for (const auto& [n, group] : coh.groups) {
            if (n == d) continue;
            for (zlinalg::Int t : group.torsion) {
                for (int p : allowed)
                    while (t % p == 0) t /= p;
                if (t != 1) {
                    ok = false;
                    detail << "degree " << n << ": " << group_brief(group) << "; ";
                }
            }
        }
        if (ok) detail << "all torsion primes allowed";
        report.checks.push_back({"torsion outside the middle uses only bad primes", ok,
                                 detail.str()});
    }

    // (c) Transpose identity of the multiplication matrices.
    {
        orbitposet::LevelDiagram diagram = orbitposet::build_level_diagram(rs);
        bool ok = true;
        for (int i = 0; i <= d; ++i) {
            if (!(orbitposet::differential_matrix(diagram, d - i).matrix ==
                  orbitposet::differential_matrix(diagram, i).matrix.transpose()))
                ok = false;
        }
        report.checks.push_back({"matrices at complementary indices are transposes", ok,
                                 ok ? "all indices checked" : "mismatch found"});
    }
    return report;
}

}  // namespace minorb::gysin
