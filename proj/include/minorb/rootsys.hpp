/**
 * rootsys.hpp — irreducible reduced root systems from Cartan data.
 *
 * Roots are stored as integer coefficient vectors over the simple-root
 * basis; there is no Euclidean realization. The bilinear form comes from
 * the symmetrized Cartan matrix, normalized so the shortest simple root
 * has squared length 1 and the longest has squared length r ∈ {1,2,3}.
 *
 * Conventions fixed once here and used everywhere:
 *   - cartan[i][j] = ⟨α_i, α_j∨⟩, so s_j(α_i) = α_i − cartan[i][j]·α_j;
 *   - (α_i|α_j) = d_j·cartan[i][j]/2 with d_j the squared length of α_j;
 *   - simple-root numbering: A/B/C/D chains numbered along the diagram
 *     (B_n: α_n short; C_n: α_n long; D_n: fork at α_{n−2}), E types in
 *     Bourbaki numbering, F4 = long–long–short–short, G2 with α₁ long.
 */
#pragma once

#include <boost/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace minorb::rootsys {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// Exact rational values (dual heights of short roots are not integers).
using Rational = boost::rational<long long>;

/**
 * Cartan matrix plus symmetrizer. The symmetrizer entries d_j = (α_j|α_j)
 * satisfy d_j·cartan[i][j] = d_i·cartan[j][i], min d_j = 1, max d_j = r.
 */
struct CartanDatum {
    Family family;
    int rank;
    std::vector<std::vector<int>> cartan;
    std::vector<int> symmetrizer;
    int r;  // squared-length ratio, 1 for simply laced, 2 or 3 otherwise

    void validate() const;  // throws std::invalid_argument on any broken invariant
};

/** A root, as coefficients n_i over the simple basis (all ≥ 0 or all ≤ 0). */
struct Root {
    std::vector<int> coeffs;
    bool is_long = false;

    bool is_positive() const;  // true iff some coefficient is > 0
    bool operator==(const Root& other) const { return coeffs == other.coeffs; }
};

/**
 * A full root system Φ, immutable after construction. Roots carry stable
 * indices 0..|Φ|−1; negation is index-computable via negative_of().
 */
class RootSystem {
public:
    /// Reflection-closure construction from an explicit datum.
    static RootSystem from_datum(CartanDatum datum);

    const CartanDatum& datum() const { return datum_; }
    int rank() const { return datum_.rank; }
    int r() const { return datum_.r; }

    int num_roots() const { return static_cast<int>(roots_.size()); }
    const Root& root(int idx) const { return roots_.at(idx); }
    const std::vector<int>& positive_indices() const { return positive_; }

    /// Index lookup by coefficient vector; −1 if not a root.
    int index_of(const std::vector<int>& coeffs) const;
    int index_of(const Root& alpha) const { return index_of(alpha.coeffs); }
    int negative_of(int idx) const { return negative_of_[idx]; }

    int simple_root_index(int i) const { return simple_index_.at(i); }

    const Root& highest_root() const { return roots_[highest_]; }
    int highest_root_index() const { return highest_; }
    int coxeter_number() const { return h_; }
    int dual_coxeter_number() const { return h_dual_; }

    /// Ĩ = simple indices orthogonal to the highest root.
    const std::vector<int>& i_tilde() const { return i_tilde_; }
    /// Positions of the long simple roots (Δlg) in diagram order.
    const std::vector<int>& long_simple_indices() const { return long_simple_; }

    int long_count() const { return long_count_; }

    /// ⟨β, γ∨⟩ = 2(β|γ)/(γ|γ), always an integer for roots.
    int pairing(const Root& beta, const Root& gamma) const;
    int pairing_idx(int beta, int gamma) const;

    /// s_γ(β) = β − ⟨β,γ∨⟩γ.
    Root reflect(const Root& gamma, const Root& beta) const;
    int reflect_idx(int gamma, int beta) const;

    /// ht∨(α) = ht(α∨); integer exactly when α is long.
    Rational dual_height(const Root& alpha) const;

    /// Level of a long root: ht∨(α̃) − ht∨(α), minus 1 more when α < 0.
    /// Throws std::invalid_argument for short roots.
    int level(const Root& alpha) const;
    int level_idx(int idx) const;

    /// Sub-root system generated by the long simple roots (simply laced).
    RootSystem long_simple_subsystem() const;

    // --- weight-space helpers (coordinates over the fundamental-weight basis) ---

    /// α_i as a fundamental-weight coordinate vector: row i of the Cartan matrix.
    std::vector<long long> simple_root_weight_coords(int i) const;
    /// ⟨v, γ∨⟩ for v in fundamental-weight coordinates.
    long long weight_pairing(const std::vector<long long>& v, int gamma_idx) const;
    /// s_γ(v) for v in fundamental-weight coordinates.
    std::vector<long long> weight_reflect(int gamma_idx, const std::vector<long long>& v) const;

private:
    CartanDatum datum_;
    std::vector<Root> roots_;
    std::map<std::vector<int>, int> index_;
    std::vector<int> positive_;
    std::vector<int> negative_of_;
    std::vector<int> simple_index_;
    std::vector<int> i_tilde_;
    std::vector<int> long_simple_;
    std::vector<std::vector<int>> coroot_coeffs_;  // γ∨ over the simple coroots
    int highest_ = -1;
    int h_ = 0;
    int h_dual_ = 0;
    int long_count_ = 0;

    /// 2(β|γ) as an exact integer.
    long long twice_form(const std::vector<int>& b, const std::vector<int>& g) const;
};

/**
 * Construct the root system of a simple type. Valid types: A (1..32),
 * B (2..16), C (2..16), D (3..16), E (6..8), F (4), G (2); anything else
 * is rejected with a diagnostic naming the valid ranges.
 */
RootSystem build(Family family, int rank);

}  // namespace minorb::rootsys
