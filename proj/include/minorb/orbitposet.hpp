/**
 * orbitposet.hpp — the level diagram of long roots and its differential
 * matrices.
 *
 * Long roots are bucketed by level 0..2h∨−3 (top level first). A cover
 * edge β → α joins consecutive levels whenever some positive root γ has
 * s_γ(β) = α; its multiplicity is m = ⟨β, γ∨⟩ ∈ {1, 2, r}. The matrix
 * D_i collects the multiplicities from level i−1 into level i.
 *
 * Within a level, roots are listed in descending lexicographic order of
 * the absolute coefficient vectors. On positive levels this is plain
 * descending order; on negative levels it mirrors the order of the
 * opposite level, which is exactly what makes D_{2h∨−2−i} = ᵗD_i hold
 * entry-for-entry and not just up to permutation.
 */
#pragma once

#include "minorb/rootsys.hpp"
#include "minorb/zlinalg.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace minorb::orbitposet {

using rootsys::RootSystem;

/// A cover edge of the level diagram; all fields are root indices except m.
struct LevelEdge {
    int beta;   // source, at level L
    int alpha;  // target, at level L+1
    int gamma;  // the positive root with s_γ(β) = α
    int m;      // multiplicity ⟨β, γ∨⟩

    bool operator==(const LevelEdge&) const = default;
    auto operator<=>(const LevelEdge&) const = default;
};

class LevelDiagram {
public:
    const RootSystem& system() const { return *rs_; }

    /// Level buckets, index 0..2h∨−3; each bucket holds root indices in
    /// display order.
    const std::vector<std::vector<int>>& levels() const { return levels_; }
    const std::vector<LevelEdge>& edges() const { return edges_; }

    int num_levels() const { return static_cast<int>(levels_.size()); }

    /// (level, position within level) of a long root index.
    std::pair<int, int> locate(int root_idx) const;

    /// Multiplicity of the edge β → α, or 0 if absent.
    int edge_multiplicity(int beta, int alpha) const;

    friend LevelDiagram build_level_diagram(const RootSystem& rs);

private:
    const RootSystem* rs_ = nullptr;
    std::vector<std::vector<int>> levels_;
    std::vector<LevelEdge> edges_;
    std::vector<std::pair<int, int>> location_;  // per root index; (−1,−1) if short
};

/// Bucket the long roots by level and detect all cover edges.
LevelDiagram build_level_diagram(const RootSystem& rs);

/// The multiplicity matrix from level i−1 into level i.
struct DiffMatrix {
    int level_index;
    zlinalg::IntMatrix matrix;
};

/// Assemble D_i for 0 ≤ i ≤ 2h∨−2; levels outside the diagram contribute
/// zero rows/columns. Throws std::out_of_range beyond that range.
DiffMatrix differential_matrix(const LevelDiagram& d, int i);

/**
 * Recompute every edge on the Weyl-group side — covers x → s_γ·x between
 * minimal coset representatives of the highest-root stabilizer, with
 * element-level equality and length increase one — and compare the full
 * edge set, including multiplicities, with build_level_diagram's.
 */
bool oracle_check_edges(const RootSystem& rs, std::size_t cap = 10000);

/// Display label of a root: its coefficient digits concatenated, with a
/// leading '-' for negative roots (e.g. "122", "-010").
std::string root_label(const RootSystem& rs, int root_idx);

/**
 * Render the diagram in DOT format: one rank row per level, node labels
 * are the concatenated coefficient digits (with a leading '-' for negative
 * roots), edge labels show multiplicities greater than one.
 */
std::string export_dot(const LevelDiagram& d);

}  // namespace minorb::orbitposet
