#include "minorb/orbitposet.hpp"

#include "minorb/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace minorb::orbitposet {

std::pair<int, int> LevelDiagram::locate(int root_idx) const {
    auto loc = location_.at(root_idx);
    if (loc.first < 0) throw std::invalid_argument("locate: root is not long");
    return loc;
}

int LevelDiagram::edge_multiplicity(int beta, int alpha) const {
    for (const auto& e : edges_)
        if (e.beta == beta && e.alpha == alpha) return e.m;
    return 0;
}

LevelDiagram build_level_diagram(const RootSystem& rs) {
    LevelDiagram d;
    d.rs_ = &rs;
    const int num_levels = 2 * rs.dual_coxeter_number() - 2;  // indices 0..n−1
    d.levels_.resize(num_levels);
    d.location_.assign(rs.num_roots(), {-1, -1});

    for (int idx = 0; idx < rs.num_roots(); ++idx)
        if (rs.root(idx).is_long) d.levels_[rs.level_idx(idx)].push_back(idx);

    // Display order: descending lexicographic on absolute coefficient vectors,
    // so a negative level mirrors the order of its opposite level.
    auto abs_coeffs = [&](int idx) {
        std::vector<int> v = rs.root(idx).coeffs;
        for (int& c : v) c = std::abs(c);
        return v;
    };
    for (auto& bucket : d.levels_) {
        std::sort(bucket.begin(), bucket.end(),
                  [&](int a, int b) { return abs_coeffs(a) > abs_coeffs(b); });
    }
    for (int lvl = 0; lvl < num_levels; ++lvl)
        for (std::size_t pos = 0; pos < d.levels_[lvl].size(); ++pos)
            d.location_[d.levels_[lvl][pos]] = {lvl, static_cast<int>(pos)};

    // Covers between consecutive levels: γ is the positive root collinear
    // with β − α, and the multiplicity m satisfies β − α = m·γ.
    for (int lvl = 0; lvl + 1 < num_levels; ++lvl) {
        for (int beta : d.levels_[lvl]) {
            for (int alpha : d.levels_[lvl + 1]) {
                std::vector<int> g = rs.root(beta).coeffs;
                for (int i = 0; i < rs.rank(); ++i) g[i] -= rs.root(alpha).coeffs[i];
                const int max_m = std::max(2, rs.r());
                for (int m = 1; m <= max_m; ++m) {
                    bool divides = true;
                    std::vector<int> cand(rs.rank());
                    for (int i = 0; i < rs.rank(); ++i) {
                        if (g[i] % m != 0) { divides = false; break; }
                        cand[i] = g[i] / m;
                    }
                    if (!divides) continue;
                    int gamma = rs.index_of(cand);
                    if (gamma < 0 || !rs.root(gamma).is_positive()) continue;
                    if (rs.pairing_idx(beta, gamma) != m) continue;
                    assert(rs.reflect_idx(gamma, beta) == alpha);
                    d.edges_.push_back({beta, alpha, gamma, m});
                    break;  // only one positive root is collinear with β − α
                }
            }
        }
    }
    return d;
}

DiffMatrix differential_matrix(const LevelDiagram& d, int i) {
    const int n = d.num_levels();  // = 2h∨ − 2
    if (i < 0 || i > n) throw std::out_of_range("differential_matrix: index out of range");
    auto size_of = [&](int lvl) {
        return (lvl < 0 || lvl >= n) ? std::size_t{0} : d.levels()[lvl].size();
    };
    zlinalg::IntMatrix m(size_of(i), size_of(i - 1));
    if (m.rows() > 0 && m.cols() > 0) {
        for (const auto& e : d.edges()) {
            auto [lvl, col] = d.locate(e.beta);
            if (lvl != i - 1) continue;
            auto [tlvl, row] = d.locate(e.alpha);
            assert(tlvl == i);
            m.at(row, col) = e.m;
        }
    }
    return {i, std::move(m)};
}

bool oracle_check_edges(const RootSystem& rs, std::size_t cap) {
    weyl::CosetFamily fam = weyl::coset_reps(rs, rs.i_tilde(), cap);
    const int top = rs.highest_root_index();

    std::vector<LevelEdge> weyl_edges;
    for (std::size_t a = 0; a < fam.size(); ++a) {
        for (int gamma : rs.positive_indices()) {
            std::vector<long long> key = rs.weight_reflect(gamma, fam.keys[a]);
            int b = fam.find(key);
            if (b < 0 || fam.lengths[b] != fam.lengths[a] + 1) continue;
            // Element-level (not just coset-level) equality s_γ·x_a = x_b.
            if (!(weyl::compose(weyl::WeylElement::reflection(rs, gamma), fam.reps[a]) ==
                  fam.reps[b]))
                continue;
            int beta = fam.reps[a].apply(top);
            int alpha = fam.reps[b].apply(top);
            weyl_edges.push_back({beta, alpha, gamma, rs.pairing_idx(beta, gamma)});
        }
    }

    std::vector<LevelEdge> poset_edges = build_level_diagram(rs).edges();
    std::sort(weyl_edges.begin(), weyl_edges.end());
    std::sort(poset_edges.begin(), poset_edges.end());
    return weyl_edges == poset_edges;
}

std::string root_label(const RootSystem& rs, int idx) {
    const auto& coeffs = rs.root(idx).coeffs;
    std::string label = rs.root(idx).is_positive() ? "" : "-";
    for (int c : coeffs) label += static_cast<char>('0' + std::abs(c));
    return label;
}

std::string export_dot(const LevelDiagram& d) {
    const RootSystem& rs = d.system();
    std::ostringstream out;
    out << "digraph level_diagram {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=plaintext];\n";
    for (const auto& bucket : d.levels()) {
        out << "  { rank=same;";
        for (int idx : bucket) out << " \"" << root_label(rs, idx) << "\";";
        out << " }\n";
    }
    for (const auto& e : d.edges()) {
        out << "  \"" << root_label(rs, e.beta) << "\" -> \"" << root_label(rs, e.alpha)
            << "\"";
        if (e.m > 1) out << " [label=\"" << e.m << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace minorb::orbitposet
