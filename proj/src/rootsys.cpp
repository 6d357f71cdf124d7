#include "minorb/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace minorb::rootsys {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
        case Family::F: return 'F';
        case Family::G: return 'G';
    }
    return '?';
}

void CartanDatum::validate() const {
    if (rank <= 0 || static_cast<int>(cartan.size()) != rank ||
        static_cast<int>(symmetrizer.size()) != rank)
        throw std::invalid_argument("CartanDatum: inconsistent dimensions");
    for (int i = 0; i < rank; ++i) {
        if (static_cast<int>(cartan[i].size()) != rank)
            throw std::invalid_argument("CartanDatum: cartan matrix not square");
        if (cartan[i][i] != 2)
            throw std::invalid_argument("CartanDatum: diagonal entry != 2");
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            if (cartan[i][j] > 0)
                throw std::invalid_argument("CartanDatum: positive off-diagonal entry");
            if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
                throw std::invalid_argument("CartanDatum: zero pattern not symmetric");
            // Symmetrizability: d_j·C[i][j] = d_i·C[j][i].
            if (static_cast<long long>(symmetrizer[j]) * cartan[i][j] !=
                static_cast<long long>(symmetrizer[i]) * cartan[j][i])
                throw std::invalid_argument("CartanDatum: symmetrizer does not symmetrize");
        }
    }
    int mn = *std::min_element(symmetrizer.begin(), symmetrizer.end());
    int mx = *std::max_element(symmetrizer.begin(), symmetrizer.end());
    if (mn != 1) throw std::invalid_argument("CartanDatum: symmetrizer not normalized (min != 1)");
    if (mx != r || (r != 1 && r != 2 && r != 3))
        throw std::invalid_argument("CartanDatum: squared-length ratio r must be max d_j in {1,2,3}");
}

bool Root::is_positive() const {
    for (int c : coeffs)
        if (c != 0) return c > 0;
    return false;
}

namespace {

/// Chain Cartan matrix of simply-laced type (A-shape), to be adjusted per family.
std::vector<std::vector<int>> chain_matrix(int n) {
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return c;
}

CartanDatum make_datum(Family family, int n) {
    CartanDatum d;
    d.family = family;
    d.rank = n;
    switch (family) {
        case Family::A:
            d.cartan = chain_matrix(n);
            d.symmetrizer.assign(n, 1);
            d.r = 1;
            break;
        case Family::B:
            // α_n short: ⟨α_{n−1}, α_n∨⟩ = −2.
            d.cartan = chain_matrix(n);
            d.cartan[n - 2][n - 1] = -2;
            d.symmetrizer.assign(n, 2);
            d.symmetrizer[n - 1] = 1;
            d.r = 2;
            break;
        case Family::C:
            // α_n long: ⟨α_n, α_{n−1}∨⟩ = −2.
            d.cartan = chain_matrix(n);
            d.cartan[n - 1][n - 2] = -2;
            d.symmetrizer.assign(n, 1);
            d.symmetrizer[n - 1] = 2;
            d.r = 2;
            break;
        case Family::D:
            // Chain α_1..α_{n−2} with both α_{n−1} and α_n attached to α_{n−2}.
            d.cartan = chain_matrix(n - 1);
            for (auto& row : d.cartan) row.push_back(0);
            d.cartan.push_back(std::vector<int>(n, 0));
            d.cartan[n - 1][n - 1] = 2;
            d.cartan[n - 2][n - 1] = d.cartan[n - 1][n - 2] = 0;
            d.cartan[n - 3][n - 1] = d.cartan[n - 1][n - 3] = -1;
            d.symmetrizer.assign(n, 1);
            d.r = 1;
            break;
        case Family::E: {
            // Bourbaki: chain α_1—α_3—α_4—…—α_n, with α_2 attached to α_4.
            d.cartan.assign(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
            auto join = [&](int i, int j) { d.cartan[i][j] = d.cartan[j][i] = -1; };
            join(0, 2);
            for (int i = 2; i + 1 < n; ++i) join(i, i + 1);
            join(1, 3);
            d.symmetrizer.assign(n, 1);
            d.r = 1;
            break;
        }
        case Family::F:
            // α_1, α_2 long; α_3, α_4 short; double bond between α_2 and α_3.
            d.cartan = chain_matrix(4);
            d.cartan[1][2] = -2;
            d.symmetrizer = {2, 2, 1, 1};
            d.r = 2;
            break;
        case Family::G:
            // α_1 long, α_2 short, triple bond.
            d.cartan = {{2, -3}, {-1, 2}};
            d.symmetrizer = {3, 1};
            d.r = 3;
            break;
    }
    return d;
}

}  // namespace

RootSystem build(Family family, int rank) {
    const char* range = nullptr;
    bool ok = false;
    switch (family) {
        case Family::A: ok = rank >= 1 && rank <= 32; range = "A requires rank 1..32"; break;
        case Family::B: ok = rank >= 2 && rank <= 16; range = "B requires rank 2..16"; break;
        case Family::C: ok = rank >= 2 && rank <= 16; range = "C requires rank 2..16"; break;
        case Family::D: ok = rank >= 3 && rank <= 16; range = "D requires rank 3..16"; break;
        case Family::E: ok = rank >= 6 && rank <= 8; range = "E requires rank 6, 7, or 8"; break;
        case Family::F: ok = rank == 4; range = "F requires rank 4"; break;
        case Family::G: ok = rank == 2; range = "G requires rank 2"; break;
    }
    if (!ok) {
        std::ostringstream msg;
        msg << "invalid type " << family_letter(family) << rank << ": " << range
            << " (valid simple types: A1..A32, B2..B16, C2..C16, D3..D16, E6..E8, F4, G2)";
        throw std::invalid_argument(msg.str());
    }
    return RootSystem::from_datum(make_datum(family, rank));
}

long long RootSystem::twice_form(const std::vector<int>& b, const std::vector<int>& g) const {
    // 2(β|γ) = Σ_{i,j} b_i·g_j·d_j·C[i][j]
    long long sum = 0;
    const int n = datum_.rank;
    for (int i = 0; i < n; ++i) {
        if (b[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (g[j] == 0) continue;
            sum += static_cast<long long>(b[i]) * g[j] * datum_.symmetrizer[j] *
                   datum_.cartan[i][j];
        }
    }
    return sum;
}

RootSystem RootSystem::from_datum(CartanDatum datum) {
    datum.validate();
    RootSystem rs;
    rs.datum_ = std::move(datum);
    const int n = rs.datum_.rank;

    // Reflection closure from the simple roots.
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> v = std::move(queue.front());
        queue.pop_front();
        for (int j = 0; j < n; ++j) {
            long long p = 0;
            for (int i = 0; i < n; ++i) p += static_cast<long long>(v[i]) * rs.datum_.cartan[i][j];
            std::vector<int> w = v;
            w[j] -= static_cast<int>(p);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }

    // Fixed enumeration order: descending lexicographic (positives first).
    std::vector<std::vector<int>> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end(), std::greater<>());

    const long long two_r = 2LL * rs.datum_.r;
    for (const auto& v : all) {
        Root rt;
        rt.coeffs = v;
        rt.is_long = rs.twice_form(v, v) == two_r;
        rs.index_[v] = static_cast<int>(rs.roots_.size());
        rs.roots_.push_back(std::move(rt));
    }

    rs.negative_of_.resize(rs.roots_.size());
    rs.simple_index_.assign(n, -1);
    int max_height = 0;
    for (int idx = 0; idx < rs.num_roots(); ++idx) {
        const Root& rt = rs.roots_[idx];
        if (rt.is_positive()) rs.positive_.push_back(idx);
        std::vector<int> neg(n);
        int height = 0, nonzero = 0, unit = -1;
        for (int i = 0; i < n; ++i) {
            neg[i] = -rt.coeffs[i];
            height += rt.coeffs[i];
            if (rt.coeffs[i] != 0) { ++nonzero; unit = i; }
        }
        rs.negative_of_[idx] = rs.index_.at(neg);
        if (nonzero == 1 && rt.coeffs[unit] == 1) rs.simple_index_[unit] = idx;
        if (height > max_height) { max_height = height; rs.highest_ = idx; }
        if (rt.is_long) ++rs.long_count_;
    }
    rs.h_ = max_height + 1;

    // Coroot coordinates: γ∨ = Σ_i n_i·(d_i/d_γ)·α_i∨.
    rs.coroot_coeffs_.resize(rs.roots_.size());
    for (int idx = 0; idx < rs.num_roots(); ++idx) {
        const Root& rt = rs.roots_[idx];
        long long d_gamma2 = rs.twice_form(rt.coeffs, rt.coeffs);  // 2(γ|γ)
        std::vector<int> cc(n);
        for (int i = 0; i < n; ++i) {
            long long num = 2LL * rt.coeffs[i] * rs.datum_.symmetrizer[i];
            assert(num % d_gamma2 == 0);
            cc[i] = static_cast<int>(num / d_gamma2);
        }
        rs.coroot_coeffs_[idx] = std::move(cc);
    }

    Rational hd = rs.dual_height(rs.highest_root());
    if (hd.denominator() != 1)
        throw std::logic_error("highest root must have integral dual height");
    rs.h_dual_ = static_cast<int>(hd.numerator()) + 1;

    for (int i = 0; i < n; ++i) {
        if (rs.pairing_idx(rs.highest_, rs.simple_index_[i]) == 0) rs.i_tilde_.push_back(i);
        if (rs.roots_[rs.simple_index_[i]].is_long) rs.long_simple_.push_back(i);
    }
    return rs;
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::pairing_idx(int beta, int gamma) const {
    const auto& b = roots_.at(beta).coeffs;
    const auto& cc = coroot_coeffs_.at(gamma);
    long long sum = 0;
    // ⟨β, γ∨⟩ = Σ_j m_j·⟨β, α_j∨⟩ with m_j the coroot coordinates of γ.
    for (int j = 0; j < datum_.rank; ++j) {
        if (cc[j] == 0) continue;
        long long pj = 0;
        for (int i = 0; i < datum_.rank; ++i)
            pj += static_cast<long long>(b[i]) * datum_.cartan[i][j];
        sum += cc[j] * pj;
    }
    return static_cast<int>(sum);
}

int RootSystem::pairing(const Root& beta, const Root& gamma) const {
    int bi = index_of(beta), gi = index_of(gamma);
    if (bi < 0 || gi < 0)
        throw std::invalid_argument("pairing: argument is not a root of this system");
    return pairing_idx(bi, gi);
}

int RootSystem::reflect_idx(int gamma, int beta) const {
    int m = pairing_idx(beta, gamma);
    const auto& b = roots_[beta].coeffs;
    const auto& g = roots_[gamma].coeffs;
    std::vector<int> out(datum_.rank);
    for (int i = 0; i < datum_.rank; ++i) out[i] = b[i] - m * g[i];
    int idx = index_of(out);
    assert(idx >= 0);  // root systems are closed under reflections
    return idx;
}

Root RootSystem::reflect(const Root& gamma, const Root& beta) const {
    int bi = index_of(beta), gi = index_of(gamma);
    if (bi < 0 || gi < 0)
        throw std::invalid_argument("reflect: argument is not a root of this system");
    return roots_[reflect_idx(gi, bi)];
}

Rational RootSystem::dual_height(const Root& alpha) const {
    Rational sum(0);
    for (int i = 0; i < datum_.rank; ++i) {
        if (alpha.coeffs[i] == 0) continue;
        if (roots_[simple_index_[i]].is_long)
            sum += alpha.coeffs[i];
        else
            sum += Rational(alpha.coeffs[i], datum_.r);
    }
    return sum;
}

int RootSystem::level_idx(int idx) const {
    const Root& rt = roots_.at(idx);
    if (!rt.is_long)
        throw std::invalid_argument("level: defined only for long roots");
    Rational hd = dual_height(rt);
    assert(hd.denominator() == 1);
    int lvl = (h_dual_ - 1) - static_cast<int>(hd.numerator());
    if (!rt.is_positive()) lvl -= 1;
    return lvl;
}

int RootSystem::level(const Root& alpha) const {
    int idx = index_of(alpha);
    if (idx < 0) throw std::invalid_argument("level: argument is not a root of this system");
    return level_idx(idx);
}

RootSystem RootSystem::long_simple_subsystem() const {
    const auto& sel = long_simple_;
    const int k = static_cast<int>(sel.size());
    CartanDatum sub;
    sub.rank = k;
    sub.cartan.assign(k, std::vector<int>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub.cartan[a][b] = datum_.cartan[sel[a]][sel[b]];
    sub.symmetrizer.assign(k, 1);  // all long, renormalized
    sub.r = 1;

    // Classify the (connected, simply laced) diagram: path → A, one fork → D/E.
    std::vector<int> degree(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (a != b && sub.cartan[a][b] != 0) ++degree[a];
    int forks = static_cast<int>(std::count(degree.begin(), degree.end(), 3));
    if (forks == 0) {
        sub.family = Family::A;
    } else {
        // Arm lengths from the unique trivalent node.
        int center = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
        std::vector<int> arms;
        for (int b = 0; b < k; ++b) {
            if (b == center || sub.cartan[center][b] == 0) continue;
            int len = 0, prev = center, cur = b;
            while (cur >= 0) {
                ++len;
                int next = -1;
                for (int c = 0; c < k; ++c)
                    if (c != cur && c != prev && sub.cartan[cur][c] != 0) next = c;
                prev = cur;
                cur = next;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        sub.family = (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) ? Family::D : Family::E;
    }
    return from_datum(std::move(sub));
}

std::vector<long long> RootSystem::simple_root_weight_coords(int i) const {
    std::vector<long long> v(datum_.rank);
    for (int j = 0; j < datum_.rank; ++j) v[j] = datum_.cartan[i][j];
    return v;
}

long long RootSystem::weight_pairing(const std::vector<long long>& v, int gamma_idx) const {
    const auto& cc = coroot_coeffs_.at(gamma_idx);
    long long sum = 0;
    for (int j = 0; j < datum_.rank; ++j) sum += v[j] * cc[j];
    return sum;
}

std::vector<long long> RootSystem::weight_reflect(int gamma_idx,
                                                  const std::vector<long long>& v) const {
    long long m = weight_pairing(v, gamma_idx);
    std::vector<long long> out = v;
    const auto& g = roots_[gamma_idx].coeffs;
    for (int j = 0; j < datum_.rank; ++j) {
        long long gw = 0;  // γ over the fundamental-weight basis
        for (int i = 0; i < datum_.rank; ++i)
            gw += static_cast<long long>(g[i]) * datum_.cartan[i][j];
        out[j] -= m * gw;
    }
    return out;
}

}  // namespace minorb::rootsys
