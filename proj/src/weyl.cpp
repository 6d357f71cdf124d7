#include "minorb/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <sstream>

namespace minorb::weyl {

CapExceeded::CapExceeded(std::size_t partial, std::size_t cap_)
    : std::runtime_error([&] {
          std::ostringstream msg;
          msg << "coset enumeration exceeded its cap of " << cap_ << " (reached " << partial
              << " cosets); raise the cap to continue";
          return msg.str();
      }()),
      partial_count(partial),
      cap(cap_) {}

WeylElement WeylElement::identity(const RootSystem& rs) {
    WeylElement w(rs);
    w.perm_.resize(rs.num_roots());
    std::iota(w.perm_.begin(), w.perm_.end(), 0);
    w.cached_length_ = 0;
    return w;
}

WeylElement WeylElement::reflection(const RootSystem& rs, int root_idx) {
    WeylElement w(rs);
    w.perm_.resize(rs.num_roots());
    for (int a = 0; a < rs.num_roots(); ++a) w.perm_[a] = rs.reflect_idx(root_idx, a);
    return w;
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
    return reflection(rs, rs.simple_root_index(i));
}

Root WeylElement::apply_root(const Root& alpha) const {
    int idx = rs_->index_of(alpha);
    if (idx < 0) throw std::invalid_argument("apply: argument is not a root of this system");
    return rs_->root(perm_[idx]);
}

WeylElement WeylElement::inverse() const {
    WeylElement w(*rs_);
    w.perm_.resize(perm_.size());
    for (std::size_t a = 0; a < perm_.size(); ++a) w.perm_[perm_[a]] = static_cast<int>(a);
    w.cached_length_ = cached_length_;  // l(w⁻¹) = l(w)
    return w;
}

int WeylElement::length() const {
    if (cached_length_ < 0) {
        int count = 0;
        for (int a : rs_->positive_indices())
            if (!rs_->root(perm_[a]).is_positive()) ++count;
        cached_length_ = count;
    }
    return cached_length_;
}

std::vector<int> WeylElement::inversion_set() const {
    std::vector<int> inv;
    for (int a : rs_->positive_indices())
        if (!rs_->root(perm_[a]).is_positive()) inv.push_back(a);
    return inv;
}

bool WeylElement::is_identity() const {
    for (std::size_t a = 0; a < perm_.size(); ++a)
        if (perm_[a] != static_cast<int>(a)) return false;
    return true;
}

WeylElement compose(const WeylElement& w, const WeylElement& v) {
    assert(w.rs_ == v.rs_);
    WeylElement out(*w.rs_);
    out.perm_.resize(w.perm_.size());
    for (std::size_t a = 0; a < w.perm_.size(); ++a) out.perm_[a] = w.perm_[v.perm_[a]];
    return out;
}

int CosetFamily::find(const std::vector<long long>& key) const {
    auto it = key_to_rep.find(key);
    return it == key_to_rep.end() ? -1 : it->second;
}

std::vector<std::vector<long long>> CosetFamily::weight_images(
    const RootSystem& rs, const std::vector<long long>& lambda) const {
    std::vector<std::vector<long long>> images(reps.size());
    for (std::size_t a = 0; a < reps.size(); ++a) {
        if (parent[a] < 0)
            images[a] = lambda;
        else
            images[a] = rs.weight_reflect(rs.simple_root_index(parent_simple[a]),
                                          images[parent[a]]);
    }
    return images;
}

CosetFamily coset_reps(const RootSystem& rs, const std::vector<int>& I, std::size_t cap) {
    if (cap == 0) throw std::invalid_argument("coset_reps: cap must be positive");
    for (int i : I)
        if (i < 0 || i >= rs.rank())
            throw std::invalid_argument("coset_reps: simple index out of range");

    CosetFamily fam;
    fam.I = I;
    std::sort(fam.I.begin(), fam.I.end());

    // ξ_I: dominant, fixed by exactly W_I.
    std::vector<long long> xi(rs.rank(), 1);
    for (int i : fam.I) xi[i] = 0;

    fam.reps.push_back(WeylElement::identity(rs));
    fam.lengths.push_back(0);
    fam.keys.push_back(xi);
    fam.key_to_rep[xi] = 0;
    fam.parent.push_back(-1);
    fam.parent_simple.push_back(-1);

    std::deque<int> queue{0};
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int j = 0; j < rs.rank(); ++j) {
            std::vector<long long> key = rs.weight_reflect(rs.simple_root_index(j), fam.keys[a]);
            if (fam.key_to_rep.count(key)) continue;
            if (fam.reps.size() >= cap) throw CapExceeded(fam.reps.size(), cap);
            WeylElement rep = compose(WeylElement::simple_reflection(rs, j), fam.reps[a]);
            assert(rep.length() == fam.lengths[a] + 1);  // first reach is minimal
            int b = static_cast<int>(fam.reps.size());
            fam.reps.push_back(std::move(rep));
            fam.lengths.push_back(fam.lengths[a] + 1);
            fam.keys.push_back(key);
            fam.key_to_rep[std::move(key)] = b;
            fam.parent.push_back(a);
            fam.parent_simple.push_back(j);
            queue.push_back(b);
        }
    }
    return fam;
}

WeylElement x_alpha_idx(const RootSystem& rs, int root_idx) {
    if (!rs.root(root_idx).is_long)
        throw std::invalid_argument("x_alpha: defined only for long roots");
    // Walk upward from α to the highest root, always reflecting by the first
    // simple root with negative pairing; each step raises the level by one.
    std::vector<int> word;  // simple indices, in the order chosen on the walk
    int beta = root_idx;
    const int top = rs.highest_root_index();
    while (beta != top) {
        int pick = -1;
        for (int j = 0; j < rs.rank(); ++j) {
            if (rs.pairing_idx(beta, rs.simple_root_index(j)) < 0) {
                pick = j;
                break;
            }
        }
        assert(pick >= 0);  // only the highest root is dominant among long roots
        beta = rs.reflect_idx(rs.simple_root_index(pick), beta);
        word.push_back(pick);
    }
    // The walk gives α̃ = (s_{γk}∘…∘s_{γ1})(α), so its inverse
    // x = s_{γ1}∘s_{γ2}∘…∘s_{γk} maps α̃ back down to α.
    WeylElement x = WeylElement::identity(rs);
    for (int j : word) x = compose(x, WeylElement::simple_reflection(rs, j));
    return x;
}

WeylElement x_alpha(const RootSystem& rs, const Root& alpha) {
    int idx = rs.index_of(alpha);
    if (idx < 0) throw std::invalid_argument("x_alpha: argument is not a root of this system");
    return x_alpha_idx(rs, idx);
}

}  // namespace minorb::weyl
