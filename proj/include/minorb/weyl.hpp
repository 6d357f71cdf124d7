/**
 * weyl.hpp — Weyl-group elements, minimal parabolic coset representatives,
 * and the correspondence α ↦ x_α between long roots and the coset family
 * attached to the stabilizer of the highest root.
 *
 * Elements are stored as permutations of the ambient root index set (never
 * as reduced words), so equality testing is canonical and length is always
 * recomputed from the inversion set |N(w)|. The full Weyl group is never
 * enumerated; coset families are generated breadth-first with a safety cap.
 */
#pragma once

#include "minorb/rootsys.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace minorb::weyl {

using rootsys::Root;
using rootsys::RootSystem;

/// Raised when a coset enumeration would exceed its cap; carries the count
/// reached so the caller can decide to retry with a larger cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t partial, std::size_t cap);
    std::size_t partial_count;
    std::size_t cap;
};

/**
 * A Weyl-group element w, acting on roots through a permutation of the
 * ambient system's root indices. Holds a non-owning pointer to the system,
 * which must outlive the element. Immutable after construction.
 */
class WeylElement {
public:
    static WeylElement identity(const RootSystem& rs);
    static WeylElement simple_reflection(const RootSystem& rs, int i);
    /// s_β for an arbitrary root index β.
    static WeylElement reflection(const RootSystem& rs, int root_idx);

    const RootSystem& system() const { return *rs_; }

    /// Image w(α) as a root index.
    int apply(int root_idx) const { return perm_[root_idx]; }
    Root apply_root(const Root& alpha) const;

    WeylElement inverse() const;

    /// l(w) = |N(w)|, the number of positive roots sent negative. Cached.
    int length() const;
    /// N(w) as a sorted list of positive root indices.
    std::vector<int> inversion_set() const;

    bool is_identity() const;
    bool operator==(const WeylElement& other) const { return perm_ == other.perm_; }

    const std::vector<int>& perm() const { return perm_; }

    friend WeylElement compose(const WeylElement& w, const WeylElement& v);

private:
    explicit WeylElement(const RootSystem& rs) : rs_(&rs) {}

    const RootSystem* rs_ = nullptr;
    std::vector<int> perm_;         // perm_[idx] = index of w(root idx)
    mutable int cached_length_ = -1;
};

/// Group product w∘v: the result acts as v first, then w.
WeylElement compose(const WeylElement& w, const WeylElement& v);

/**
 * The family X_I of minimal-length representatives of the cosets wW_I,
 * generated breadth-first. Cosets are keyed by the image w(ξ_I) of the
 * dominant vector ξ_I (coordinate 1 on every fundamental weight outside I),
 * whose stabilizer is exactly W_I; keys are exact integer vectors.
 * reps[0] is the identity, and parents precede children, so a sweep in
 * index order can propagate any per-element data down the search tree.
 */
struct CosetFamily {
    std::vector<int> I;                           // defining simple indices
    std::vector<WeylElement> reps;                // the set X_I
    std::vector<int> lengths;                     // lengths[a] = l(reps[a])
    std::vector<std::vector<long long>> keys;     // keys[a] = reps[a](ξ_I)
    std::map<std::vector<long long>, int> key_to_rep;
    std::vector<int> parent;                      // BFS tree edge, −1 at root
    std::vector<int> parent_simple;               // simple index of that edge

    std::size_t size() const { return reps.size(); }
    /// Position of the coset with the given key, or −1 if absent.
    int find(const std::vector<long long>& key) const;
    /// Images w(λ) for all reps, λ given in fundamental-weight coordinates.
    std::vector<std::vector<long long>> weight_images(const RootSystem& rs,
                                                      const std::vector<long long>& lambda) const;
};

/// Enumerate X_I breadth-first; throws CapExceeded beyond `cap` cosets.
CosetFamily coset_reps(const RootSystem& rs, const std::vector<int>& I,
                       std::size_t cap = 10000);

/**
 * The unique minimal coset representative x with x(α̃) = α, for α long.
 * Built as a reflection word along a monotone path from α up to α̃;
 * its length equals the level of α. Throws std::invalid_argument for
 * short roots.
 */
WeylElement x_alpha(const RootSystem& rs, const Root& alpha);
WeylElement x_alpha_idx(const RootSystem& rs, int root_idx);

}  // namespace minorb::weyl
