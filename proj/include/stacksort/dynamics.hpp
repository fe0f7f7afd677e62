#ifndef STACKSORT_DYNAMICS_HPP
#define STACKSORT_DYNAMICS_HPP

// dynamics.hpp
//
// The stack-sorting map as a dynamical system on S_n: preimages and
// fertility, sortedness, t-sortedness, and the rooted stack-sorting tree
// (root 1 2 ... n, each non-identity permutation a child of its image).
//
// Everything here is exhaustive search over S_n, guarded by a configurable
// cap on n (default 10, about 3.6M permutations). Inputs are standardized
// internally; the map commutes with order-isomorphism, so no generality is
// lost. Batch results are cached per n inside a Dynamics instance: methods
// are not thread-safe while they populate a cache, but a fully constructed
// instance is safe for concurrent reads.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

/// Raised when a request exceeds the configured brute-force cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(int n, int cap)
        : std::runtime_error("n = " + std::to_string(n) + " exceeds the brute-force cap " +
                             std::to_string(cap)),
          n_(n),
          cap_(cap) {}
    int n() const { return n_; }
    int cap() const { return cap_; }

private:
    int n_;
    int cap_;
};

struct FertilityReport {
    Permutation target;  // standardized
    std::uint64_t fertility = 0;
    std::optional<std::vector<Permutation>> preimages;  // lex order, when materialized
};

/// Rooted tree on S_n under the stack-sorting map. Nodes are indexed by
/// lexicographic rank; the identity (rank 0) is the root.
///
/// height is the length of the longest strict preimage chain below a node,
/// so height(p) >= t iff p is t-sorted for every non-identity p. The root
/// is t-sorted for every t (the identity is a fixed point) while its stored
/// height is the longest chain in the tree, which equals n - 1.
class StackSortTree {
public:
    int n() const { return n_; }
    int node_count() const { return static_cast<int>(keys_.size()); }
    int root() const { return 0; }

    Permutation perm(int index) const;
    int index_of(const Permutation& p) const;  // -1 if not a member of S_n

    int parent(int index) const { return parent_[static_cast<std::size_t>(index)]; }
    int depth(int index) const { return depth_[static_cast<std::size_t>(index)]; }
    int height(int index) const { return height_[static_cast<std::size_t>(index)]; }
    int max_depth() const;

private:
    friend class Dynamics;
    int n_ = 0;
    std::vector<std::uint64_t> keys_;  // lex-sorted encodings
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> depth_;
    std::vector<std::int32_t> height_;
};

nlohmann::json tree_to_json(const StackSortTree& tree);
std::string tree_to_dot(const StackSortTree& tree);

class Dynamics {
public:
    static constexpr int kDefaultCap = 10;
    static constexpr int kMaxCap = 12;

    explicit Dynamics(int cap = kDefaultCap);

    int cap() const { return cap_; }

    /// Exact preimage set {q in S_n : s(q) = p}, lexicographically ordered.
    /// Pass materialize = false to count only.
    FertilityReport preimages(const Permutation& p, bool materialize = true);

    std::uint64_t fertility(const Permutation& p);

    /// In the image of s, i.e. fertility >= 1.
    bool is_sorted(const Permutation& p);

    /// Fertility exactly 1. Equivalently: sorted with (n-1)/2 descents.
    bool is_uniquely_sorted(const Permutation& p);

    /// Of the form s^t(q) for some q in S_n.
    bool is_t_sorted(const Permutation& p, int t);

    /// {s^t(q) : q in S_n}, deduplicated, lexicographic order.
    std::vector<Permutation> image_of_iterate(int n, int t);

    const StackSortTree& build_tree(int n);

    /// Visits every image of s over S_n in lexicographic order together with
    /// its fertility. One table pass; the workhorse behind distribution scans.
    void for_each_sorted(int n,
                         const std::function<void(const std::vector<int>&, std::uint64_t)>& fn);

private:
    using Key = std::uint64_t;

    void check_n(int n) const;
    const std::vector<std::pair<Key, std::uint32_t>>& fertility_table(int n);
    const std::vector<Key>& iterate_image_keys(int n, int t);

    int cap_;
    // Full grouping tables are kept only up to this n; beyond it the queries
    // fall back to direct scans of S_n.
    static constexpr int kTableCap = 10;

    std::map<int, std::vector<std::pair<Key, std::uint32_t>>> fertility_cache_;
    std::map<std::pair<int, int>, std::vector<Key>> image_cache_;
    std::map<int, StackSortTree> tree_cache_;
};

}  // namespace stacksort

#endif
