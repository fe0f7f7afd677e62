#ifndef STACKSORT_HOOKS_HPP
#define STACKSORT_HOOKS_HPP

// hooks.hpp
//
// Hook geometry on permutation plots and valid hook configurations.
//
// The plot of p is the point set {(i, p_i)}. A hook starts at a plot point
// (the southwest endpoint), runs vertically up, then right to a later,
// higher plot point (the northeast endpoint). A valid hook configuration
// assigns one hook to each descent such that
//   1. the u-th hook's southwest endpoint sits at the u-th descent,
//   2. no plot point lies directly above any hook's path, and
//   3. hook paths are pairwise disjoint, except that the northeast endpoint
//      of one hook may serve as the southwest endpoint of another.
// A permutation is in the image of the stack-sorting map exactly when such
// a configuration exists, which is what is_sorted_via_vhc certifies.
//
// "Directly above a hook" is formalized as: a plot point (a, p_a) with
// sw < a < ne and p_a > p_ne. The path's height over the open interval is
// p_ne, the southwest column holds no other plot point, and the endpoints
// themselves lie on the path. The agreement suite against brute-force image
// membership pins this formalization down.

#include <functional>
#include <optional>
#include <vector>

#include "json.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

/// L-shaped path identified by 1-based southwest/northeast positions into a
/// host permutation. Valid iff sw < ne and p_sw < p_ne.
struct Hook {
    int sw = 0;
    int ne = 0;
    friend bool operator==(const Hook&, const Hook&) = default;
    friend auto operator<=>(const Hook&, const Hook&) = default;
};

bool is_valid_hook(const Permutation& host, Hook h);

/// Vertical extent [lo, hi] of a hook's path over one x-column.
struct HookSlice {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const HookSlice&, const HookSlice&) = default;
};

/// Path cross-section at column x: the full vertical segment at x = sw, the
/// single horizontal height over sw < x <= ne, nothing outside [sw, ne].
std::optional<HookSlice> hook_path_height(const Permutation& host, Hook h, int x);

/// True iff the plot point at position a lies strictly above h's path.
bool point_above_hook(const Permutation& host, Hook h, int a);

/// True iff the two L-paths share any geometric point other than the single
/// permitted one (northeast endpoint of one == southwest endpoint of the
/// other). Sharing a northeast or a southwest endpoint conflicts. Exact
/// integer segment arithmetic; no floating point.
bool hooks_conflict(const Permutation& host, Hook a, Hook b);

struct ValidHookConfiguration {
    Permutation host;
    std::vector<Hook> hooks;  // one per descent, in ascending descent order
    friend bool operator==(const ValidHookConfiguration&, const ValidHookConfiguration&) = default;
};

/// All valid hook configurations of p, in lexicographic order of their
/// northeast-position tuples. An increasing permutation has exactly one
/// (empty) configuration.
std::vector<ValidHookConfiguration> enumerate_vhcs(const Permutation& p);

/// Existence check; stops at the first configuration found.
bool is_sorted_via_vhc(const Permutation& p);

void to_json(nlohmann::json& j, const Hook& h);
void to_json(nlohmann::json& j, const ValidHookConfiguration& config);

}  // namespace stacksort

#endif
