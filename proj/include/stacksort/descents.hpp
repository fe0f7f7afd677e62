#ifndef STACKSORT_DESCENTS_HPP
#define STACKSORT_DESCENTS_HPP

// descents.hpp
//
// Elementary permutation statistics: descents, descent bottoms,
// left-to-right maxima, double descents, and the two pattern predicates
// the rest of the library relies on. All indices are 1-based.

#include <optional>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

struct DescentStats {
    std::vector<int> descents;            // indices i in [n-1] with p_i > p_{i+1}, ascending
    std::vector<int> descent_bottoms;     // entries p_{i+1} below a descent, ascending
    std::vector<int> ltr_max_positions;   // positions of left-to-right maxima, ascending
    std::vector<int> double_descents;     // indices i in {2..n-1} with p_{i-1} > p_i > p_{i+1}
};

DescentStats descent_stats(const Permutation& p);

/// des(p), without materializing the full statistics.
int count_descents(const std::vector<int>& entries);
int count_descents(const Permutation& p);

/// True iff no i < j < k has p_k < p_i < p_j.
bool avoids_231(const Permutation& p);

/// Least index l in [n-2] with p_{l+1} < p_{l+2} < p_l, if any. A permutation
/// admitting such a window is never uniquely sorted.
std::optional<int> corollary1_witness(const Permutation& p);

}  // namespace stacksort

#endif
