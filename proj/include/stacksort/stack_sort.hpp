#ifndef STACKSORT_STACK_SORT_HPP
#define STACKSORT_STACK_SORT_HPP

// stack_sort.hpp
//
// West's stack-sorting map s: entries pass through a single stack; the next
// input entry is pushed whenever the stack is empty or the entry is smaller
// than the stack top, otherwise the top pops to the output. All operations
// here are pure; values are safe to share across threads.

#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// One pass of the stack-sorting map.
Permutation stack_sort(const Permutation& p);

/// s applied t times (t >= 0; t = 0 is the identity map).
Permutation stack_sort_iter(const Permutation& p, int t);

/// Allocation-free core used by the exhaustive-search loops. `output` and
/// `scratch` are cleared and reused; `input` and `output` must not alias.
void stack_sort_into(const std::vector<int>& input, std::vector<int>& output,
                     std::vector<int>& scratch);

struct SortStep {
    enum class Action { push, pop };
    Action action;
    int entry;
    std::vector<int> stack;   // bottom to top, after the step
    std::vector<int> output;  // after the step
};

/// Push/pop log of one pass: exactly 2n steps, final output = stack_sort(p).
struct SortTrace {
    std::vector<SortStep> steps;
};

SortTrace trace(const Permutation& p);

}  // namespace stacksort

#endif
