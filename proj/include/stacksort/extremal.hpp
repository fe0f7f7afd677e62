#ifndef STACKSORT_EXTREMAL_HPP
#define STACKSORT_EXTREMAL_HPP

// extremal.hpp
//
// The descent-maximizing t-sorted permutations. A t-sorted permutation of
// length n has at most floor((n-t)/2) descents. When n and t have the same
// parity the permutations attaining the bound are exactly those whose
// left-to-right maxima sit at positions {1,3,5,...,n-t+1} and {n-t+2,...,n};
// there are (n-t-1)!! of them, and each is certified t-sorted by an explicit
// chain of preimages built by sliding its even-position entries rightward.
// When the parities differ no characterization is known and the count falls
// back to brute force.

#include <vector>

#include "stacksort/dynamics.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/stats.hpp"

namespace stacksort {

struct ExtremalQuery {
    ExtremalQuery(int n, int t);
    int n;
    int t;
    int bound;  // floor((n - t) / 2)
};

/// Chain pi = stages[0], stages[1], ..., stages[t] with
/// stack_sort(stages[i]) = stages[i-1]; the last stage certifies that
/// stages[0] is t-sorted.
struct LiftChain {
    std::vector<Permutation> stages;
};

/// floor((n - t) / 2), the maximum number of descents of a t-sorted
/// permutation of length n. Requires n >= t >= 1.
int max_descents(int n, int t);

/// True iff the left-to-right maxima of p sit exactly at positions
/// {1,3,5,...,n-t+1} union {n-t+2,...,n}. Requires n >= t >= 2 and
/// n == t (mod 2).
bool matches_extremal_pattern(const Permutation& p, int t);

/// All permutations of length n matching the pattern above, in
/// lexicographic order. Built constructively: each position that must not
/// be a left-to-right maximum picks one of the available relative heights
/// below the running maximum, giving (n-t-1)!! results.
std::vector<Permutation> enumerate_extremal_pattern(int n, int t);

/// The sliding certificate for a pattern permutation: stage k moves each of
/// the entries at positions 2, 4, ..., n-t of p rightward by k slots, the
/// other entries closing ranks. Every consecutive pair is checked with
/// stack_sort before returning.
LiftChain build_lift_chain(const Permutation& p, int t);

/// Number of t-sorted permutations of length n with max_descents(n, t)
/// descents. Same parity: (n-t-1)!! by formula. Opposite parity: exhaustive
/// count (requires n <= dyn.cap()). Requires n >= t >= 2.
BigInt count_extremal(Dynamics& dyn, int n, int t);

/// A t-sorted permutation of length n attaining the bound when n and t have
/// opposite parity: 1 (+) lambda, where lambda is the lexicographically
/// least same-parity witness of length n - 1 (for t = 1: the
/// lexicographically least fertility-1 permutation). The result is checked
/// against dynamics when n <= dyn.cap().
Permutation odd_case_witness(Dynamics& dyn, int n, int t);

}  // namespace stacksort

#endif
