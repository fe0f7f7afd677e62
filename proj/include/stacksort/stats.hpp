#ifndef STACKSORT_STATS_HPP
#define STACKSORT_STATS_HPP

// stats.hpp
//
// Counting sequences and distributions attached to the stack-sorting map:
// exact big-integer combinatorics (double factorials, Catalan numbers, the
// 2-stack-sortable count) and brute-force distributions over the uniquely
// sorted permutations (first-entry and hotspot histograms).

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "stacksort/dynamics.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

using BigInt = boost::multiprecision::cpp_int;

/// m * (m-2) * (m-4) * ...; by convention (-1)!! = 0!! = 1. Requires m >= -1.
BigInt double_factorial(int m);

/// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

/// C(2n, n) / (n + 1), exact. Requires n >= 0.
BigInt catalan(int n);

/// 2 / ((n+1)(2n+1)) * C(3n, n), exact (the division always comes out even).
/// Counts permutations of length n sorted by two passes. Requires n >= 1.
BigInt west_count(int n);

/// Number of fertility-1 permutations in S_{2k+1}, by exhaustive scan.
std::uint64_t lassalle_brute(Dynamics& dyn, int k);

/// The entry p_{r+1} for the largest r in [n-1] such that p has exactly
/// (n-r)/2 descents in {r, ..., n-1}. Defined only for uniquely sorted p
/// (then r = 1 always qualifies, so the maximum exists). Undefined at
/// n = 1, where [n-1] is empty; that case throws.
int hotspot(Dynamics& dyn, const Permutation& p);

struct Distribution {
    std::string label;
    std::map<int, std::uint64_t> buckets;  // zero buckets omitted
    std::uint64_t total = 0;
};

/// Bucket l -> number of uniquely sorted permutations in S_{2k+1} whose
/// first entry is l.
Distribution first_entry_distribution(Dynamics& dyn, int k);

/// Bucket h -> number of uniquely sorted permutations in S_{2k+1} with
/// hotspot h. Shifted copy of the first-entry distribution: bucket(l-1)
/// here equals bucket(l) there. At k = 0 the hotspot is undefined (see
/// above), so this returns the first-entry distribution instead.
Distribution hotspot_distribution(Dynamics& dyn, int k);

/// "key,count" header plus one row per bucket, ascending key.
std::string distribution_csv(const Distribution& d);

nlohmann::json distribution_json(const Distribution& d);

}  // namespace stacksort

#endif
