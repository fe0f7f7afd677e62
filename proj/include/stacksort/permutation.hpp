#ifndef STACKSORT_PERMUTATION_HPP
#define STACKSORT_PERMUTATION_HPP

// permutation.hpp
//
// One-line-notation permutations of finite sets of positive integers.
// Entries need not be exactly 1..n; standardized() maps any entry set to
// [n] order-isomorphically. Positions are 1-based everywhere in the API.

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

class Permutation {
public:
    /// Empty permutation. Valid as a recursion base; parse() never produces it.
    Permutation() = default;

    /// Takes ownership of `entries`. Throws std::invalid_argument if any
    /// entry is < 1 or appears twice.
    explicit Permutation(std::vector<int> entries);

    /// Accepts either a contiguous digit string ("4162", single-digit
    /// entries only) or whitespace/comma-separated integers ("10 2 7").
    /// Throws std::invalid_argument on empty input, duplicates, or
    /// non-positive entries.
    static Permutation parse(std::string_view text);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    /// Entry at 1-based position `pos`; throws std::out_of_range otherwise.
    int entry(int pos) const { return entries_.at(static_cast<std::size_t>(pos) - 1); }

    const std::vector<int>& entries() const { return entries_; }

    int max_entry() const;

    bool is_increasing() const;

    /// True iff the entry set is exactly {1, ..., n}.
    bool is_standardized() const;

    /// True iff this is 1 2 ... n.
    bool is_identity() const { return is_standardized() && is_increasing(); }

    /// Order-isomorphic copy over {1, ..., n}. Idempotent.
    Permutation standardized() const;

    /// Canonical rendering: space-separated entries.
    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// Increment every entry by 1 and prepend a 1. Requires standardized input;
/// the result lives in S_{n+1} and starts with 1.
Permutation one_plus(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace stacksort

#endif
