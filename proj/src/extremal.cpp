#include "stacksort/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "stacksort/descents.hpp"
#include "stacksort/stack_sort.hpp"

namespace stacksort {
namespace {

void require_domain(int n, int t, int t_min) {
    if (t < t_min) {
        throw std::invalid_argument("t must be at least " + std::to_string(t_min));
    }
    if (t > n) throw std::invalid_argument("t must not exceed n");
}

void require_same_parity(int n, int t) {
    if ((n - t) % 2 != 0) {
        throw std::invalid_argument("n and t must have the same parity here");
    }
}

// Positions {1,3,5,...,n-t+1} union {n-t+2,...,n}, ascending.
std::vector<int> pattern_positions(int n, int t) {
    std::vector<int> pos;
    for (int j = 1; j <= n - t + 1; j += 2) pos.push_back(j);
    for (int j = n - t + 2; j <= n; ++j) pos.push_back(j);
    return pos;
}

// Inserts a value of rank r (1-based, 1 = smallest) into a prefix of
// standardized values: existing values >= r move up by one, then r joins.
void insert_rank(std::vector<int>& vals, int r) {
    for (int& v : vals) {
        if (v >= r) ++v;
    }
    vals.push_back(r);
}

void enumerate_rec(int n, int t, int j, std::vector<int>& vals,
                   std::vector<Permutation>& out) {
    if (j > n) {
        out.emplace_back(vals);
        return;
    }
    const bool must_be_max = (j % 2 == 1 && j <= n - t + 1) || j >= n - t + 2;
    if (must_be_max) {
        insert_rank(vals, j);
        enumerate_rec(n, t, j + 1, vals, out);
        vals.pop_back();
        // Undo: value j was appended unshifted, nothing else moved.
        return;
    }
    for (int r = 1; r <= j - 1; ++r) {
        std::vector<int> saved = vals;
        insert_rank(vals, r);
        enumerate_rec(n, t, j + 1, vals, out);
        vals = std::move(saved);
    }
}

}  // namespace

ExtremalQuery::ExtremalQuery(int n_in, int t_in) : n(n_in), t(t_in) {
    require_domain(n, t, 1);
    bound = (n - t) / 2;
}

int max_descents(int n, int t) {
    require_domain(n, t, 1);
    return (n - t) / 2;
}

bool matches_extremal_pattern(const Permutation& p, int t) {
    const Permutation q = p.standardized();
    const int n = q.size();
    require_domain(n, t, 2);
    require_same_parity(n, t);
    return descent_stats(q).ltr_max_positions == pattern_positions(n, t);
}

std::vector<Permutation> enumerate_extremal_pattern(int n, int t) {
    require_domain(n, t, 2);
    require_same_parity(n, t);
    std::vector<Permutation> out;
    std::vector<int> vals;
    vals.reserve(static_cast<std::size_t>(n));
    enumerate_rec(n, t, 1, vals, out);
    std::sort(out.begin(), out.end());
    return out;
}

LiftChain build_lift_chain(const Permutation& p, int t) {
    const Permutation pi = p.standardized();
    const int n = pi.size();
    if (!matches_extremal_pattern(pi, t)) {
        throw std::invalid_argument(
            "build_lift_chain requires the left-to-right-maxima pattern");
    }

    std::vector<int> designated;  // entries at positions 2, 4, ..., n-t
    for (int j = 2; j <= n - t; j += 2) designated.push_back(pi.entry(j));
    std::vector<int> rest;  // the others, in position order
    for (int j = 1; j <= n; ++j) {
        const int e = pi.entry(j);
        if (std::find(designated.begin(), designated.end(), e) == designated.end()) {
            rest.push_back(e);
        }
    }

    LiftChain chain;
    for (int k = 0; k <= t; ++k) {
        std::vector<int> stage(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < designated.size(); ++i) {
            stage[static_cast<std::size_t>(2 * (i + 1) + k) - 1] = designated[i];
        }
        std::size_t next = 0;
        for (int& slot : stage) {
            if (slot == 0) slot = rest[next++];
        }
        chain.stages.emplace_back(std::move(stage));
    }

    for (int k = 1; k <= t; ++k) {
        if (stack_sort(chain.stages[static_cast<std::size_t>(k)]) !=
            chain.stages[static_cast<std::size_t>(k) - 1]) {
            throw std::logic_error("lift chain stage failed its sort check");
        }
    }
    return chain;
}

BigInt count_extremal(Dynamics& dyn, int n, int t) {
    require_domain(n, t, 2);
    if ((n - t) % 2 == 0) return double_factorial(n - t - 1);

    const int bound = max_descents(n, t);
    std::uint64_t count = 0;
    for (const Permutation& p : dyn.image_of_iterate(n, t)) {
        if (count_descents(p) == bound) ++count;
    }
    return BigInt(count);
}

Permutation odd_case_witness(Dynamics& dyn, int n, int t) {
    require_domain(n, t, 1);
    if ((n - t) % 2 == 0) {
        throw std::invalid_argument(
            "n and t have the same parity; use enumerate_extremal_pattern");
    }

    Permutation lambda;
    if (t >= 2) {
        lambda = enumerate_extremal_pattern(n - 1, t).front();
    } else {
        // t = 1: the lexicographically least fertility-1 permutation.
        std::vector<int> least;
        dyn.for_each_sorted(n - 1, [&](const std::vector<int>& perm, std::uint64_t fert) {
            if (least.empty() && fert == 1) least = perm;
        });
        if (least.empty()) throw std::logic_error("no fertility-1 permutation found");
        lambda = Permutation(least);
    }

    const Permutation witness = one_plus(lambda);
    if (n <= dyn.cap()) {
        if (!dyn.is_t_sorted(witness, t) ||
            count_descents(witness) != (n - t - 1) / 2) {
            throw std::logic_error("odd-case witness failed its dynamics check");
        }
    }
    return witness;
}

}  // namespace stacksort
