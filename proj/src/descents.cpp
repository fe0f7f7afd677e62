#include "stacksort/descents.hpp"

#include <algorithm>
#include <limits>

namespace stacksort {

DescentStats descent_stats(const Permutation& p) {
    DescentStats stats;
    const std::vector<int>& e = p.entries();
    const int n = p.size();

    int running_max = 0;
    for (int i = 1; i <= n; ++i) {
        if (p.entry(i) > running_max) {
            running_max = p.entry(i);
            stats.ltr_max_positions.push_back(i);
        }
        if (i < n && p.entry(i) > p.entry(i + 1)) {
            stats.descents.push_back(i);
            stats.descent_bottoms.push_back(p.entry(i + 1));
        }
        if (i >= 2 && i <= n - 1 && e[i - 2] > e[i - 1] && e[i - 1] > e[i]) {
            stats.double_descents.push_back(i);
        }
    }
    std::sort(stats.descent_bottoms.begin(), stats.descent_bottoms.end());
    return stats;
}

int count_descents(const std::vector<int>& entries) {
    int count = 0;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i - 1] > entries[i]) ++count;
    }
    return count;
}

int count_descents(const Permutation& p) { return count_descents(p.entries()); }

bool avoids_231(const Permutation& p) {
    const std::vector<int>& e = p.entries();
    const std::size_t n = e.size();
    if (n < 3) return true;

    // suffix_min[j] = min of e[j..n-1]; a 231 pattern with (i, j) as the
    // "2 3" part exists iff something smaller than e[i] appears after j.
    std::vector<int> suffix_min(n + 1, std::numeric_limits<int>::max());
    for (std::size_t j = n; j-- > 0;) {
        suffix_min[j] = std::min(suffix_min[j + 1], e[j]);
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            if (e[i] < e[j] && suffix_min[j + 1] < e[i]) return false;
        }
    }
    return true;
}

std::optional<int> corollary1_witness(const Permutation& p) {
    const int n = p.size();
    for (int l = 1; l <= n - 2; ++l) {
        if (p.entry(l + 1) < p.entry(l + 2) && p.entry(l + 2) < p.entry(l)) {
            return l;
        }
    }
    return std::nullopt;
}

}  // namespace stacksort
