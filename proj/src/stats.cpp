#include "stacksort/stats.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stacksort {

BigInt double_factorial(int m) {
    if (m < -1) throw std::invalid_argument("double factorial requires m >= -1");
    BigInt result = 1;
    for (int v = m; v >= 2; v -= 2) result *= v;
    return result;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: C(n-k+i, i) is an integer
    }
    return result;
}

BigInt catalan(int n) {
    if (n < 0) throw std::invalid_argument("Catalan numbers require n >= 0");
    const BigInt b = binomial(2 * n, n);
    if (b % (n + 1) != 0) throw std::logic_error("Catalan division left a remainder");
    return b / (n + 1);
}

BigInt west_count(int n) {
    if (n < 1) throw std::invalid_argument("west_count requires n >= 1");
    const BigInt num = 2 * binomial(3 * n, n);
    const BigInt denom = BigInt(n + 1) * (2 * n + 1);
    if (num % denom != 0) throw std::logic_error("west_count division left a remainder");
    return num / denom;
}

std::uint64_t lassalle_brute(Dynamics& dyn, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    std::uint64_t count = 0;
    dyn.for_each_sorted(2 * k + 1, [&](const std::vector<int>&, std::uint64_t fert) {
        if (fert == 1) ++count;
    });
    return count;
}

int hotspot(Dynamics& dyn, const Permutation& p) {
    const Permutation q = p.standardized();
    const int n = q.size();
    if (n == 1) {
        throw std::invalid_argument("hotspot is undefined for the length-1 permutation");
    }
    if (!dyn.is_uniquely_sorted(q)) {
        throw std::invalid_argument("hotspot requires a uniquely sorted permutation");
    }
    int descents_in_suffix = 0;
    for (int r = n - 1; r >= 1; --r) {
        if (q.entry(r) > q.entry(r + 1)) ++descents_in_suffix;
        if (2 * descents_in_suffix == n - r) return q.entry(r + 1);
    }
    throw std::logic_error("hotspot: no qualifying r, impossible for uniquely sorted input");
}

Distribution first_entry_distribution(Dynamics& dyn, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    Distribution d;
    d.label = "first_entry";
    dyn.for_each_sorted(2 * k + 1, [&](const std::vector<int>& perm, std::uint64_t fert) {
        if (fert != 1) return;
        ++d.buckets[perm.front()];
        ++d.total;
    });
    return d;
}

Distribution hotspot_distribution(Dynamics& dyn, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (k == 0) return first_entry_distribution(dyn, 0);
    Distribution d;
    d.label = "hotspot";
    dyn.for_each_sorted(2 * k + 1, [&](const std::vector<int>& perm, std::uint64_t fert) {
        if (fert != 1) return;
        ++d.buckets[hotspot(dyn, Permutation(perm))];
        ++d.total;
    });
    return d;
}

std::string distribution_csv(const Distribution& d) {
    std::ostringstream os;
    os << "key,count\n";
    for (const auto& [key, count] : d.buckets) os << key << ',' << count << '\n';
    return os.str();
}

nlohmann::json distribution_json(const Distribution& d) {
    nlohmann::json buckets = nlohmann::json::array();
    for (const auto& [key, count] : d.buckets) {
        buckets.push_back({{"key", key}, {"count", count}});
    }
    return nlohmann::json{{"label", d.label}, {"buckets", std::move(buckets)}, {"total", d.total}};
}

}  // namespace stacksort
