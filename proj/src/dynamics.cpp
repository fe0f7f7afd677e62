#include "stacksort/dynamics.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>

#include "stacksort/stack_sort.hpp"

namespace stacksort {
namespace {

// Entries are packed one per nibble, position 1 in the highest nibble, so
// unsigned comparison of keys equals lexicographic comparison within a fixed
// n. Requires n <= 16; the cap keeps us well inside that.
std::uint64_t encode(const std::vector<int>& p) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        key |= static_cast<std::uint64_t>(p[i] - 1) << (4 * (15 - i));
    }
    return key;
}

std::vector<int> decode(std::uint64_t key, int n) {
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        entries[static_cast<std::size_t>(i)] =
            static_cast<int>((key >> (4 * (15 - i))) & 0xF) + 1;
    }
    return entries;
}

// Calls fn on every element of S_n in lexicographic order.
template <typename Fn>
void for_each_in_sn(int n, Fn&& fn) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

Permutation StackSortTree::perm(int index) const {
    return Permutation(decode(keys_[static_cast<std::size_t>(index)], n_));
}

int StackSortTree::index_of(const Permutation& p) const {
    if (p.size() != n_ || !p.is_standardized()) return -1;
    const std::uint64_t key = encode(p.entries());
    auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
    if (it == keys_.end() || *it != key) return -1;
    return static_cast<int>(it - keys_.begin());
}

int StackSortTree::max_depth() const {
    return *std::max_element(depth_.begin(), depth_.end());
}

nlohmann::json tree_to_json(const StackSortTree& tree) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int i = 0; i < tree.node_count(); ++i) {
        nlohmann::json node;
        node["perm"] = tree.perm(i).entries();
        if (tree.parent(i) >= 0) {
            node["parent"] = tree.perm(tree.parent(i)).entries();
        } else {
            node["parent"] = nullptr;
        }
        node["depth"] = tree.depth(i);
        node["height"] = tree.height(i);
        nodes.push_back(std::move(node));
    }
    nlohmann::json out;
    out["n"] = tree.n();
    out["nodes"] = std::move(nodes);
    return out;
}

std::string tree_to_dot(const StackSortTree& tree) {
    std::ostringstream os;
    os << "digraph stacksort_tree {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    for (int i = 0; i < tree.node_count(); ++i) {
        os << "  \"" << tree.perm(i).str() << "\";\n";
    }
    for (int i = 0; i < tree.node_count(); ++i) {
        if (tree.parent(i) < 0) continue;
        os << "  \"" << tree.perm(i).str() << "\" -> \""
           << tree.perm(tree.parent(i)).str() << "\";\n";
    }
    os << "}\n";
    return os.str();
}

Dynamics::Dynamics(int cap) : cap_(cap) {
    if (cap < 1 || cap > kMaxCap) {
        throw std::invalid_argument("brute-force cap must be between 1 and " +
                                    std::to_string(kMaxCap));
    }
}

void Dynamics::check_n(int n) const {
    if (n > cap_) throw CapExceeded(n, cap_);
}

const std::vector<std::pair<Dynamics::Key, std::uint32_t>>& Dynamics::fertility_table(int n) {
    auto it = fertility_cache_.find(n);
    if (it != fertility_cache_.end()) return it->second;

    std::vector<Key> images;
    std::size_t total = 1;
    for (int i = 2; i <= n; ++i) total *= static_cast<std::size_t>(i);
    images.reserve(total);

    std::vector<int> out;
    std::vector<int> scratch;
    for_each_in_sn(n, [&](const std::vector<int>& p) {
        stack_sort_into(p, out, scratch);
        images.push_back(encode(out));
    });
    std::sort(images.begin(), images.end());

    std::vector<std::pair<Key, std::uint32_t>> table;
    for (std::size_t i = 0; i < images.size();) {
        std::size_t j = i;
        while (j < images.size() && images[j] == images[i]) ++j;
        table.emplace_back(images[i], static_cast<std::uint32_t>(j - i));
        i = j;
    }
    return fertility_cache_.emplace(n, std::move(table)).first->second;
}

FertilityReport Dynamics::preimages(const Permutation& p, bool materialize) {
    const Permutation target = p.standardized();
    const int n = target.size();
    check_n(n);

    FertilityReport report{target, 0, std::nullopt};
    std::vector<Permutation> found;
    const Key want = encode(target.entries());

    std::vector<int> out;
    std::vector<int> scratch;
    for_each_in_sn(n, [&](const std::vector<int>& q) {
        stack_sort_into(q, out, scratch);
        if (encode(out) == want) {
            ++report.fertility;
            if (materialize) found.emplace_back(q);
        }
    });
    if (materialize) report.preimages = std::move(found);
    return report;
}

std::uint64_t Dynamics::fertility(const Permutation& p) {
    const Permutation target = p.standardized();
    const int n = target.size();
    check_n(n);

    if (n <= kTableCap) {
        const auto& table = fertility_table(n);
        const Key want = encode(target.entries());
        auto it = std::lower_bound(table.begin(), table.end(), want,
                                   [](const auto& row, Key k) { return row.first < k; });
        if (it == table.end() || it->first != want) return 0;
        return it->second;
    }
    return preimages(target, /*materialize=*/false).fertility;
}

bool Dynamics::is_sorted(const Permutation& p) { return fertility(p) >= 1; }

bool Dynamics::is_uniquely_sorted(const Permutation& p) { return fertility(p) == 1; }

const std::vector<Dynamics::Key>& Dynamics::iterate_image_keys(int n, int t) {
    // s^(n-1) sends all of S_n to the identity, so higher iterates add nothing.
    const int teff = std::min(t, std::max(n - 1, 0));
    const auto cache_key = std::make_pair(n, teff);
    auto it = image_cache_.find(cache_key);
    if (it != image_cache_.end()) return it->second;

    std::vector<Key> keys;
    std::vector<int> cur;
    std::vector<int> out;
    std::vector<int> scratch;
    for_each_in_sn(n, [&](const std::vector<int>& q) {
        cur = q;
        for (int k = 0; k < teff; ++k) {
            stack_sort_into(cur, out, scratch);
            cur.swap(out);
        }
        keys.push_back(encode(cur));
    });
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return image_cache_.emplace(cache_key, std::move(keys)).first->second;
}

bool Dynamics::is_t_sorted(const Permutation& p, int t) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    const Permutation target = p.standardized();
    check_n(target.size());
    if (t == 0) return true;  // s^0 is the identity map
    const auto& keys = iterate_image_keys(target.size(), t);
    return std::binary_search(keys.begin(), keys.end(), encode(target.entries()));
}

std::vector<Permutation> Dynamics::image_of_iterate(int n, int t) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    check_n(n);
    const auto& keys = iterate_image_keys(n, t);
    std::vector<Permutation> image;
    image.reserve(keys.size());
    for (Key key : keys) image.emplace_back(decode(key, n));
    return image;
}

const StackSortTree& Dynamics::build_tree(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_n(n);
    auto it = tree_cache_.find(n);
    if (it != tree_cache_.end()) return it->second;

    StackSortTree tree;
    tree.n_ = n;
    std::size_t total = 1;
    for (int i = 2; i <= n; ++i) total *= static_cast<std::size_t>(i);
    tree.keys_.reserve(total);

    // next_permutation enumerates lexicographically and encode is monotone,
    // so keys_ comes out sorted.
    for_each_in_sn(n, [&](const std::vector<int>& p) { tree.keys_.push_back(encode(p)); });

    tree.parent_.assign(total, -1);
    std::vector<int> out;
    std::vector<int> scratch;
    std::vector<int> cur(static_cast<std::size_t>(n));
    for (std::size_t i = 1; i < total; ++i) {
        cur = decode(tree.keys_[i], n);
        stack_sort_into(cur, out, scratch);
        const Key pk = encode(out);
        auto pos = std::lower_bound(tree.keys_.begin(), tree.keys_.end(), pk);
        tree.parent_[i] = static_cast<std::int32_t>(pos - tree.keys_.begin());
    }

    tree.depth_.assign(total, -1);
    tree.depth_[0] = 0;
    std::vector<std::int32_t> chain;
    for (std::size_t i = 1; i < total; ++i) {
        if (tree.depth_[i] >= 0) continue;
        chain.clear();
        std::int32_t v = static_cast<std::int32_t>(i);
        while (tree.depth_[static_cast<std::size_t>(v)] < 0) {
            chain.push_back(v);
            v = tree.parent_[static_cast<std::size_t>(v)];
        }
        std::int32_t d = tree.depth_[static_cast<std::size_t>(v)];
        for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit) {
            tree.depth_[static_cast<std::size_t>(*rit)] = ++d;
        }
    }

    // Heights in one pass, visiting deeper nodes before their parents.
    tree.height_.assign(total, 0);
    const int max_d = *std::max_element(tree.depth_.begin(), tree.depth_.end());
    std::vector<std::size_t> depth_count(static_cast<std::size_t>(max_d) + 2, 0);
    for (std::int32_t d : tree.depth_) ++depth_count[static_cast<std::size_t>(d) + 1];
    for (std::size_t d = 1; d < depth_count.size(); ++d) depth_count[d] += depth_count[d - 1];
    std::vector<std::int32_t> by_depth(total);
    {
        std::vector<std::size_t> cursor(depth_count.begin(), depth_count.end() - 1);
        for (std::size_t i = 0; i < total; ++i) {
            by_depth[cursor[static_cast<std::size_t>(tree.depth_[i])]++] =
                static_cast<std::int32_t>(i);
        }
    }
    for (auto rit = by_depth.rbegin(); rit != by_depth.rend(); ++rit) {
        const std::size_t i = static_cast<std::size_t>(*rit);
        const std::int32_t par = tree.parent_[i];
        if (par < 0) continue;
        tree.height_[static_cast<std::size_t>(par)] = std::max(
            tree.height_[static_cast<std::size_t>(par)],
            static_cast<std::int32_t>(tree.height_[i] + 1));
    }

    return tree_cache_.emplace(n, std::move(tree)).first->second;
}

void Dynamics::for_each_sorted(
    int n, const std::function<void(const std::vector<int>&, std::uint64_t)>& fn) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_n(n);
    if (n <= kTableCap) {
        for (const auto& [key, count] : fertility_table(n)) {
            fn(decode(key, n), count);
        }
        return;
    }
    // Above the table cap: one full sort of the image multiset, then a
    // run-length sweep. Costs memory proportional to n! but no table is kept.
    std::vector<Key> images;
    std::vector<int> out;
    std::vector<int> scratch;
    for_each_in_sn(n, [&](const std::vector<int>& p) {
        stack_sort_into(p, out, scratch);
        images.push_back(encode(out));
    });
    std::sort(images.begin(), images.end());
    for (std::size_t i = 0; i < images.size();) {
        std::size_t j = i;
        while (j < images.size() && images[j] == images[i]) ++j;
        fn(decode(images[i], n), static_cast<std::uint64_t>(j - i));
        i = j;
    }
}

}  // namespace stacksort
