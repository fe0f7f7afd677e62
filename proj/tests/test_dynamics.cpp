#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "json.hpp"
#include "stacksort/dynamics.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/stack_sort.hpp"

using namespace stacksort;

namespace {

template <typename Fn>
void for_each_in_sn(int n, Fn&& fn) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<Permutation> parse_all(std::initializer_list<const char*> texts) {
    std::vector<Permutation> out;
    for (const char* t : texts) out.push_back(Permutation::parse(t));
    return out;
}

}  // namespace

TEST_CASE("cap validation") {
    CHECK_THROWS_AS(Dynamics(0), std::invalid_argument);
    CHECK_THROWS_AS(Dynamics(13), std::invalid_argument);
    CHECK_NOTHROW(Dynamics(1));
    CHECK_NOTHROW(Dynamics(12));
    CHECK(Dynamics().cap() == Dynamics::kDefaultCap);
}

TEST_CASE("exceeding the cap raises a typed error") {
    Dynamics dyn(5);
    const Permutation big = Permutation::identity(6);
    CHECK_THROWS_AS(dyn.fertility(big), CapExceeded);
    CHECK_THROWS_AS(dyn.preimages(big), CapExceeded);
    CHECK_THROWS_AS(dyn.is_t_sorted(big, 1), CapExceeded);
    CHECK_THROWS_AS(dyn.image_of_iterate(6, 1), CapExceeded);
    CHECK_THROWS_AS(dyn.build_tree(6), CapExceeded);
    CHECK_THROWS_AS(dyn.for_each_sorted(6, [](const std::vector<int>&, std::uint64_t) {}),
                    CapExceeded);
    try {
        dyn.build_tree(6);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.n() == 6);
        CHECK(e.cap() == 5);
    }
    // inside the cap everything still works
    CHECK(dyn.fertility(Permutation::identity(5)) == 42);
}

TEST_CASE("preimage sets on fixed targets") {
    Dynamics dyn;
    const FertilityReport r = dyn.preimages(Permutation::parse("2134"));
    CHECK(r.fertility == 4);
    REQUIRE(r.preimages.has_value());
    CHECK(*r.preimages ==
          parse_all({"2 3 1 4", "2 4 1 3", "2 4 3 1", "4 2 3 1"}));
    CHECK(std::is_sorted(r.preimages->begin(), r.preimages->end()));

    CHECK(dyn.preimages(Permutation::parse("21"), false).fertility == 0);
    CHECK_FALSE(dyn.preimages(Permutation::parse("21"), false).preimages.has_value());

    // every preimage actually maps onto the target
    for (const Permutation& q : *r.preimages) {
        CHECK(stack_sort(q) == r.target);
    }
}

TEST_CASE("fertility fixed values") {
    Dynamics dyn;
    CHECK(dyn.fertility(Permutation::parse("21435")) == 1);
    CHECK(dyn.fertility(Permutation::parse("2134")) == 4);
    CHECK(dyn.fertility(Permutation::parse("21")) == 0);
    CHECK(dyn.fertility(Permutation::parse("1")) == 1);
    // the identity's preimages are exactly the one-pass-sortable
    // permutations, whose counts are the Catalan numbers
    CHECK(dyn.fertility(Permutation::identity(4)) == 14);
    CHECK(dyn.fertility(Permutation::identity(6)) == 132);
}

TEST_CASE("fertility standardizes its input") {
    Dynamics dyn;
    CHECK(dyn.fertility(Permutation::parse("1 4 2 6")) ==
          dyn.fertility(Permutation::parse("1 3 2 4")));
    const FertilityReport r = dyn.preimages(Permutation::parse("30 10 40 20"));
    CHECK(r.target == Permutation::parse("3142"));
}

TEST_CASE("table-backed and scan-backed fertility agree") {
    Dynamics dyn;
    for_each_in_sn(5, [&](const std::vector<int>& raw) {
        const Permutation p(raw);
        const std::uint64_t direct = dyn.preimages(p, false).fertility;
        CHECK(dyn.fertility(p) == direct);
    });
}

TEST_CASE("sorted permutation counts at small lengths") {
    Dynamics dyn;
    // distinct one-pass images, counted independently through a set of
    // entry vectors rather than the packed table
    const std::vector<std::size_t> expected = {1, 1, 2, 5, 17, 68, 326};
    for (int n = 1; n <= 7; ++n) {
        std::set<std::vector<int>> images;
        for_each_in_sn(n, [&](const std::vector<int>& raw) {
            images.insert(stack_sort(Permutation(raw)).entries());
        });
        CHECK(images.size() == expected[static_cast<std::size_t>(n) - 1]);

        std::size_t table_images = 0;
        std::uint64_t total = 0;
        dyn.for_each_sorted(n, [&](const std::vector<int>& perm, std::uint64_t fert) {
            ++table_images;
            total += fert;
            CHECK(images.count(perm) == 1);
        });
        CHECK(table_images == images.size());
        CHECK(total == factorial(n));
    }
}

TEST_CASE("the five uniquely sorted permutations of length five") {
    Dynamics dyn;
    std::vector<Permutation> unique;
    dyn.for_each_sorted(5, [&](const std::vector<int>& perm, std::uint64_t fert) {
        if (fert == 1) unique.emplace_back(perm);
    });
    CHECK(unique == parse_all({"21435", "31425", "32145", "32415", "42135"}));
    for (const Permutation& p : unique) {
        CHECK(dyn.is_uniquely_sorted(p));
        CHECK(dyn.is_sorted(p));
    }
    CHECK_FALSE(dyn.is_uniquely_sorted(Permutation::parse("2134")));
    CHECK_FALSE(dyn.is_uniquely_sorted(Permutation::parse("12345")));
    CHECK(dyn.is_sorted(Permutation::parse("12345")));
}

TEST_CASE("images of one pass are always sorted") {
    Dynamics dyn;
    for_each_in_sn(5, [&](const std::vector<int>& raw) {
        CHECK(dyn.is_sorted(stack_sort(Permutation(raw))));
    });
}

TEST_CASE("t-sortedness via image membership") {
    Dynamics dyn;
    CHECK(dyn.is_t_sorted(Permutation::parse("123"), 2));
    CHECK_FALSE(dyn.is_t_sorted(Permutation::parse("213"), 2));
    CHECK(dyn.is_t_sorted(Permutation::parse("213"), 1));
    CHECK(dyn.is_t_sorted(Permutation::parse("2134"), 2));
    CHECK_FALSE(dyn.is_t_sorted(Permutation::parse("2134"), 3));
    CHECK(dyn.is_t_sorted(Permutation::identity(4), 100));
    CHECK(dyn.is_t_sorted(Permutation::parse("4321"), 0));
    CHECK_THROWS_AS(dyn.is_t_sorted(Permutation::parse("21"), -1), std::invalid_argument);
    // non-standardized inputs are standardized first
    CHECK(dyn.is_t_sorted(Permutation::parse("3 1 5"), 1) ==
          dyn.is_t_sorted(Permutation::parse("213"), 1));
}

TEST_CASE("iterated images on fixed cases") {
    Dynamics dyn;
    CHECK(dyn.image_of_iterate(4, 2) == parse_all({"1234", "2134"}));
    CHECK(dyn.image_of_iterate(3, 1) == parse_all({"123", "213"}));
    CHECK(dyn.image_of_iterate(3, 2) == parse_all({"123"}));
    CHECK(dyn.image_of_iterate(1, 0) == parse_all({"1"}));
    CHECK(dyn.image_of_iterate(3, 0).size() == 6);
    // beyond n-1 the image is pinned at the identity
    CHECK(dyn.image_of_iterate(4, 3) == parse_all({"1234"}));
    CHECK(dyn.image_of_iterate(4, 99) == parse_all({"1234"}));
    CHECK_THROWS_AS(dyn.image_of_iterate(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(dyn.image_of_iterate(3, -1), std::invalid_argument);
}

TEST_CASE("iterated images are nested") {
    Dynamics dyn;
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < n; ++t) {
            const auto wider = dyn.image_of_iterate(n, t);
            const auto narrower = dyn.image_of_iterate(n, t + 1);
            CHECK(std::includes(wider.begin(), wider.end(), narrower.begin(),
                                narrower.end()));
        }
    }
}

TEST_CASE("tree structure at length four") {
    Dynamics dyn;
    const StackSortTree& tree = dyn.build_tree(4);
    CHECK(tree.n() == 4);
    REQUIRE(tree.node_count() == 24);
    CHECK(tree.root() == 0);
    CHECK(tree.perm(tree.root()).is_identity());
    CHECK(tree.parent(tree.root()) == -1);
    CHECK(tree.depth(tree.root()) == 0);
    CHECK(tree.height(tree.root()) == 3);  // longest chain below the root
    CHECK(tree.max_depth() == 3);

    const int i2341 = tree.index_of(Permutation::parse("2341"));
    REQUIRE(i2341 >= 0);
    CHECK(tree.depth(i2341) == 3);
    CHECK(tree.height(i2341) == 0);

    // non-root nodes point at their one-pass image
    for (int i = 1; i < tree.node_count(); ++i) {
        CHECK(tree.parent(i) == tree.index_of(stack_sort(tree.perm(i))));
        CHECK(tree.depth(i) == tree.depth(tree.parent(i)) + 1);
    }

    // the nodes of height >= 2 are exactly the 2-sorted permutations
    std::vector<Permutation> tall;
    for (int i = 0; i < tree.node_count(); ++i) {
        if (tree.height(i) >= 2) tall.push_back(tree.perm(i));
    }
    std::sort(tall.begin(), tall.end());
    CHECK(tall == parse_all({"1234", "2134"}));

    CHECK(tree.index_of(Permutation::parse("123")) == -1);
    CHECK(tree.index_of(Permutation::parse("1 3 2 5")) == -1);
}

TEST_CASE("tree indices round-trip") {
    Dynamics dyn;
    const StackSortTree& tree = dyn.build_tree(4);
    for (int i = 0; i < tree.node_count(); ++i) {
        CHECK(tree.index_of(tree.perm(i)) == i);
    }
}

TEST_CASE("depth matches iterate-until-increasing, height matches t-sortedness") {
    Dynamics dyn;
    const int n = 5;
    const StackSortTree& tree = dyn.build_tree(n);
    for (int i = 0; i < tree.node_count(); ++i) {
        const Permutation p = tree.perm(i);

        int steps = 0;
        Permutation cur = p;
        while (!cur.is_increasing()) {
            cur = stack_sort(cur);
            ++steps;
        }
        CHECK(tree.depth(i) == steps);

        for (int t = 1; t <= n - 1; ++t) {
            const bool claimed = tree.height(i) >= t || i == tree.root();
            CHECK(claimed == dyn.is_t_sorted(p, t));
        }
    }
}

TEST_CASE("tree JSON and DOT output") {
    Dynamics dyn;
    const StackSortTree& tree = dyn.build_tree(3);
    const nlohmann::json j = tree_to_json(tree);
    CHECK(j["n"] == 3);
    REQUIRE(j["nodes"].size() == 6);
    CHECK(j["nodes"][0]["perm"] == nlohmann::json({1, 2, 3}));
    CHECK(j["nodes"][0]["parent"].is_null());
    CHECK(j["nodes"][0]["depth"] == 0);
    for (const auto& node : j["nodes"]) {
        CHECK(node.contains("perm"));
        CHECK(node.contains("parent"));
        CHECK(node.contains("depth"));
        CHECK(node.contains("height"));
    }

    const std::string dot = tree_to_dot(tree);
    CHECK(dot.find("digraph") != std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos;
         pos = dot.find("->", pos + 2)) {
        ++edges;
    }
    CHECK(edges == 5);  // n! - 1 edges
}

TEST_CASE("single-node tree") {
    Dynamics dyn;
    const StackSortTree& tree = dyn.build_tree(1);
    CHECK(tree.node_count() == 1);
    CHECK(tree.parent(0) == -1);
    CHECK(tree.depth(0) == 0);
    CHECK(tree.height(0) == 0);
}
