#include <random>

#include "clrm/lrm_tree.hpp"
#include "doctest.h"

using namespace clrm;

namespace {

std::vector<node_t> kids(const ColoredLrmTree& t, node_t v) {
    const auto c = t.children(v);
    return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("increasing array gives a blue path") {
    const auto t = ColoredLrmTree::build(ValueArray({1, 2, 3}));
    for (node_t v = 1; v <= 3; ++v) {
        CHECK(t.parent(v) == v - 1);
        CHECK_FALSE(t.is_red(v));
    }
}

TEST_CASE("decreasing array gives a star with red later children") {
    const auto t = ColoredLrmTree::build(ValueArray({3, 2, 1}));
    CHECK(kids(t, 0) == std::vector<node_t>{1, 2, 3});
    CHECK_FALSE(t.is_red(1));
    CHECK(t.is_red(2));
    CHECK(t.is_red(3));
    CHECK(t.red_select(0, 1) == maybe_node{2});
    CHECK(t.red_select(1, 1) == std::nullopt);
}

TEST_CASE("hand-traced tree of 2 1 3 1") {
    const auto t = ColoredLrmTree::build(ValueArray({2, 1, 3, 1}));
    CHECK(kids(t, 0) == std::vector<node_t>{1, 2, 4});
    CHECK(kids(t, 2) == std::vector<node_t>{3});
    CHECK_FALSE(t.is_red(1));
    CHECK(t.is_red(2));
    CHECK_FALSE(t.is_red(3));
    CHECK_FALSE(t.is_red(4));
    CHECK(t.subtree_size(2) == 2);
    CHECK(t.subtree_size(0) == 5);
    CHECK(t.lca(3, 4) == 0);
    CHECK(t.lca(2, 3) == 2);
    CHECK(t.next_red_sibling(1) == maybe_node{2});
    CHECK(t.next_red_sibling(2) == std::nullopt);
    CHECK(t.next_red_sibling(3) == std::nullopt);
    CHECK(t.level_ancestor(3, 1) == 2);
    CHECK(t.rightmost_child(0) == maybe_node{4});
    CHECK(t.rightmost_child(3) == std::nullopt);
    CHECK(t.child_rank(4) == 3);
}

TEST_CASE("empty array gives the root-only tree") {
    const auto t = ColoredLrmTree::build(ValueArray{});
    CHECK(t.size() == 0);
    CHECK(t.subtree_size(0) == 1);
    CHECK(t.degree(0) == 0);
    CHECK_THROWS_AS((void)t.parent(0), DomainError);
    CHECK(t == ColoredLrmTree{});
}

TEST_CASE("kernel rejects invalid arguments") {
    const auto t = ColoredLrmTree::build(ValueArray({2, 1, 3, 1}));
    CHECK_THROWS_AS((void)t.parent(5), DomainError);
    CHECK_THROWS_AS((void)t.ith_child(0, 0), DomainError);
    CHECK_THROWS_AS((void)t.ith_child(0, 4), DomainError);
    CHECK_THROWS_AS((void)t.level_ancestor(3, 3), DomainError);
    CHECK_THROWS_AS((void)t.child_rank(0), DomainError);
}

TEST_CASE("from_parents rejects malformed trees") {
    CHECK_THROWS_AS(ColoredLrmTree::from_parents({0, 0, 0}, {false, true, false}), IntegrityError);
    CHECK_THROWS_AS(ColoredLrmTree::from_parents({0, 0, 2}, {false, false, false}), IntegrityError);
    CHECK_THROWS_AS(ColoredLrmTree::from_parents({0, 0, 0, 1}, {false, false, false, false}), IntegrityError);
}

TEST_CASE("built trees satisfy the structural properties") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = rng() % 60;
        std::vector<value_t> v(n);
        for (auto& x : v) x = static_cast<value_t>(rng() % 5);
        const ValueArray a(v);
        const auto t = ColoredLrmTree::build(a);
        for (node_t i = 1; i <= n; ++i) {
            REQUIRE(t.parent(i) == psv_scan(a, i));
            if (t.parent(i) >= 1) REQUIRE(a.at(t.parent(i)) < a.at(i));
        }
        for (node_t u = 0; u <= n; ++u) {
            const auto c = t.children(u);
            REQUIRE(!(c.size() > 0 && t.is_red(c[0])));
            for (std::size_t j = 1; j < c.size(); ++j) {
                REQUIRE(a.at(c[j]) <= a.at(c[j - 1]));
                REQUIRE(t.is_red(c[j]) == (a.at(c[j]) < a.at(c[j - 1])));
            }
            // subtrees are label intervals
            std::size_t last = u;
            for (node_t w = u + 1; w <= n && t.lca(u, w) == u; ++w) last = w;
            REQUIRE(t.subtree_size(u) == last - u + 1);
        }
    }
}
