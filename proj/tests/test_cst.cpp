#include <algorithm>
#include <random>

#include "clrm/cst.hpp"
#include "cst_compare.hpp"
#include "doctest.h"

using namespace clrm;

namespace {

std::vector<std::uint64_t> naive_sa(const std::string& t) {
    std::vector<std::uint64_t> sa(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) sa[i] = i;
    std::sort(sa.begin(), sa.end(), [&](std::uint64_t a, std::uint64_t b) {
        return std::string_view(t).substr(a) < std::string_view(t).substr(b);
    });
    std::vector<std::uint64_t> out{0};
    for (const auto s : sa) out.push_back(s + 1);
    return out;
}

std::string random_text(std::mt19937_64& rng, std::size_t n, int sigma) {
    std::string t(n, 'a');
    for (auto& c : t) c = static_cast<char>('a' + static_cast<int>(rng() % static_cast<std::uint64_t>(sigma)));
    return t;
}

}  // namespace

TEST_CASE("suffix and LCP arrays of aab") {
    CHECK(suffix_array("aab") == std::vector<std::uint64_t>{0, 1, 2, 3});
    CHECK(lcp_array("aab", suffix_array("aab")) == std::vector<value_t>{0, -1, 1, 0});
    CHECK(suffix_array("aaaa") == std::vector<std::uint64_t>{0, 4, 3, 2, 1});
}

TEST_CASE("suffix array matches a naive sort") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string t = random_text(rng, 1 + rng() % 400, 1 + static_cast<int>(rng() % 4));
        REQUIRE(suffix_array(t) == naive_sa(t));
        const auto sa = suffix_array(t);
        const auto lcp = lcp_array(t, sa);
        for (std::size_t i = 2; i <= t.size(); ++i) {
            std::size_t h = 0;
            while (sa[i - 1] - 1 + h < t.size() && sa[i] - 1 + h < t.size() && t[sa[i - 1] - 1 + h] == t[sa[i] - 1 + h]) ++h;
            REQUIRE(lcp[i] == static_cast<value_t>(h));
        }
    }
    std::string bytes;
    for (int c = 255; c >= 0; --c) bytes.push_back(static_cast<char>(c));
    bytes += bytes;
    CHECK(suffix_array(bytes) == naive_sa(bytes));
}

TEST_CASE("aab operations") {
    const auto cst = CstIndex::build("aab");
    CHECK(cst.parent({1, 1}) == maybe_cst_node{CstNode{1, 2}});
    CHECK(cst.string_depth({1, 2}) == 1);
    CHECK(cst.next_sibling({1, 2}) == maybe_cst_node{CstNode{3, 3}});
    CHECK(cst.next_sibling({3, 3}) == std::nullopt);
    CHECK(cst.parent(cst.root()) == std::nullopt);
    CHECK(cst.child(cst.root(), 'b') == maybe_cst_node{CstNode{3, 3}});
    CHECK(cst.child(cst.root(), 'c') == std::nullopt);
    const NaiveSuffixTree naive("aab");
    CHECK(naive.node_count() == 5);
    CHECK(naive.nodes() == std::vector<CstNode>{{1, 3}, {1, 2}, {1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("mississippi suffix link") {
    const std::string text = "mississippi";
    const auto cst = CstIndex::build(text);
    // locate "issi" and "ssi" by walking child()
    auto walk = [&](const std::string& s) {
        CstNode v = cst.root();
        while (cst.string_depth(v) < s.size()) v = *cst.child(v, static_cast<std::uint8_t>(s[cst.string_depth(v)]));
        return v;
    };
    const CstNode issi = walk("issi");
    const CstNode ssi = walk("ssi");
    CHECK(cst.string_depth(issi) == 4);
    CHECK(cst.suffix_link(issi) == maybe_cst_node{ssi});
    std::string err;
    CHECK_MESSAGE(testing::cst_mismatches(text, &err) == 0, err);
}

TEST_CASE("single-symbol texts contract the unary root") {
    for (const std::string text : {"a", "aa", "aaaaaaa"}) {
        std::string err;
        CHECK_MESSAGE(testing::cst_mismatches(text, &err) == 0, err);
    }
    const auto one = CstIndex::build("z");
    CHECK(one.root().is_leaf());
    CHECK(one.string_depth(one.root()) == 1);
    CHECK(NaiveSuffixTree("z").node_count() == 2);
}

TEST_CASE("random texts match the naive suffix tree") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int sigma = trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 4 : 26);
        const std::string t = random_text(rng, 1 + rng() % 300, sigma);
        std::string err;
        REQUIRE_MESSAGE(testing::cst_mismatches(t, &err, 1 + rng() % 10) == 0, err);
    }
}

TEST_CASE("invalid nodes and inputs are rejected") {
    const auto cst = CstIndex::build("banana");
    CHECK_THROWS_AS((void)cst.parent({3, 4}), DomainError);
    CHECK_THROWS_AS((void)cst.parent({0, 1}), DomainError);
    CHECK_THROWS_AS((void)cst.parent({1, 7}), DomainError);
    CHECK_THROWS_AS((void)cst.leaf_label(cst.root()), DomainError);
    CHECK_THROWS_AS(CstIndex::build(""), DomainError);
    CHECK_THROWS_AS(NaiveSuffixTree(std::string(20, 'x'), 10), ConfigError);
}
