#include <cmath>
#include <functional>
#include <set>

#include "clrm/schroeder.hpp"
#include "doctest.h"

using namespace clrm;

namespace {

// All ordered trees on m nodes as preorder parent arrays.
void ordered_trees(std::size_t m, std::vector<node_t>& parent, std::vector<node_t>& path,
                   const std::function<void()>& emit) {
    if (parent.size() == m) {
        emit();
        return;
    }
    // the next node hangs below any node on the current rightmost path
    const std::vector<node_t> saved = path;
    for (std::size_t k = 0; k < saved.size(); ++k) {
        const node_t p = saved[k];
        parent.push_back(p);
        path.assign(saved.begin(), saved.begin() + static_cast<std::ptrdiff_t>(k) + 1);
        path.push_back(parent.size() - 1);
        ordered_trees(m, parent, path, emit);
        parent.pop_back();
    }
    path = saved;
}

// Counts Schröder trees by brute force: every coloring with blue roots and
// first children.
std::size_t brute_count(std::size_t m) {
    std::size_t total = 0;
    std::vector<node_t> parent{0}, path{0};
    ordered_trees(m, parent, path, [&] {
        std::vector<bool> first(m, true);
        std::size_t free = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (first[parent[i]]) {
                first[parent[i]] = false;
            } else {
                ++free;
            }
        }
        total += std::size_t{1} << free;
    });
    return total;
}

}  // namespace

TEST_CASE("little Schröder numbers") {
    const auto c = SchroederCounts::compute(8);
    const std::vector<code_t> expect{1, 1, 3, 11, 45, 197, 903, 4279};
    for (std::size_t m = 1; m <= 8; ++m) CHECK(c.trees[m] == expect[m - 1]);
    for (std::size_t m = 1; m <= 6; ++m) CHECK(brute_count(m) == static_cast<std::size_t>(c.trees[m]));
}

TEST_CASE("counts stay below rho^m") {
    const auto& c = default_codec().counts();
    const double rho = 3.0 + 2.0 * std::sqrt(2.0);
    for (std::size_t m = 1; m <= c.max_n; ++m) {
        CHECK(static_cast<double>(c.trees[m]) <= std::pow(rho, static_cast<double>(m)));
    }
    CHECK(c.trees[kMaxWordCodeSize] < (code_t{1} << 63));
}

TEST_CASE("rank and unrank are inverse bijections") {
    const SchroederCodec& codec = default_codec();
    for (std::size_t m = 1; m <= 8; ++m) {
        const auto count = static_cast<std::size_t>(codec.count(m));
        std::set<std::pair<std::vector<node_t>, std::vector<bool>>> seen;
        for (std::size_t r = 0; r < count; ++r) {
            const ColoredLrmTree t = codec.unrank(m, r);
            REQUIRE(t.size() + 1 == m);
            REQUIRE(codec.rank(t) == r);
            std::vector<node_t> p(m, 0);
            std::vector<bool> red(m, false);
            for (node_t v = 1; v < m; ++v) {
                p[v] = t.parent(v);
                red[v] = t.is_red(v);
            }
            seen.emplace(p, red);
            REQUIRE(ColoredLrmTree::build(canonical_array(t)) == t);
        }
        CHECK(seen.size() == count);
    }
}

TEST_CASE("wide codes round-trip") {
    const SchroederCodec& codec = default_codec();
    const code_t top = codec.count(40) - 1;
    for (const code_t r : {code_t{0}, code_t{12345}, top / 3, top}) {
        REQUIRE(codec.rank(codec.unrank(40, r)) == r);
    }
}

TEST_CASE("codec rejects invalid input") {
    const SchroederCodec& codec = default_codec();
    CHECK_THROWS_AS((void)codec.unrank(3, 3), DomainError);
    CHECK_THROWS_AS((void)codec.unrank(0, 0), DomainError);
    const std::vector<node_t> parent{0, 0};
    CHECK_THROWS_AS((void)codec.rank(parent, std::vector<bool>{false, true}), DomainError);
}
