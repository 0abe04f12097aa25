#pragma once

#include <algorithm>
#include <concepts>
#include <utility>
#include <vector>

#include "clrm/lrm_tree.hpp"
#include "clrm/succinct.hpp"
#include "clrm/types.hpp"

namespace clrm {

/// Operations psv/nsv/rmq need from a Colored LRM-Tree backend.
template <class K>
concept NavigationKernel = requires(const K& k, node_t v, std::size_t i) {
    { k.size() } -> std::convertible_to<std::size_t>;
    { k.parent(v) } -> std::convertible_to<node_t>;
    { k.depth(v) } -> std::convertible_to<std::size_t>;
    { k.subtree_size(v) } -> std::convertible_to<std::size_t>;
    { k.lca(v, v) } -> std::convertible_to<node_t>;
    { k.level_ancestor(v, i) } -> std::convertible_to<node_t>;
    { k.ith_child(v, i) } -> std::convertible_to<node_t>;
    { k.child_rank(v) } -> std::convertible_to<std::size_t>;
    { k.rightmost_child(v) } -> std::same_as<maybe_node>;
    { k.next_red_sibling(v) } -> std::same_as<maybe_node>;
    { k.is_red(v) } -> std::convertible_to<bool>;
    { k.red_rank(v) } -> std::convertible_to<std::size_t>;
    { k.red_select(v, i) } -> std::same_as<maybe_node>;
};

/// psv, nsv and rmq answered from the tree alone; holds no array values.
template <NavigationKernel Kernel>
class PsvNsvRmqIndex {
public:
    PsvNsvRmqIndex() = default;
    explicit PsvNsvRmqIndex(Kernel kernel) : kernel_(std::move(kernel)) {}

    [[nodiscard]] std::size_t size() const noexcept { return kernel_.size(); }
    [[nodiscard]] const Kernel& kernel() const noexcept { return kernel_; }

    [[nodiscard]] node_t psv(std::size_t i) const {
        check(i);
        return kernel_.parent(i);
    }

    [[nodiscard]] node_t nsv(std::size_t i) const {
        check(i);
        if (const maybe_node r = kernel_.next_red_sibling(i)) return *r;
        const node_t z = *kernel_.rightmost_child(kernel_.parent(i));
        return z + kernel_.subtree_size(z);
    }

    /// Rightmost position of the minimum of [i, j].
    [[nodiscard]] node_t rmq(std::size_t i, std::size_t j) const {
        check(i, j);
        const node_t l = kernel_.lca(i, j);
        if (l == i) return i;
        return kernel_.level_ancestor(j, kernel_.depth(l) + 1);
    }

    /// Leftmost position of the minimum of [i, j]. Equal minima are a blue run of
    /// siblings ending at the rightmost one.
    [[nodiscard]] node_t rmq_leftmost(std::size_t i, std::size_t j) const {
        check(i, j);
        const node_t p = rmq(i, j);
        if (p == i) return p;
        const node_t l = kernel_.parent(p);
        node_t run = p;
        if (!kernel_.is_red(p)) {
            const std::size_t reds = kernel_.red_rank(p);
            run = reds == 0 ? kernel_.ith_child(l, 1) : *kernel_.red_select(l, reds);
        }
        const node_t c = kernel_.level_ancestor(i, kernel_.depth(l) + 1);
        const node_t first = c == i ? c : kernel_.ith_child(l, kernel_.child_rank(c) + 1);
        return std::max(first, run);
    }

private:
    void check(std::size_t i) const {
        if (i < 1 || i > size()) throw DomainError("query index out of [1,n]");
    }
    void check(std::size_t i, std::size_t j) const {
        check(i);
        check(j);
        if (i > j) throw DomainError("rmq: empty range");
    }

    Kernel kernel_;
};

using ExplicitQueryIndex = PsvNsvRmqIndex<ColoredLrmTree>;
using SuccinctQueryIndex = PsvNsvRmqIndex<SuccinctLrmIndex>;

template <class Q>
concept PsvNsvProvider = requires(const Q& q, std::size_t i) {
    { q.psv(i) } -> std::convertible_to<node_t>;
    { q.nsv(i) } -> std::convertible_to<node_t>;
};

/// Rebuilds the Colored LRM-Tree of an array of length n from psv/nsv answers
/// only. Throws IntegrityError when the answers fit no array.
template <PsvNsvProvider Q>
ColoredLrmTree reconstruct(const Q& q, std::size_t n) {
    std::vector<node_t> parent(n + 1, 0);
    std::vector<bool> red(n + 1, false);
    std::vector<bool> exists(n + 1, false);
    exists[0] = true;

    auto ask_psv = [&](node_t v) {
        const node_t p = q.psv(v);
        if (p >= v) throw IntegrityError("reconstruct: psv answer not left of its argument");
        return p;
    };

    struct Gap {
        node_t a, b;
    };
    std::vector<Gap> todo;
    if (n > 0) todo.push_back({1, n});
    std::vector<node_t> path;
    while (!todo.empty()) {
        const auto [a, b] = todo.back();
        todo.pop_back();
        // path from b up to the first node that already exists
        path.assign(1, b);
        node_t u = ask_psv(b);
        while (u >= a) {
            path.push_back(u);
            u = ask_psv(u);
        }
        if (!exists[u]) throw IntegrityError("reconstruct: psv chain skips its ancestor");
        for (std::size_t k = 0; k < path.size(); ++k) {
            exists[path[k]] = true;
            parent[path[k]] = k + 1 < path.size() ? path[k + 1] : u;
        }
        // b+1 exists and, if it is a child of u, it is the right neighbour of the new subtree
        const node_t v = path.back();
        if (b < n && exists[b + 1] && parent[b + 1] == u) {
            const node_t s = q.nsv(v);
            if (s <= v || s > n + 1) throw IntegrityError("reconstruct: nsv answer out of range");
            red[b + 1] = s == b + 1;
        }
        // gaps between consecutive path nodes; the leftmost ends on top of the stack
        for (std::size_t k = 0; k < path.size(); ++k) {
            const node_t lo = (k + 1 < path.size() ? path[k + 1] : a - 1) + 1;
            if (lo < path[k]) todo.push_back({lo, path[k] - 1});
        }
    }
    return ColoredLrmTree::from_parents(std::move(parent), std::move(red));
}

}  // namespace clrm
