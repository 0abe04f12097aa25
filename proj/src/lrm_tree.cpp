#include "clrm/lrm_tree.hpp"

#include <limits>

namespace clrm {

ColoredLrmTree ColoredLrmTree::build(const ValueArray& a) {
    const std::size_t n = a.size();
    if (n >= std::numeric_limits<std::uint32_t>::max()) throw ConfigError("ColoredLrmTree: array too large");
    const auto vals = a.values();
    std::vector<node_t> parent(n + 1, 0);
    std::vector<bool> red(n + 1, false);
    std::vector<node_t> last_child(n + 1, 0);
    std::vector<node_t> stack{0};
    for (std::size_t i = 1; i <= n; ++i) {
        const value_t x = vals[i - 1];
        // keep only strictly smaller values: the top is then the previous smaller value
        while (stack.back() != 0 && vals[stack.back() - 1] >= x) stack.pop_back();
        const node_t p = stack.back();
        parent[i] = p;
        if (const node_t left = last_child[p]; left != 0) red[i] = x < vals[left - 1];
        last_child[p] = i;
        stack.push_back(i);
    }
    return ColoredLrmTree(std::move(parent), std::move(red));
}

ColoredLrmTree ColoredLrmTree::from_parents(std::vector<node_t> parent, std::vector<bool> red) {
    if (parent.empty() || parent.size() != red.size()) throw IntegrityError("from_parents: size mismatch");
    if (red[0]) throw IntegrityError("from_parents: root must be blue");
    const std::size_t n = parent.size() - 1;
    // Preorder labels hold iff every parent is on the current root-to-(i-1) path.
    std::vector<node_t> path{0};
    std::vector<bool> has_child(n + 1, false);
    for (std::size_t i = 1; i <= n; ++i) {
        if (parent[i] >= i) throw IntegrityError("from_parents: parent label must be smaller");
        while (!path.empty() && path.back() != parent[i]) path.pop_back();
        if (path.empty()) throw IntegrityError("from_parents: labels are not preorder numbers");
        if (!has_child[parent[i]] && red[i]) throw IntegrityError("from_parents: first child must be blue");
        has_child[parent[i]] = true;
        path.push_back(i);
    }
    parent[0] = 0;
    return ColoredLrmTree(std::move(parent), std::move(red));
}

ColoredLrmTree::ColoredLrmTree(std::vector<node_t> parent, std::vector<bool> red)
    : parent_(std::move(parent)), red_(std::move(red)) {
    const std::size_t count = parent_.size();
    child_begin_.assign(count + 1, 0);
    for (std::size_t i = 1; i < count; ++i) ++child_begin_[parent_[i] + 1];
    for (std::size_t i = 0; i < count; ++i) child_begin_[i + 1] += child_begin_[i];
    children_.resize(count - 1);
    child_rank_.assign(count, 0);
    std::vector<std::size_t> fill(child_begin_.begin(), child_begin_.end() - 1);
    for (std::size_t i = 1; i < count; ++i) {
        const node_t p = parent_[i];
        child_rank_[i] = static_cast<std::uint32_t>(fill[p] - child_begin_[p] + 1);
        children_[fill[p]++] = i;
    }
    depth_.assign(count, 0);
    for (std::size_t i = 1; i < count; ++i) depth_[i] = depth_[parent_[i]] + 1;
    size_.assign(count, 1);
    for (std::size_t i = count - 1; i > 0; --i) size_[parent_[i]] += size_[i];
}

void ColoredLrmTree::check(node_t v) const {
    if (v >= parent_.size()) throw DomainError("ColoredLrmTree: node label out of range");
}

node_t ColoredLrmTree::parent(node_t v) const {
    check(v);
    if (v == 0) throw DomainError("ColoredLrmTree::parent: root has no parent");
    return parent_[v];
}

std::size_t ColoredLrmTree::depth(node_t v) const {
    check(v);
    return depth_[v];
}

std::size_t ColoredLrmTree::subtree_size(node_t v) const {
    check(v);
    return size_[v];
}

node_t ColoredLrmTree::lca(node_t u, node_t v) const {
    check(u);
    check(v);
    while (depth_[u] > depth_[v]) u = parent_[u];
    while (depth_[v] > depth_[u]) v = parent_[v];
    while (u != v) {
        u = parent_[u];
        v = parent_[v];
    }
    return u;
}

node_t ColoredLrmTree::level_ancestor(node_t v, std::size_t d) const {
    check(v);
    if (d > depth_[v]) throw DomainError("ColoredLrmTree::level_ancestor: depth exceeds node depth");
    while (depth_[v] > d) v = parent_[v];
    return v;
}

std::span<const node_t> ColoredLrmTree::children(node_t v) const {
    check(v);
    return std::span<const node_t>(children_).subspan(child_begin_[v], child_begin_[v + 1] - child_begin_[v]);
}

std::size_t ColoredLrmTree::degree(node_t v) const {
    check(v);
    return child_begin_[v + 1] - child_begin_[v];
}

node_t ColoredLrmTree::ith_child(node_t v, std::size_t i) const {
    if (i < 1 || i > degree(v)) throw DomainError("ColoredLrmTree::ith_child: rank out of [1,degree]");
    return children_[child_begin_[v] + i - 1];
}

std::size_t ColoredLrmTree::child_rank(node_t v) const {
    check(v);
    if (v == 0) throw DomainError("ColoredLrmTree::child_rank: root has no siblings");
    return child_rank_[v];
}

maybe_node ColoredLrmTree::rightmost_child(node_t v) const {
    const std::size_t d = degree(v);
    if (d == 0) return std::nullopt;
    return children_[child_begin_[v] + d - 1];
}

maybe_node ColoredLrmTree::next_red_sibling(node_t v) const {
    check(v);
    if (v == 0) return std::nullopt;
    const node_t p = parent_[v];
    for (std::size_t k = child_begin_[p] + child_rank_[v]; k < child_begin_[p + 1]; ++k) {
        if (red_[children_[k]]) return children_[k];
    }
    return std::nullopt;
}

bool ColoredLrmTree::is_red(node_t v) const {
    check(v);
    return red_[v];
}

std::size_t ColoredLrmTree::red_rank(node_t v) const {
    check(v);
    if (v == 0) throw DomainError("ColoredLrmTree::red_rank: root has no siblings");
    const node_t p = parent_[v];
    std::size_t count = 0;
    for (std::size_t k = child_begin_[p]; k < child_begin_[p] + child_rank_[v]; ++k) count += red_[children_[k]];
    return count;
}

maybe_node ColoredLrmTree::red_select(node_t p, std::size_t k) const {
    check(p);
    if (k == 0) throw DomainError("ColoredLrmTree::red_select: rank is 1-based");
    for (std::size_t j = child_begin_[p]; j < child_begin_[p + 1]; ++j) {
        if (red_[children_[j]] && --k == 0) return children_[j];
    }
    return std::nullopt;
}

}  // namespace clrm
