#pragma once

#include <span>
#include <vector>

#include "clrm/oracle.hpp"
#include "clrm/types.hpp"

namespace clrm {

/// Explicit Colored LRM-Tree on nodes 0..n. Node i (i >= 1) hangs below the
/// previous smaller value of position i; labels are preorder numbers; a node is
/// red iff it is strictly smaller than its left sibling.
///
/// This is the reference navigation kernel. Ancestor queries walk parent
/// pointers, so lca and level_ancestor cost O(depth).
class ColoredLrmTree {
public:
    ColoredLrmTree() : ColoredLrmTree(std::vector<node_t>{0}, std::vector<bool>{false}) {}

    static ColoredLrmTree build(const ValueArray& a);

    /// Builds from a parent array (parent[0] is ignored) and red flags. Throws
    /// IntegrityError unless parent[i] < i, labels are preorder numbers and no
    /// first child or root is red.
    static ColoredLrmTree from_parents(std::vector<node_t> parent, std::vector<bool> red);

    /// Number of non-root nodes (array length).
    [[nodiscard]] std::size_t size() const noexcept { return parent_.size() - 1; }

    [[nodiscard]] node_t parent(node_t v) const;
    [[nodiscard]] std::size_t depth(node_t v) const;
    [[nodiscard]] std::size_t subtree_size(node_t v) const;
    [[nodiscard]] node_t lca(node_t u, node_t v) const;
    [[nodiscard]] node_t level_ancestor(node_t v, std::size_t d) const;
    [[nodiscard]] node_t ith_child(node_t v, std::size_t i) const;
    [[nodiscard]] std::size_t child_rank(node_t v) const;
    [[nodiscard]] std::size_t degree(node_t v) const;
    [[nodiscard]] maybe_node rightmost_child(node_t v) const;
    [[nodiscard]] maybe_node next_red_sibling(node_t v) const;
    [[nodiscard]] bool is_red(node_t v) const;
    /// Red siblings at or before v in sibling order (v included when red).
    [[nodiscard]] std::size_t red_rank(node_t v) const;
    /// k-th red child of p (1-based), none when p has fewer red children.
    [[nodiscard]] maybe_node red_select(node_t p, std::size_t k) const;

    [[nodiscard]] std::span<const node_t> children(node_t v) const;

    friend bool operator==(const ColoredLrmTree& x, const ColoredLrmTree& y) {
        return x.parent_ == y.parent_ && x.red_ == y.red_;
    }

private:
    ColoredLrmTree(std::vector<node_t> parent, std::vector<bool> red);
    void check(node_t v) const;

    std::vector<node_t> parent_;
    std::vector<bool> red_;
    std::vector<std::size_t> child_begin_;
    std::vector<node_t> children_;
    std::vector<std::uint32_t> child_rank_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> size_;
};

}  // namespace clrm
