#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clrm/queries.hpp"

namespace clrm {

/// Suffix array (1-based positions, index 0 unused) of a byte string; a
/// virtual terminator sorts below every byte.
std::vector<std::uint64_t> suffix_array(std::string_view text);

/// LCP array for `sa`, 1-based, with lcp[1] = -1 (index 0 unused).
std::vector<value_t> lcp_array(std::string_view text, const std::vector<std::uint64_t>& sa);

/// Suffix-tree node as an interval of suffix-array positions. Leaves have l == r.
struct CstNode {
    std::uint64_t l = 0;
    std::uint64_t r = 0;

    [[nodiscard]] bool is_leaf() const noexcept { return l == r; }
    friend bool operator==(const CstNode&, const CstNode&) = default;
    friend auto operator<=>(const CstNode&, const CstNode&) = default;
};

using maybe_cst_node = std::optional<CstNode>;

/// Compressed suffix tree: plain suffix and LCP arrays plus a psv/nsv/rmq index
/// over LCP. Navigation uses only psv, nsv and rmq on LCP; sa and lcp entries are
/// read for labels and string depths, the text only by child().
///
/// When the text is c^n the root [1,n] has string depth 1: the trie's unary
/// root is contracted into its only child.
class CstIndex {
public:
    static CstIndex build(std::string text, std::size_t micro_size = 0);
    /// Assembles a tree from stored parts; `lcp_index` must index `lcp`.
    static CstIndex from_parts(std::string text, std::vector<std::uint64_t> sa, std::vector<value_t> lcp,
                               SuccinctLrmIndex lcp_index);

    [[nodiscard]] std::size_t size() const noexcept { return text_.size(); }
    [[nodiscard]] const std::string& text() const noexcept { return text_; }
    [[nodiscard]] const std::vector<std::uint64_t>& sa() const noexcept { return sa_; }
    [[nodiscard]] const std::vector<std::uint64_t>& isa() const noexcept { return isa_; }
    [[nodiscard]] const std::vector<value_t>& lcp() const noexcept { return lcp_; }
    [[nodiscard]] const SuccinctQueryIndex& queries() const noexcept { return q_; }

    [[nodiscard]] CstNode root() const noexcept { return {1, text_.size()}; }
    [[nodiscard]] bool is_valid(CstNode v) const;
    [[nodiscard]] bool is_ancestor(CstNode u, CstNode v) const;
    [[nodiscard]] std::size_t leaf_count(CstNode v) const;
    [[nodiscard]] std::uint64_t leaf_label(CstNode v) const;
    [[nodiscard]] std::size_t string_depth(CstNode v) const;
    [[nodiscard]] maybe_cst_node parent(CstNode v) const;
    [[nodiscard]] maybe_cst_node first_child(CstNode v) const;
    [[nodiscard]] maybe_cst_node next_sibling(CstNode v) const;
    [[nodiscard]] maybe_cst_node suffix_link(CstNode v) const;
    [[nodiscard]] CstNode lca(CstNode u, CstNode v) const;
    [[nodiscard]] maybe_cst_node child(CstNode v, std::uint8_t a) const;

private:
    void check(CstNode v) const;
    [[nodiscard]] CstNode enclosing(std::size_t k) const;

    std::string text_;
    std::vector<std::uint64_t> sa_;
    std::vector<std::uint64_t> isa_;
    std::vector<value_t> lcp_;
    SuccinctQueryIndex q_;
};

/// Explicit suffix tree built by inserting every suffix into a compacted trie.
/// Test oracle for CstIndex; nodes are reported by their suffix-array interval.
class NaiveSuffixTree {
public:
    static constexpr std::size_t kDefaultMaxSize = 5000;

    explicit NaiveSuffixTree(std::string text, std::size_t max_size = kDefaultMaxSize);

    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_.size(); }
    /// All nodes in preorder (children in lexicographic order).
    [[nodiscard]] std::vector<CstNode> nodes() const;

    [[nodiscard]] CstNode root() const;
    [[nodiscard]] std::size_t leaf_count(CstNode v) const;
    [[nodiscard]] std::uint64_t leaf_label(CstNode v) const;
    [[nodiscard]] std::size_t string_depth(CstNode v) const;
    [[nodiscard]] maybe_cst_node parent(CstNode v) const;
    [[nodiscard]] maybe_cst_node first_child(CstNode v) const;
    [[nodiscard]] maybe_cst_node next_sibling(CstNode v) const;
    [[nodiscard]] maybe_cst_node suffix_link(CstNode v) const;
    [[nodiscard]] CstNode lca(CstNode u, CstNode v) const;
    [[nodiscard]] maybe_cst_node child(CstNode v, std::uint8_t a) const;
    [[nodiscard]] bool is_ancestor(CstNode u, CstNode v) const;

private:
    struct Node {
        std::uint64_t edge_start = 0;  // into text + terminator, 0-based
        std::uint64_t edge_len = 0;
        std::size_t depth = 0;       // string depth without the terminator
        std::int64_t parent = -1;
        std::vector<std::size_t> children;  // sorted by first edge symbol
        std::int64_t suffix = -1;    // 0-based start for leaves
        CstNode interval;
    };

    [[nodiscard]] int symbol(std::uint64_t p) const noexcept { return p == text_.size() ? -1 : static_cast<unsigned char>(text_[p]); }
    [[nodiscard]] std::size_t id(CstNode v) const;
    [[nodiscard]] CstNode interval(std::int64_t id) const { return nodes_[static_cast<std::size_t>(id)].interval; }
    /// Node whose path label is exactly text[start, start+len), if any.
    [[nodiscard]] std::optional<std::size_t> locate(std::uint64_t start, std::size_t len) const;

    std::string text_;
    std::vector<Node> nodes_;
    std::size_t root_ = 0;
    std::vector<std::size_t> by_interval_;  // node ids sorted by interval
};

}  // namespace clrm
