#pragma once

#include <vector>

#include "clrm/lrm_tree.hpp"
#include "clrm/types.hpp"

namespace clrm {

/// Exact enumeration arithmetic. 128 bits hold every count up to kMaxCodecSize.
using code_t = unsigned __int128;

inline constexpr std::size_t kMaxCodecSize = 40;
inline constexpr std::size_t kMaxWordCodeSize = 24;  // C[24] < 2^63

/// Number of bits of an enumeration code for a tree family with `count` members.
std::size_t code_bits(code_t count) noexcept;

/// Counts of Schröder trees (ordered trees whose non-first children carry a
/// free red/blue color) and the forests they decompose into.
///
///   trees[m]   trees on m nodes; trees[m] = forests[m-1] for m >= 2
///   forests[m] forests on m nodes, first root blue, later roots free
struct SchroederCounts {
    std::size_t max_n = 0;
    std::vector<code_t> trees;
    std::vector<code_t> forests;

    static SchroederCounts compute(std::size_t max_n);
};

/// Rank/unrank bijection between Schröder trees on m nodes and [0, trees[m]).
///
/// Enumeration order: a tree is its root plus the forest of child subtrees. A
/// forest is ordered by the size of its first tree, then by the rank of that
/// tree, then by the color of the next root (blue before red), then by the rank
/// of the remaining forest.
class SchroederCodec {
public:
    explicit SchroederCodec(std::size_t max_n = kMaxCodecSize);

    [[nodiscard]] const SchroederCounts& counts() const noexcept { return counts_; }
    [[nodiscard]] std::size_t max_size() const noexcept { return counts_.max_n; }
    [[nodiscard]] code_t count(std::size_t m) const;

    /// Trees are given as preorder parent arrays (parent[0] ignored) plus red flags.
    [[nodiscard]] code_t rank(std::span<const node_t> parent, const std::vector<bool>& red) const;
    void unrank(std::size_t m, code_t r, std::vector<node_t>& parent, std::vector<bool>& red) const;

    [[nodiscard]] code_t rank(const ColoredLrmTree& t) const;
    [[nodiscard]] ColoredLrmTree unrank(std::size_t m, code_t r) const;

private:
    // offset_[M][k]: forests of size M whose first tree is smaller than k nodes
    [[nodiscard]] code_t offset(std::size_t total, std::size_t first) const { return offset_[total][first]; }
    [[nodiscard]] code_t free_forests(std::size_t m) const { return m == 0 ? 1 : 2 * counts_.forests[m]; }

    SchroederCounts counts_;
    std::vector<std::vector<code_t>> offset_;
};

/// Process-wide codec covering every supported micro-tree size.
const SchroederCodec& default_codec();

/// An array whose Colored LRM-Tree is t: the rightmost child of v gets
/// value(v)+1 (0 under the root) and values grow right to left by one at every
/// red sibling.
ValueArray canonical_array(const ColoredLrmTree& t);

}  // namespace clrm
