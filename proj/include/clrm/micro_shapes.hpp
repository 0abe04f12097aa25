#pragma once

#include <memory>
#include <vector>

#include "clrm/schroeder.hpp"

namespace clrm {

/// Micro-trees up to this size are answered from precomputed tables; larger
/// ones are decoded from their enumeration code on each access.
inline constexpr std::size_t kMaxTabulatedSize = 10;
inline constexpr std::uint8_t kNoLocal = 0xFF;

/// Read-only view of one decoded micro-tree: per local node (local preorder
/// 0..m-1) its parent, depth, subtree size, children and red-sibling data.
class MicroView {
public:
    MicroView(const std::uint8_t* data, unsigned m) : p_(data), m_(m) {}
    explicit MicroView(std::shared_ptr<const std::vector<std::uint8_t>> owned, unsigned m)
        : p_(owned->data()), m_(m), owned_(std::move(owned)) {}

    [[nodiscard]] unsigned size() const noexcept { return m_; }
    [[nodiscard]] unsigned parent(unsigned l) const noexcept { return p_[l]; }
    [[nodiscard]] unsigned depth(unsigned l) const noexcept { return p_[m_ + l]; }
    [[nodiscard]] unsigned subtree_size(unsigned l) const noexcept { return p_[2 * m_ + l]; }
    [[nodiscard]] unsigned degree(unsigned l) const noexcept { return p_[3 * m_ + l]; }
    [[nodiscard]] unsigned child_rank(unsigned l) const noexcept { return p_[4 * m_ + l]; }
    [[nodiscard]] bool red(unsigned l) const noexcept { return p_[5 * m_ + l] != 0; }
    /// Next red sibling, kNoLocal when none.
    [[nodiscard]] unsigned next_red(unsigned l) const noexcept { return p_[6 * m_ + l]; }
    /// Red siblings at or before l.
    [[nodiscard]] unsigned red_prefix(unsigned l) const noexcept { return p_[7 * m_ + l]; }
    /// i-th child (1-based).
    [[nodiscard]] unsigned ith_child(unsigned l, unsigned i) const noexcept { return p_[9 * m_ + 1 + p_[8 * m_ + l] + i - 1]; }

    [[nodiscard]] bool is_ancestor(unsigned a, unsigned b) const noexcept { return a <= b && b < a + subtree_size(a); }

    [[nodiscard]] unsigned ancestor_at(unsigned l, unsigned d) const noexcept {
        while (depth(l) > d) l = parent(l);
        return l;
    }

    [[nodiscard]] unsigned lca(unsigned a, unsigned b) const noexcept {
        while (depth(a) > depth(b)) a = parent(a);
        while (depth(b) > depth(a)) b = parent(b);
        while (a != b) {
            a = parent(a);
            b = parent(b);
        }
        return a;
    }

    /// k-th red child of l (1-based), kNoLocal when none.
    [[nodiscard]] unsigned red_select(unsigned l, unsigned k) const noexcept {
        for (unsigned i = 1; i <= degree(l); ++i) {
            const unsigned c = ith_child(l, i);
            if (red(c) && --k == 0) return c;
        }
        return kNoLocal;
    }

    static constexpr std::size_t record_bytes(std::size_t m) noexcept { return 10 * m + 1; }
    /// Writes the record of the tree given by a preorder parent array and colors.
    static void fill(std::span<const node_t> parent, const std::vector<bool>& red, std::uint8_t* out);

private:
    const std::uint8_t* p_;
    unsigned m_;
    std::shared_ptr<const std::vector<std::uint8_t>> owned_;
};

/// Lookup tables for every Schröder tree of size <= B, keyed by (size, code).
/// Tables depend only on B; indices with equal B share one instance.
class ShapeTable {
public:
    explicit ShapeTable(std::size_t micro_size);

    static std::shared_ptr<const ShapeTable> for_micro_size(std::size_t micro_size);

    [[nodiscard]] std::size_t micro_size() const noexcept { return micro_size_; }
    [[nodiscard]] MicroView view(std::size_t m, code_t code) const;
    /// Bits held by the tables.
    [[nodiscard]] std::size_t bits() const noexcept;

private:
    std::size_t micro_size_;
    std::size_t tabulated_;
    std::vector<std::vector<std::uint8_t>> records_;  // by size
};

}  // namespace clrm
