#pragma once

#include <span>
#include <vector>

#include "clrm/types.hpp"

namespace clrm {

/// 1-indexed view of a value sequence. Positions 0 and n+1 read as -infinity
/// and are never stored.
class ValueArray {
public:
    ValueArray() = default;
    explicit ValueArray(std::vector<value_t> values) : values_(std::move(values)) {}

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] bool empty() const noexcept { return values_.empty(); }

    /// Stored value at logical position i, 1 <= i <= n.
    [[nodiscard]] value_t at(std::size_t i) const {
        if (i == 0 || i > values_.size()) throw DomainError("ValueArray::at: position out of [1,n]");
        return values_[i - 1];
    }

    /// Strict comparison a[i] < a[j] honoring the sentinels at 0 and n+1.
    [[nodiscard]] bool less(std::size_t i, std::size_t j) const noexcept {
        const bool i_sentinel = i == 0 || i == values_.size() + 1;
        const bool j_sentinel = j == 0 || j == values_.size() + 1;
        if (j_sentinel) return false;
        if (i_sentinel) return true;
        return values_[i - 1] < values_[j - 1];
    }

    [[nodiscard]] std::span<const value_t> values() const noexcept { return values_; }
    [[nodiscard]] ValueArray reversed() const;

    friend bool operator==(const ValueArray&, const ValueArray&) = default;

private:
    std::vector<value_t> values_;
};

// Brute-force scans, O(n) per query. These are the reference answers every
// other component is checked against.

node_t psv_scan(const ValueArray& a, std::size_t i);
node_t nsv_scan(const ValueArray& a, std::size_t i);
/// Position of the rightmost minimum of a[i..j].
node_t rmq_scan(const ValueArray& a, std::size_t i, std::size_t j);

/// Sparse-table oracle for arrays too large for the scans: O(n log n) words,
/// O(1) rmq and O(log n) psv/nsv by descending the table. Shares no code with
/// the tree-based index.
class SparseTableOracle {
public:
    explicit SparseTableOracle(const ValueArray& a);

    [[nodiscard]] node_t psv(std::size_t i) const;
    [[nodiscard]] node_t nsv(std::size_t i) const;
    [[nodiscard]] node_t rmq(std::size_t i, std::size_t j) const;

private:
    // position of the rightmost minimum among two candidates
    [[nodiscard]] std::size_t pick(std::size_t p, std::size_t q) const noexcept;
    [[nodiscard]] value_t minimum(std::size_t i, std::size_t j) const;

    std::vector<value_t> v_;
    std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace clrm
