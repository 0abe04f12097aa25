#include "clrm/oracle.hpp"

#include <algorithm>
#include <bit>

namespace clrm {

ValueArray ValueArray::reversed() const {
    std::vector<value_t> r(values_.rbegin(), values_.rend());
    return ValueArray(std::move(r));
}

namespace {

void check_position(const ValueArray& a, std::size_t i, const char* what) {
    if (i < 1 || i > a.size()) throw DomainError(std::string(what) + ": index out of [1,n]");
}

}  // namespace

node_t psv_scan(const ValueArray& a, std::size_t i) {
    check_position(a, i, "psv_scan");
    for (std::size_t j = i - 1; j > 0; --j) {
        if (a.less(j, i)) return j;
    }
    return 0;
}

node_t nsv_scan(const ValueArray& a, std::size_t i) {
    check_position(a, i, "nsv_scan");
    for (std::size_t j = i + 1; j <= a.size(); ++j) {
        if (a.less(j, i)) return j;
    }
    return a.size() + 1;
}

node_t rmq_scan(const ValueArray& a, std::size_t i, std::size_t j) {
    if (i < 1 || j > a.size() || i > j) throw DomainError("rmq_scan: need 1 <= i <= j <= n");
    std::size_t best = i;
    for (std::size_t k = i + 1; k <= j; ++k) {
        if (!a.less(best, k)) best = k;  // ties move right
    }
    return best;
}

SparseTableOracle::SparseTableOracle(const ValueArray& a) : v_(a.values().begin(), a.values().end()) {
    const std::size_t n = v_.size();
    if (n == 0) return;
    table_.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
        const std::size_t half = std::size_t{1} << (k - 1);
        const auto& prev = table_[k - 1];
        std::vector<std::uint32_t> row(n - (std::size_t{1} << k) + 1);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] = static_cast<std::uint32_t>(pick(prev[i], prev[i + half]));
        table_.push_back(std::move(row));
    }
}

std::size_t SparseTableOracle::pick(std::size_t p, std::size_t q) const noexcept {
    if (v_[q] < v_[p]) return q;
    if (v_[p] < v_[q]) return p;
    return std::max(p, q);
}

node_t SparseTableOracle::rmq(std::size_t i, std::size_t j) const {
    if (i < 1 || j > v_.size() || i > j) throw DomainError("SparseTableOracle::rmq: need 1 <= i <= j <= n");
    const std::size_t lo = i - 1, len = j - i + 1;
    const std::size_t k = std::bit_width(len) - 1;
    return pick(table_[k][lo], table_[k][j - (std::size_t{1} << k)]) + 1;
}

value_t SparseTableOracle::minimum(std::size_t i, std::size_t j) const { return v_[rmq(i, j) - 1]; }

node_t SparseTableOracle::psv(std::size_t i) const {
    if (i < 1 || i > v_.size()) throw DomainError("SparseTableOracle::psv: index out of [1,n]");
    const value_t x = v_[i - 1];
    // Largest j < i with v[j] < x: shrink a window [lo, i-1] whose minimum is < x.
    if (i == 1 || minimum(1, i - 1) >= x) return 0;
    std::size_t lo = 1, hi = i - 1;  // invariant: min(v[lo..i-1]) < x
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (minimum(mid, i - 1) < x) lo = mid; else hi = mid - 1;
    }
    return lo;
}

node_t SparseTableOracle::nsv(std::size_t i) const {
    const std::size_t n = v_.size();
    if (i < 1 || i > n) throw DomainError("SparseTableOracle::nsv: index out of [1,n]");
    const value_t x = v_[i - 1];
    if (i == n || minimum(i + 1, n) >= x) return n + 1;
    std::size_t lo = i + 1, hi = n;  // invariant: min(v[i+1..hi]) < x
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (minimum(i + 1, mid) < x) hi = mid; else lo = mid + 1;
    }
    return lo;
}

}  // namespace clrm
