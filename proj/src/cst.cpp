#include "clrm/cst.hpp"

#include <algorithm>

namespace clrm {

std::vector<std::uint64_t> suffix_array(std::string_view text) {
    const std::size_t n = text.size();
    std::vector<std::uint64_t> out(n + 1, 0);
    if (n == 0) return out;
    // prefix doubling; rank 0 stands for the terminator
    std::vector<std::size_t> sa(n), rank(n), next(n), order(n);
    std::size_t classes = 257;
    for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(text[i]) + 1U;
    std::vector<std::size_t> count;
    auto second = [&](std::size_t i, std::size_t k) { return i + k < n ? rank[i + k] : 0; };
    count.assign(classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::size_t i = n; i-- > 0;) sa[--count[rank[i]]] = i;
    for (std::size_t k = 1;; k <<= 1) {
        // order by second key: suffixes without a second half first
        std::size_t p = 0;
        for (std::size_t i = n - std::min(n, k); i < n; ++i) order[p++] = i;
        for (std::size_t j = 0; j < n; ++j) {
            if (sa[j] >= k) order[p++] = sa[j] - k;
        }
        count.assign(classes + 1, 0);
        for (std::size_t i = 0; i < n; ++i) ++count[rank[i]];
        for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
        for (std::size_t j = n; j-- > 0;) sa[--count[rank[order[j]]]] = order[j];

        next[sa[0]] = 1;
        for (std::size_t j = 1; j < n; ++j) {
            const bool same = rank[sa[j]] == rank[sa[j - 1]] && second(sa[j], k) == second(sa[j - 1], k);
            next[sa[j]] = next[sa[j - 1]] + (same ? 0 : 1);
        }
        rank.swap(next);
        classes = rank[sa[n - 1]];
        if (classes == n) break;
    }
    for (std::size_t j = 0; j < n; ++j) out[j + 1] = sa[j] + 1;
    return out;
}

std::vector<value_t> lcp_array(std::string_view text, const std::vector<std::uint64_t>& sa) {
    const std::size_t n = text.size();
    std::vector<value_t> lcp(n + 1, 0);
    if (n == 0) return lcp;
    std::vector<std::size_t> rank(n);
    for (std::size_t j = 1; j <= n; ++j) rank[sa[j] - 1] = j;
    lcp[1] = -1;
    std::size_t h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] == 1) {
            h = 0;
            continue;
        }
        const std::size_t j = sa[rank[i] - 1] - 1;
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[rank[i]] = static_cast<value_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

// ---------------------------------------------------------------------------

CstIndex CstIndex::build(std::string text, std::size_t micro_size) {
    if (text.empty()) throw DomainError("CstIndex: empty text");
    auto sa = suffix_array(text);
    auto lcp = lcp_array(text, sa);
    const ColoredLrmTree t = ColoredLrmTree::build(ValueArray(std::vector<value_t>(lcp.begin() + 1, lcp.end())));
    auto idx = micro_size == 0 ? SuccinctLrmIndex::encode(t) : SuccinctLrmIndex::encode(t, micro_size);
    return from_parts(std::move(text), std::move(sa), std::move(lcp), std::move(idx));
}

CstIndex CstIndex::from_parts(std::string text, std::vector<std::uint64_t> sa, std::vector<value_t> lcp,
                              SuccinctLrmIndex lcp_index) {
    const std::size_t n = text.size();
    if (n == 0) throw DomainError("CstIndex: empty text");
    if (sa.size() != n + 1 || lcp.size() != n + 1 || lcp_index.size() != n) throw IntegrityError("CstIndex: part sizes disagree");
    CstIndex c;
    c.isa_.assign(n + 1, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        if (sa[j] < 1 || sa[j] > n || c.isa_[sa[j]] != 0) throw IntegrityError("CstIndex: suffix array is not a permutation");
        c.isa_[sa[j]] = j;
    }
    c.text_ = std::move(text);
    c.sa_ = std::move(sa);
    c.lcp_ = std::move(lcp);
    c.q_ = SuccinctQueryIndex(std::move(lcp_index));
    return c;
}

bool CstIndex::is_valid(CstNode v) const {
    const std::size_t n = size();
    if (v.l < 1 || v.l > v.r || v.r > n) return false;
    if (v.l == v.r) return true;
    const node_t k = q_.rmq(v.l + 1, v.r);
    return q_.psv(k) == v.l && q_.nsv(k) == v.r + 1;
}

void CstIndex::check(CstNode v) const {
    if (!is_valid(v)) throw DomainError("CstIndex: not a node of this tree");
}

CstNode CstIndex::enclosing(std::size_t k) const { return {q_.psv(k), q_.nsv(k) - 1}; }

bool CstIndex::is_ancestor(CstNode u, CstNode v) const {
    check(u);
    check(v);
    return u.l <= v.l && v.r <= u.r;
}

std::size_t CstIndex::leaf_count(CstNode v) const {
    check(v);
    return v.r - v.l + 1;
}

std::uint64_t CstIndex::leaf_label(CstNode v) const {
    check(v);
    if (!v.is_leaf()) throw DomainError("CstIndex::leaf_label: not a leaf");
    return sa_[v.l];
}

std::size_t CstIndex::string_depth(CstNode v) const {
    check(v);
    if (v.is_leaf()) return size() - sa_[v.l] + 1;
    return static_cast<std::size_t>(lcp_[q_.rmq(v.l + 1, v.r)]);
}

maybe_cst_node CstIndex::parent(CstNode v) const {
    check(v);
    const std::size_t n = size();
    if (v == root()) return std::nullopt;
    // the boundary with the larger LCP holds the parent's string depth
    std::size_t k;
    if (v.l == 1) {
        k = v.r + 1;
    } else if (v.r == n) {
        k = v.l;
    } else {
        k = lcp_[v.l] >= lcp_[v.r + 1] ? v.l : v.r + 1;
    }
    return enclosing(k);
}

maybe_cst_node CstIndex::first_child(CstNode v) const {
    check(v);
    if (v.is_leaf()) return std::nullopt;
    return CstNode{v.l, q_.rmq_leftmost(v.l + 1, v.r) - 1};
}

maybe_cst_node CstIndex::next_sibling(CstNode v) const {
    check(v);
    if (v == root()) return std::nullopt;
    const CstNode w = *parent(v);
    if (v.r == w.r) return std::nullopt;
    const std::size_t s = v.r + 1;
    // next position with LCP <= lcp[s]: everything inside the subtree of s is larger
    const std::size_t next_le = s + q_.kernel().subtree_size(s);
    if (next_le == w.r + 1) return CstNode{s, w.r};
    return CstNode{s, q_.rmq_leftmost(s + 1, w.r) - 1};
}

maybe_cst_node CstIndex::suffix_link(CstNode v) const {
    check(v);
    const std::size_t n = size();
    if (v == root()) return std::nullopt;
    const auto empty_label = [&]() -> maybe_cst_node {
        if (string_depth(root()) == 0) return root();
        return std::nullopt;
    };
    if (v.is_leaf()) {
        if (sa_[v.l] == n) return empty_label();
        const std::uint64_t j = isa_[sa_[v.l] + 1];
        return CstNode{j, j};
    }
    if (string_depth(v) == 1) return empty_label();
    const std::uint64_t l = isa_[sa_[v.l] + 1], r = isa_[sa_[v.r] + 1];
    return enclosing(q_.rmq(l + 1, r));
}

CstNode CstIndex::lca(CstNode u, CstNode v) const {
    check(u);
    check(v);
    if (u.l <= v.l && v.r <= u.r) return u;
    if (v.l <= u.l && u.r <= v.r) return v;
    if (u.l > v.l) std::swap(u, v);
    return enclosing(q_.rmq(u.r + 1, v.l));
}

maybe_cst_node CstIndex::child(CstNode v, std::uint8_t a) const {
    check(v);
    if (v.is_leaf()) return std::nullopt;
    const std::size_t depth = string_depth(v);
    for (maybe_cst_node c = first_child(v); c; c = next_sibling(*c)) {
        const std::size_t p = sa_[c->l] - 1 + depth;
        if (p >= size()) continue;  // edge starts with the terminator
        const auto b = static_cast<std::uint8_t>(text_[p]);
        if (b == a) return c;
        if (b > a) break;
    }
    return std::nullopt;
}

}  // namespace clrm
