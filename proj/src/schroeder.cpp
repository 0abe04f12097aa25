#include "clrm/schroeder.hpp"

#include <bit>
#include <limits>

namespace clrm {

namespace {

constexpr code_t kCodeMax = ~code_t{0};

code_t checked_mul(code_t a, code_t b) {
    if (a != 0 && b > kCodeMax / a) throw ConfigError("Schröder counts overflow 128 bits");
    return a * b;
}

code_t checked_add(code_t a, code_t b) {
    if (b > kCodeMax - a) throw ConfigError("Schröder counts overflow 128 bits");
    return a + b;
}

}  // namespace

std::size_t code_bits(code_t count) noexcept {
    if (count <= 1) return 0;
    const code_t x = count - 1;
    const auto hi = static_cast<std::uint64_t>(x >> 64);
    if (hi != 0) return 64 + static_cast<std::size_t>(std::bit_width(hi));
    return static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(x)));
}

SchroederCounts SchroederCounts::compute(std::size_t max_n) {
    if (max_n < 1) throw ConfigError("SchroederCounts: max_n must be >= 1");
    SchroederCounts c;
    c.max_n = max_n;
    c.trees.assign(max_n + 1, 0);
    c.forests.assign(max_n + 1, 0);
    c.forests[0] = 1;
    for (std::size_t m = 1; m <= max_n; ++m) {
        c.trees[m] = m == 1 ? 1 : c.forests[m - 1];
        code_t f = c.trees[m];
        for (std::size_t k = 1; k < m; ++k) f = checked_add(f, checked_mul(2 * c.trees[k], c.forests[m - k]));
        c.forests[m] = f;
    }
    if (max_n >= kMaxWordCodeSize && c.trees[kMaxWordCodeSize] >= (code_t{1} << 63)) {
        throw ConfigError("SchroederCounts: word-sized code bound violated");
    }
    return c;
}

SchroederCodec::SchroederCodec(std::size_t max_n) : counts_(SchroederCounts::compute(max_n)) {
    offset_.assign(max_n + 1, {});
    for (std::size_t total = 0; total <= max_n; ++total) {
        offset_[total].assign(total + 2, 0);
        for (std::size_t k = 1; k <= total; ++k) {
            offset_[total][k + 1] = offset_[total][k] + counts_.trees[k] * free_forests(total - k);
        }
    }
}

code_t SchroederCodec::count(std::size_t m) const {
    if (m < 1 || m > counts_.max_n) throw DomainError("SchroederCodec::count: size out of range");
    return counts_.trees[m];
}

namespace {

struct RankState {
    std::span<const node_t> parent;
    const std::vector<bool>* red;
    std::vector<std::size_t> child_begin;
    std::vector<node_t> children;
    std::vector<std::size_t> size;
};

}  // namespace

code_t SchroederCodec::rank(std::span<const node_t> parent, const std::vector<bool>& red) const {
    const std::size_t m = parent.size();
    if (m < 1 || m > counts_.max_n) throw DomainError("SchroederCodec::rank: tree size out of range");
    if (red.size() != m) throw DomainError("SchroederCodec::rank: color vector size mismatch");
    if (red[0]) throw DomainError("SchroederCodec::rank: root must be blue");

    RankState st{parent, &red, std::vector<std::size_t>(m + 1, 0), std::vector<node_t>(m - 1), std::vector<std::size_t>(m, 1)};
    for (std::size_t i = 1; i < m; ++i) {
        if (parent[i] >= i) throw DomainError("SchroederCodec::rank: parent must precede child");
        ++st.child_begin[parent[i] + 1];
    }
    for (std::size_t i = 0; i < m; ++i) st.child_begin[i + 1] += st.child_begin[i];
    std::vector<std::size_t> fill(st.child_begin.begin(), st.child_begin.end() - 1);
    for (std::size_t i = 1; i < m; ++i) st.children[fill[parent[i]]++] = i;
    for (std::size_t i = m - 1; i > 0; --i) st.size[parent[i]] += st.size[i];
    for (std::size_t v = 0; v < m; ++v) {
        if (st.child_begin[v] != st.child_begin[v + 1] && red[st.children[st.child_begin[v]]]) {
            throw DomainError("SchroederCodec::rank: first child must be blue");
        }
    }

    // Iterative over nodes in reverse preorder: tree_rank[v] needs its children's ranks.
    std::vector<code_t> tree_rank(m, 0);
    for (std::size_t v = m; v-- > 0;) {
        const std::size_t b = st.child_begin[v], e = st.child_begin[v + 1];
        // forest over children[j..e), built right to left
        code_t forest = 0;
        std::size_t forest_size = 0;
        for (std::size_t j = e; j-- > b;) {
            const node_t c = st.children[j];
            const std::size_t k = st.size[c];
            const std::size_t total = k + forest_size;
            code_t r = offset(total, k);
            if (forest_size == 0) {
                r += tree_rank[c];
            } else {
                const node_t next = st.children[j + 1];
                r += tree_rank[c] * free_forests(forest_size);
                if (red[next]) r += counts_.forests[forest_size];
                r += forest;
            }
            forest = r;
            forest_size = total;
        }
        tree_rank[v] = forest;
    }
    return tree_rank[0];
}

void SchroederCodec::unrank(std::size_t m, code_t r, std::vector<node_t>& parent, std::vector<bool>& red) const {
    if (m < 1 || m > counts_.max_n) throw DomainError("SchroederCodec::unrank: size out of range");
    if (r >= counts_.trees[m]) throw DomainError("SchroederCodec::unrank: rank out of range");
    parent.assign(1, 0);
    red.assign(1, false);

    // Explicit stack of pending forests: (parent label, forest size, rank, first root red).
    struct Pending {
        node_t parent;
        std::size_t size;
        code_t rank;
        bool first_red;
    };
    std::vector<Pending> stack;
    if (m > 1) stack.push_back({0, m - 1, r, false});
    while (!stack.empty()) {
        Pending f = stack.back();
        stack.pop_back();
        std::size_t k = 1;
        while (offset(f.size, k + 1) <= f.rank) ++k;
        code_t rem = f.rank - offset(f.size, k);
        const std::size_t rest = f.size - k;
        code_t first_tree = rem;
        if (rest > 0) {
            first_tree = rem / free_forests(rest);
            code_t tail = rem % free_forests(rest);
            const bool next_red = tail >= counts_.forests[rest];
            if (next_red) tail -= counts_.forests[rest];
            // the remaining forest is emitted after the first tree's subtree
            stack.push_back({f.parent, rest, tail, next_red});
        }
        const node_t label = parent.size();
        parent.push_back(f.parent);
        red.push_back(f.first_red);
        if (k > 1) stack.push_back({label, k - 1, first_tree, false});
    }
}

code_t SchroederCodec::rank(const ColoredLrmTree& t) const {
    std::vector<node_t> parent(t.size() + 1, 0);
    std::vector<bool> red(t.size() + 1, false);
    for (node_t v = 1; v <= t.size(); ++v) {
        parent[v] = t.parent(v);
        red[v] = t.is_red(v);
    }
    return rank(parent, red);
}

ColoredLrmTree SchroederCodec::unrank(std::size_t m, code_t r) const {
    std::vector<node_t> parent;
    std::vector<bool> red;
    unrank(m, r, parent, red);
    return ColoredLrmTree::from_parents(std::move(parent), std::move(red));
}

const SchroederCodec& default_codec() {
    static const SchroederCodec codec(kMaxCodecSize);
    return codec;
}

ValueArray canonical_array(const ColoredLrmTree& t) {
    const std::size_t n = t.size();
    std::vector<value_t> value(n + 1, -1);  // value[0] = -1 puts the root's rightmost child at 0
    for (node_t v = 0; v <= n; ++v) {
        const auto kids = t.children(v);
        value_t next = value[v] + 1;
        for (std::size_t j = kids.size(); j-- > 0;) {
            value[kids[j]] = next;
            if (t.is_red(kids[j])) ++next;
        }
    }
    return ValueArray(std::vector<value_t>(value.begin() + 1, value.end()));
}

}  // namespace clrm
