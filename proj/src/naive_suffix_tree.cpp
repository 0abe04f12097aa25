#include <algorithm>

#include "clrm/cst.hpp"

namespace clrm {

NaiveSuffixTree::NaiveSuffixTree(std::string text, std::size_t max_size) : text_(std::move(text)) {
    const std::size_t n = text_.size();
    if (n == 0) throw DomainError("NaiveSuffixTree: empty text");
    if (n > max_size) throw ConfigError("NaiveSuffixTree: text longer than the configured bound");
    nodes_.emplace_back();

    auto child_by_symbol = [&](std::size_t u, int c) -> std::vector<std::size_t>::iterator {
        auto& kids = nodes_[u].children;
        return std::lower_bound(kids.begin(), kids.end(), c,
                                [&](std::size_t k, int sym) { return symbol(nodes_[k].edge_start) < sym; });
    };
    auto add_child = [&](std::size_t u, Node child) {
        const int c = symbol(child.edge_start);
        child.parent = static_cast<std::int64_t>(u);
        nodes_.push_back(std::move(child));
        const std::size_t id = nodes_.size() - 1;
        auto it = child_by_symbol(u, c);
        nodes_[u].children.insert(it, id);
        return id;
    };

    // suffix i is text[i..n) followed by the terminator at position n
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t u = 0;
        std::size_t pos = i;
        for (;;) {
            const int c = symbol(pos);
            auto it = child_by_symbol(u, c);
            if (it == nodes_[u].children.end() || symbol(nodes_[*it].edge_start) != c) {
                Node leaf;
                leaf.edge_start = pos;
                leaf.edge_len = n + 1 - pos;
                leaf.suffix = static_cast<std::int64_t>(i);
                add_child(u, leaf);
                break;
            }
            const std::size_t e = *it;
            const std::uint64_t s = nodes_[e].edge_start, len = nodes_[e].edge_len;
            std::uint64_t k = 0;
            while (k < len && symbol(s + k) == symbol(pos + k)) ++k;
            if (k == len) {
                u = e;
                pos += len;
                continue;
            }
            // split the edge after k symbols
            Node mid;
            mid.edge_start = s;
            mid.edge_len = k;
            mid.parent = static_cast<std::int64_t>(u);
            nodes_.push_back(mid);
            const std::size_t m = nodes_.size() - 1;
            *child_by_symbol(u, c) = m;
            nodes_[e].edge_start = s + k;
            nodes_[e].edge_len = len - k;
            nodes_[e].parent = static_cast<std::int64_t>(m);
            nodes_[m].children.push_back(e);
            Node leaf;
            leaf.edge_start = pos + k;
            leaf.edge_len = n + 1 - (pos + k);
            leaf.suffix = static_cast<std::int64_t>(i);
            add_child(m, leaf);
            break;
        }
    }

    // without the empty suffix the root is unary only for c^n; contract it
    root_ = nodes_[0].children.size() == 1 ? nodes_[0].children[0] : 0;

    // depths and leaf intervals in lexicographic order
    std::uint64_t leaves = 0;
    std::vector<std::pair<std::size_t, bool>> stack{{0, false}};
    while (!stack.empty()) {
        const auto [u, done] = stack.back();
        stack.pop_back();
        Node& x = nodes_[u];
        if (done) {
            x.interval.r = nodes_[x.children.back()].interval.r;
            continue;
        }
        if (u != 0) x.depth = nodes_[static_cast<std::size_t>(x.parent)].depth + x.edge_len;
        if (x.children.empty()) {
            x.depth -= 1;  // the terminator
            x.interval = {leaves + 1, leaves + 1};
            ++leaves;
            continue;
        }
        x.interval.l = leaves + 1;
        stack.push_back({u, true});
        for (auto it = x.children.rbegin(); it != x.children.rend(); ++it) stack.push_back({*it, false});
    }

    by_interval_.resize(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) by_interval_[k] = k;
    if (root_ != 0) by_interval_.erase(by_interval_.begin());  // the contracted root shares its child's interval
    std::sort(by_interval_.begin(), by_interval_.end(),
              [&](std::size_t a, std::size_t b) { return nodes_[a].interval < nodes_[b].interval; });
}

std::size_t NaiveSuffixTree::id(CstNode v) const {
    const auto it = std::lower_bound(by_interval_.begin(), by_interval_.end(), v,
                                     [&](std::size_t k, const CstNode& x) { return nodes_[k].interval < x; });
    if (it == by_interval_.end() || nodes_[*it].interval != v) throw DomainError("NaiveSuffixTree: not a node");
    return *it;
}

std::vector<CstNode> NaiveSuffixTree::nodes() const {
    std::vector<CstNode> out;
    std::vector<std::size_t> stack{root_};
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        out.push_back(nodes_[u].interval);
        const auto& kids = nodes_[u].children;
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return out;
}

CstNode NaiveSuffixTree::root() const { return nodes_[root_].interval; }

std::size_t NaiveSuffixTree::leaf_count(CstNode v) const {
    std::size_t count = 0;
    std::vector<std::size_t> stack{id(v)};
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        if (nodes_[u].children.empty()) ++count;
        for (const std::size_t c : nodes_[u].children) stack.push_back(c);
    }
    return count;
}

std::uint64_t NaiveSuffixTree::leaf_label(CstNode v) const {
    const Node& x = nodes_[id(v)];
    if (x.suffix < 0) throw DomainError("NaiveSuffixTree::leaf_label: not a leaf");
    return static_cast<std::uint64_t>(x.suffix) + 1;
}

std::size_t NaiveSuffixTree::string_depth(CstNode v) const { return nodes_[id(v)].depth; }

maybe_cst_node NaiveSuffixTree::parent(CstNode v) const {
    const std::size_t u = id(v);
    if (u == root_) return std::nullopt;
    return interval(nodes_[u].parent);
}

maybe_cst_node NaiveSuffixTree::first_child(CstNode v) const {
    const Node& x = nodes_[id(v)];
    if (x.children.empty()) return std::nullopt;
    return nodes_[x.children.front()].interval;
}

maybe_cst_node NaiveSuffixTree::next_sibling(CstNode v) const {
    const std::size_t u = id(v);
    if (u == root_) return std::nullopt;
    const auto& kids = nodes_[static_cast<std::size_t>(nodes_[u].parent)].children;
    const auto it = std::find(kids.begin(), kids.end(), u);
    if (it + 1 == kids.end()) return std::nullopt;
    return nodes_[*(it + 1)].interval;
}

std::optional<std::size_t> NaiveSuffixTree::locate(std::uint64_t start, std::size_t len) const {
    std::size_t u = 0;
    while (nodes_[u].depth < len) {
        const std::size_t d = nodes_[u].depth;
        std::optional<std::size_t> next;
        for (const std::size_t k : nodes_[u].children) {
            if (symbol(nodes_[k].edge_start) == symbol(start + d)) next = k;
        }
        if (!next) return std::nullopt;
        const Node& e = nodes_[*next];
        // only internal nodes can carry the label; leaf edges end in the terminator
        if (e.children.empty() || d + e.edge_len > len) return std::nullopt;
        for (std::uint64_t k = 0; k < e.edge_len; ++k) {
            if (symbol(e.edge_start + k) != symbol(start + d + k)) return std::nullopt;
        }
        u = *next;
    }
    if (u == 0 && root_ != 0) return std::nullopt;
    return u;
}

maybe_cst_node NaiveSuffixTree::suffix_link(CstNode v) const {
    const std::size_t u = id(v);
    if (u == root_) return std::nullopt;
    const Node& x = nodes_[u];
    if (x.children.empty()) {
        const auto s = static_cast<std::uint64_t>(x.suffix) + 1;
        if (s == text_.size()) {
            const auto r = locate(0, 0);
            if (!r) return std::nullopt;
            return nodes_[*r].interval;
        }
        for (const std::size_t k : by_interval_) {
            if (nodes_[k].suffix == static_cast<std::int64_t>(s)) return nodes_[k].interval;
        }
        return std::nullopt;
    }
    // any leaf below gives a start position for the path label
    std::size_t leaf = u;
    while (!nodes_[leaf].children.empty()) leaf = nodes_[leaf].children.front();
    const auto start = static_cast<std::uint64_t>(nodes_[leaf].suffix) + 1;
    const auto r = locate(start, x.depth - 1);
    if (!r) return std::nullopt;
    return nodes_[*r].interval;
}

bool NaiveSuffixTree::is_ancestor(CstNode u, CstNode v) const {
    const std::size_t a = id(u);
    for (std::int64_t b = static_cast<std::int64_t>(id(v)); b >= 0; b = nodes_[static_cast<std::size_t>(b)].parent) {
        if (static_cast<std::size_t>(b) == a) return true;
        if (static_cast<std::size_t>(b) == root_) break;
    }
    return false;
}

CstNode NaiveSuffixTree::lca(CstNode u, CstNode v) const {
    std::size_t a = id(u);
    while (!is_ancestor(nodes_[a].interval, v)) a = static_cast<std::size_t>(nodes_[a].parent);
    return nodes_[a].interval;
}

maybe_cst_node NaiveSuffixTree::child(CstNode v, std::uint8_t a) const {
    for (const std::size_t k : nodes_[id(v)].children) {
        if (symbol(nodes_[k].edge_start) == a) return nodes_[k].interval;
    }
    return std::nullopt;
}

}  // namespace clrm
