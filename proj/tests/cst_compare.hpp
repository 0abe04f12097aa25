#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>

#include "clrm/cst.hpp"

namespace clrm::testing {

inline std::string show(const maybe_cst_node& v) {
    if (!v) return "null";
    std::ostringstream out;
    out << '[' << v->l << ',' << v->r << ']';
    return out.str();
}

/// Compares every operation of CstIndex against NaiveSuffixTree on every node.
/// Returns the number of disagreements; the first one is described in `first`.
inline std::size_t cst_mismatches(const std::string& text, std::string* first = nullptr, std::size_t micro_size = 0) {
    const CstIndex cst = CstIndex::build(text, micro_size);
    const NaiveSuffixTree naive(text);
    std::size_t bad = 0;
    auto report = [&](const std::string& what, CstNode v, const std::string& got, const std::string& want) {
        if (bad++ == 0 && first != nullptr) {
            std::ostringstream out;
            out << what << " at " << show(v) << ": got " << got << ", want " << want << " (text \"" << text << "\")";
            *first = out.str();
        }
    };
    auto same = [&](const std::string& what, CstNode v, const maybe_cst_node& got, const maybe_cst_node& want) {
        if (got != want) report(what, v, show(got), show(want));
    };

    const std::vector<CstNode> nodes = naive.nodes();
    same("root", cst.root(), cst.root(), naive.root());

    // nodes reachable through first_child/next_sibling
    std::vector<CstNode> walked;
    std::vector<CstNode> stack{cst.root()};
    while (!stack.empty()) {
        const CstNode v = stack.back();
        stack.pop_back();
        walked.push_back(v);
        std::vector<CstNode> kids;
        for (maybe_cst_node c = cst.first_child(v); c; c = cst.next_sibling(*c)) kids.push_back(*c);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
        if (walked.size() > 2 * text.size() + 2) break;
    }
    if (walked != nodes) report("node enumeration", cst.root(), std::to_string(walked.size()), std::to_string(nodes.size()));

    std::set<unsigned char> alphabet(text.begin(), text.end());
    for (const CstNode v : nodes) {
        if (!cst.is_valid(v)) report("is_valid", v, "false", "true");
        if (cst.string_depth(v) != naive.string_depth(v)) {
            report("string_depth", v, std::to_string(cst.string_depth(v)), std::to_string(naive.string_depth(v)));
        }
        if (cst.leaf_count(v) != naive.leaf_count(v)) {
            report("leaf_count", v, std::to_string(cst.leaf_count(v)), std::to_string(naive.leaf_count(v)));
        }
        if (v.is_leaf() && cst.leaf_label(v) != naive.leaf_label(v)) {
            report("leaf_label", v, std::to_string(cst.leaf_label(v)), std::to_string(naive.leaf_label(v)));
        }
        if (!cst.is_ancestor(cst.root(), v)) report("is_ancestor(root)", v, "false", "true");
        same("parent", v, cst.parent(v), naive.parent(v));
        same("first_child", v, cst.first_child(v), naive.first_child(v));
        same("next_sibling", v, cst.next_sibling(v), naive.next_sibling(v));
        const maybe_cst_node link = cst.suffix_link(v);
        same("suffix_link", v, link, naive.suffix_link(v));
        if (!v.is_leaf() && v != cst.root()) {
            if (!link || cst.string_depth(*link) + 1 != cst.string_depth(v)) report("suffix_link depth", v, show(link), "depth-1");
        }
        for (const unsigned char a : alphabet) same("child", v, cst.child(v, a), naive.child(v, a));
        same("child(absent)", v, cst.child(v, 0), naive.child(v, 0));
    }

    // pairs: all for small trees, a sample otherwise
    std::mt19937_64 rng(text.size());
    const std::size_t pairs = nodes.size() <= 80 ? nodes.size() * nodes.size() : 4000;
    for (std::size_t k = 0; k < pairs; ++k) {
        const CstNode u = nodes.size() <= 80 ? nodes[k / nodes.size()] : nodes[rng() % nodes.size()];
        const CstNode v = nodes.size() <= 80 ? nodes[k % nodes.size()] : nodes[rng() % nodes.size()];
        same("lca", u, cst.lca(u, v), naive.lca(u, v));
        if (cst.is_ancestor(u, v) != naive.is_ancestor(u, v)) report("is_ancestor", u, show(v), "");
    }
    return bad;
}

}  // namespace clrm::testing
