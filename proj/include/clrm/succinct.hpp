#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clrm/bits.hpp"
#include "clrm/lrm_tree.hpp"
#include "clrm/micro_shapes.hpp"

namespace clrm {

/// lg(3 + 2*sqrt(2)): bits per node of the information-theoretic minimum.
inline const double kLgRho = std::log2(3.0 + 2.0 * std::sqrt(2.0));

/// Micro-tree size used when the caller does not choose one.
std::size_t default_micro_size(std::size_t n);

/// Space breakdown in bits. Lookup tables are shared per micro size and
/// counted once.
struct SpaceReport {
    std::size_t n = 0;
    std::size_t micro_size = 0;
    std::size_t micro_count = 0;
    std::size_t payload_bits = 0;
    std::size_t topology_bits = 0;
    std::size_t red_fid_bits = 0;
    std::size_t lookup_bits = 0;
    std::size_t aux_bits = 0;
    std::size_t total_bits = 0;

    [[nodiscard]] double per_element(std::size_t bits) const noexcept {
        return n == 0 ? 0.0 : static_cast<double>(bits) / static_cast<double>(n);
    }
    /// payload <= n lg(rho) + micro_count, the per-micro rounding slack.
    [[nodiscard]] bool payload_within_bound() const noexcept {
        return static_cast<double>(payload_bits) <= static_cast<double>(n) * kLgRho + static_cast<double>(micro_count);
    }
    /// key=value lines, one field per line.
    [[nodiscard]] std::string to_text() const;
};

/// Serialized sections of an index, each a sequence of 64-bit words.
struct IndexSections {
    std::uint64_t n = 0;
    std::uint64_t micro_size = 0;
    std::uint64_t micro_count = 0;
    std::vector<std::uint64_t> codes;
    std::vector<std::uint64_t> topology;
    std::vector<std::uint64_t> red_fids;
    std::vector<std::uint64_t> auxiliaries;
};

/// Compact Colored LRM-Tree.
///
/// The tree is cut into micro-trees of at most B nodes. A micro-tree either owns
/// its root or borrows it from the micro-tree above (then it holds a run of
/// consecutive children of that root and their fragments). Each micro-tree is
/// stored as its Schröder enumeration code; navigation inside one goes through
/// the shared ShapeTable.
///
/// Nodes whose children are spread over several micro-trees ("boundary" nodes)
/// keep their full child sequence in two bit vectors: the red flags (rank/select
/// among red children) and block starts (which micro-tree holds each child).
///
/// Navigation kernel is the same as ColoredLrmTree.
class SuccinctLrmIndex {
public:
    /// Stored offsets are relative to a 64-bit sample taken every kSample items.
    static constexpr std::size_t kSample = 64;

    SuccinctLrmIndex() : SuccinctLrmIndex(encode(ColoredLrmTree{}, 1)) {}

    static SuccinctLrmIndex encode(const ColoredLrmTree& t, std::size_t micro_size);
    static SuccinctLrmIndex encode(const ColoredLrmTree& t) { return encode(t, default_micro_size(t.size())); }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::size_t micro_size() const noexcept { return micro_size_; }
    [[nodiscard]] std::size_t micro_count() const noexcept { return micro_count_; }
    [[nodiscard]] const ShapeTable& shapes() const noexcept { return *shapes_; }
    [[nodiscard]] std::shared_ptr<const ShapeTable> shared_shapes() const noexcept { return shapes_; }

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
    [[nodiscard]] std::size_t red_rank(node_t v) const;
    [[nodiscard]] maybe_node red_select(node_t p, std::size_t k) const;

    /// Rebuilds the explicit tree by querying every node.
    [[nodiscard]] ColoredLrmTree decode() const;

    [[nodiscard]] SpaceReport space_report() const;

    [[nodiscard]] IndexSections to_sections() const;
    static SuccinctLrmIndex from_sections(const IndexSections& s);

private:
    struct Raw {};
    explicit SuccinctLrmIndex(Raw) {}

    struct Loc {
        std::size_t micro;
        unsigned local;
        unsigned run_local = 0;  // local index of the first label in x's run
    };
    // parent of a non-root node together with its sibling coordinates
    struct SiblingInfo {
        node_t parent;
        Loc node;
        std::optional<std::size_t> parent_boundary;
        std::size_t rank;  // 1-based child rank
    };

    void check(node_t v) const;
    [[nodiscard]] Loc home(node_t x) const;
    [[nodiscard]] node_t global(std::size_t micro, unsigned local) const;
    [[nodiscard]] MicroView shape(std::size_t micro) const;
    [[nodiscard]] code_t code(std::size_t micro) const;
    [[nodiscard]] std::optional<std::size_t> boundary(std::size_t micro, unsigned local) const;
    [[nodiscard]] std::size_t boundary_degree(std::size_t b) const { return bnd_child_off(b + 1) - bnd_child_off(b); }
    [[nodiscard]] SiblingInfo sibling_info(node_t x) const;
    [[nodiscard]] std::size_t key(std::size_t micro) const { return root_depth(micro) + shared(micro); }
    [[nodiscard]] std::size_t micro_ancestor(std::size_t micro, std::size_t target_mdepth) const;
    void validate() const;

    // Per micro-tree record. The Schröder code sits in a slot wide enough for
    // any tree of B nodes (split in two fields past 64 bits); the first
    // boundary node is stored relative to a sample taken every kSample micro-trees.
    enum MicroField : std::size_t {
        kNodes,   // node count
        kCodeLo,  // code bits 0..63
        kCodeHi,  // code bits 64.., empty unless B > 24
        kShared,  // 1 when the root is borrowed
        kBndRel,  // first boundary node minus its sample
        kStart,   // label of the first node the micro-tree owns
        kMicroFields
    };
    // Per micro-tree link to the enclosing micro-tree; read less often than
    // MicroField, so kept apart to shrink the working set of psv.
    enum LinkField : std::size_t {
        kAnchor,  // borrowed root, or parent of the owned root
        kAttach,  // 0-based position of the first own child in the anchor's child sequence
        kLinkFields
    };
    // Per micro-tree depth and ancestor auxiliaries; one record per hop when
    // climbing the tree of micro-trees.
    enum AuxField : std::size_t {
        kRootDepth,  // global depth of local node 0
        kMdepth,     // depth in the tree of micro-trees
        kJump,       // skew-binary jump pointer in the tree of micro-trees
        kPmicro,     // micro-tree holding the anchor
        kAuxFields
    };
    // Per run: a maximal range of consecutive labels with equal micro-tree.
    enum RunField : std::size_t { kRunMicro, kRunLocal, kRunRel, kRunFields };
    // Per boundary node (a node whose children lie in several micro-trees): the
    // fields label mapping reads, then the rest.
    enum BoundaryField : std::size_t {
        kBndLocal,
        kBndShift,  // foreign labels skipped up to and including this node, within its micro-tree
        kBndFields
    };
    enum BoundaryInfoField : std::size_t {
        kBndChildOff,    // start of its children in red_bits_ / block_bits_
        kBndLast,        // largest label in its subtree
        kBndRexit,       // rightmost child lives in another micro-tree
        kBndChildMicro,  // first micro-tree hanging below it; the others follow in id order
        kBndInfoFields
    };

    [[nodiscard]] std::size_t micro_nodes(std::size_t m) const { return micros_.get(m, kNodes); }
    [[nodiscard]] std::size_t shared(std::size_t m) const { return micros_.get(m, kShared); }
    [[nodiscard]] std::size_t bnd_begin(std::size_t m) const {
        return m == micro_count_ ? bnds_.size() : bnd_samples_[m / kSample] + micros_.get(m, kBndRel);
    }
    [[nodiscard]] node_t start(std::size_t m) const { return micros_.get(m, kStart); }
    [[nodiscard]] node_t anchor(std::size_t m) const { return links_.get(m, kAnchor); }
    [[nodiscard]] std::size_t attach(std::size_t m) const { return links_.get(m, kAttach); }
    [[nodiscard]] std::size_t pmicro(std::size_t m) const { return maux_.get(m, kPmicro); }
    [[nodiscard]] std::size_t root_depth(std::size_t m) const { return maux_.get(m, kRootDepth); }
    [[nodiscard]] std::size_t mdepth(std::size_t m) const { return maux_.get(m, kMdepth); }
    [[nodiscard]] std::size_t jump(std::size_t m) const { return maux_.get(m, kJump); }
    [[nodiscard]] std::size_t bnd_local(std::size_t b) const { return bnds_.get(b, kBndLocal); }
    [[nodiscard]] std::size_t bnd_child_off(std::size_t b) const {
        return b == bnds_.size() ? red_bits_.size() : bnd_info_.get(b, kBndChildOff);
    }
    [[nodiscard]] node_t bnd_last(std::size_t b) const { return bnd_info_.get(b, kBndLast); }
    [[nodiscard]] bool bnd_rexit(std::size_t b) const { return bnd_info_.get(b, kBndRexit) != 0; }
    [[nodiscard]] std::size_t bnd_shift(std::size_t b) const { return bnds_.get(b, kBndShift); }
    [[nodiscard]] std::size_t bnd_child_micro(std::size_t b) const { return bnd_info_.get(b, kBndChildMicro); }

    std::size_t n_ = 0;
    std::size_t micro_size_ = 1;
    std::size_t micro_count_ = 0;
    std::shared_ptr<const ShapeTable> shapes_;

    std::size_t payload_bits_ = 0;  // sum of ceil(lg C[size]) over micro-trees
    RecordArray micros_;
    RecordArray links_;
    IntVector bnd_samples_;
    RankSelectBits run_bits_;  // 1 at the first label of each run
    RecordArray runs_;
    IntVector run_samples_;  // run start label every kSample runs
    RecordArray bnds_;
    RecordArray bnd_info_;
    RecordArray maux_;

    // red fids over the child sequences of boundary nodes
    RankSelectBits red_bits_;
    RankSelectBits block_bits_;  // 1 where a child starts a new micro-tree block
};

}  // namespace clrm
