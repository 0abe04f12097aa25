#include "clrm/succinct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace clrm {

std::size_t default_micro_size(std::size_t n) {
    const double lg = std::log2((static_cast<double>(n) + 1.0) / 4.0);
    const auto b = static_cast<std::size_t>(std::floor(std::max(lg, 0.0) / kLgRho));
    return std::clamp<std::size_t>(b, 1, kMaxWordCodeSize);
}

std::string SpaceReport::to_text() const {
    std::ostringstream out;
    out << "n=" << n << '\n'
        << "micro_size=" << micro_size << '\n'
        << "micro_count=" << micro_count << '\n'
        << "payload_bits=" << payload_bits << '\n'
        << "topology_bits=" << topology_bits << '\n'
        << "red_fid_bits=" << red_fid_bits << '\n'
        << "lookup_bits=" << lookup_bits << '\n'
        << "aux_bits=" << aux_bits << '\n'
        << "total_bits=" << total_bits << '\n'
        << "payload_bits_per_element=" << per_element(payload_bits) << '\n'
        << "total_bits_per_element=" << per_element(total_bits) << '\n'
        << "payload_bound_bits=" << static_cast<double>(n) * kLgRho + static_cast<double>(micro_count) << '\n'
        << "payload_within_bound=" << (payload_within_bound() ? "true" : "false") << '\n';
    return out.str();
}

namespace {

constexpr std::uint32_t kLeftover = 0xFFFFFFFF;
constexpr std::uint32_t kOwned = 0xFFFFFFFE;

// Field widths depend on B only, never on n: labels, micro-tree ids and child
// positions take kLabelBits, local indices and sizes bit_width(B).
constexpr unsigned kLabelBits = 32;

constexpr std::size_t kSample = SuccinctLrmIndex::kSample;

unsigned local_bits(std::size_t B) { return static_cast<unsigned>(std::bit_width(B)); }
// offsets from the last sample of a non-decreasing sequence whose steps are at most `step`
unsigned rel_bits(std::size_t step) { return static_cast<unsigned>(std::bit_width((kSample - 1) * step)); }

// Every kSample-th of the first `count` entries of v.
IntVector samples(const std::vector<std::uint64_t>& v, std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < count; i += kSample) out.push_back(v[i]);
    return IntVector::fixed(out, 64);
}

}  // namespace

SuccinctLrmIndex SuccinctLrmIndex::encode(const ColoredLrmTree& t, std::size_t micro_size) {
    const std::size_t B = micro_size;
    if (B < 1 || B > default_codec().max_size()) throw ConfigError("encode: micro size outside the codec's supported range");
    const std::size_t n = t.size();
    if (n >= (std::size_t{1} << kLabelBits) - 1) throw ConfigError("encode: tree too large for 32-bit fields");
    const std::size_t count = n + 1;

    // Bottom-up packing. frag[v] is the size of the open fragment v hands to its
    // parent (0 when v closed its own micro-tree). group[c] tells where child c
    // went: a closed group at its parent, its own micro-tree, or v's fragment.
    std::vector<std::uint32_t> frag(count, 0);
    std::vector<std::uint32_t> group(count, kLeftover);
    for (std::size_t v = count; v-- > 0;) {
        const auto kids = t.children(v);
        std::uint32_t groups = 0;
        std::size_t open_sum = 0, open_first = 0;
        auto close_open = [&](std::size_t end) {
            for (std::size_t j = open_first; j < end; ++j) group[kids[j]] = groups;
            ++groups;
            open_sum = 0;
        };
        for (std::size_t j = 0; j < kids.size(); ++j) {
            const node_t c = kids[j];
            if (frag[c] == 0) {
                if (open_sum > 0) close_open(j);
                group[c] = kOwned;
                open_first = j + 1;
                continue;
            }
            if (open_sum + frag[c] > B - 1) {
                close_open(j);
                open_first = j;
            }
            open_sum += frag[c];
        }
        for (std::size_t j = open_first; j < kids.size(); ++j) {
            if (group[kids[j]] != kOwned) group[kids[j]] = kLeftover;
        }
        const std::size_t size = 1 + open_sum;
        frag[v] = (v != 0 && size >= B) ? 0 : static_cast<std::uint32_t>(size);
    }

    // Micro-trees in creation order, walking labels in preorder.
    std::vector<std::uint32_t> home(count), local(count);
    std::vector<std::uint32_t> msize{0};
    std::vector<std::uint64_t> anchor{0}, shared{0}, attach{0};
    home[0] = 0;
    for (std::size_t v = 0; v < count; ++v) {
        local[v] = msize[home[v]]++;
        const auto kids = t.children(v);
        std::uint32_t last_group = kLeftover;
        std::uint32_t group_micro = 0;
        for (std::size_t j = 0; j < kids.size(); ++j) {
            const node_t c = kids[j];
            const std::uint32_t g = group[c];
            if (g == kLeftover) {
                home[c] = home[v];
            } else if (g == kOwned) {
                home[c] = static_cast<std::uint32_t>(msize.size());
                msize.push_back(0);
                anchor.push_back(v);
                shared.push_back(0);
                attach.push_back(j);
            } else {
                if (g != last_group) {
                    group_micro = static_cast<std::uint32_t>(msize.size());
                    msize.push_back(1);  // local 0 is the borrowed root
                    anchor.push_back(v);
                    shared.push_back(1);
                    attach.push_back(j);
                    last_group = g;
                }
                home[c] = group_micro;
            }
        }
    }
    const std::size_t micros = msize.size();

    SuccinctLrmIndex idx{Raw{}};
    idx.n_ = n;
    idx.micro_size_ = B;
    idx.micro_count_ = micros;
    idx.shapes_ = ShapeTable::for_micro_size(B);

    // Local trees and their codes.
    std::vector<std::size_t> base(micros + 1, 0);
    for (std::size_t m = 0; m < micros; ++m) base[m + 1] = base[m] + msize[m];
    std::vector<node_t> lparent(base[micros], 0);
    std::vector<bool> lred(base[micros], false);
    std::vector<bool> has_child(base[micros], false);
    for (std::size_t x = 1; x < count; ++x) {
        const std::size_t m = home[x];
        if (local[x] == 0) continue;  // owned root
        const node_t p = t.parent(x);
        const std::size_t lp = home[p] == m ? local[p] : 0;
        lparent[base[m] + local[x]] = lp;
        const bool first = !has_child[base[m] + lp];
        has_child[base[m] + lp] = true;
        lred[base[m] + local[x]] = t.is_red(x) && !first;
    }
    const SchroederCodec& codec = default_codec();
    std::vector<code_t> codes(micros);
    std::vector<std::uint64_t> sizes(micros);
    for (std::size_t m = 0; m < micros; ++m) {
        sizes[m] = msize[m];
        const std::vector<bool> red(lred.begin() + static_cast<std::ptrdiff_t>(base[m]),
                                    lred.begin() + static_cast<std::ptrdiff_t>(base[m + 1]));
        codes[m] = codec.rank(std::span<const node_t>(lparent).subspan(base[m], msize[m]), red);
        idx.payload_bits_ += code_bits(codec.count(msize[m]));
    }

    // Micro-tree linkage.
    std::vector<std::uint64_t> pmicro(micros, 0), depth(micros, 0), mdepth(micros, 0), jump(micros, 0);
    for (std::size_t m = 1; m < micros; ++m) {
        const node_t a = anchor[m];
        pmicro[m] = home[a];
        depth[m] = t.depth(a) + (shared[m] ? 0 : 1);
        mdepth[m] = mdepth[pmicro[m]] + 1;
        const std::size_t p = pmicro[m];
        const std::size_t j = jump[p];
        // skew-binary jump pointers: O(log) ancestor searches with one pointer per node
        if (p != 0 && mdepth[p] - mdepth[j] == mdepth[j] - mdepth[jump[j]]) {
            jump[m] = jump[j];
        } else {
            jump[m] = p;
        }
    }

    // Runs of consecutive labels sharing a micro-tree.
    std::vector<bool> run_bits(count, false);
    std::vector<std::uint64_t> run_start, run_micro, run_local;
    for (std::size_t x = 0; x < count; ++x) {
        if (x == 0 || home[x] != home[x - 1]) {
            run_bits[x] = true;
            run_start.push_back(x);
            run_micro.push_back(home[x]);
            run_local.push_back(local[x]);
        }
    }
    std::vector<std::uint64_t> start(micros, 0);
    for (std::size_t r = run_micro.size(); r-- > 0;) start[run_micro[r]] = run_start[r];
    idx.run_bits_ = RankSelectBits(run_bits);

    // Boundary nodes, grouped by home micro-tree and ordered by local index.
    std::vector<std::uint64_t> bnd_begin(micros + 1, 0);
    std::vector<node_t> bnd_nodes;
    for (std::size_t v = 0; v < count; ++v) {
        for (const node_t c : t.children(v)) {
            if (home[c] != home[v]) {
                bnd_nodes.push_back(v);
                ++bnd_begin[home[v] + 1];
                break;
            }
        }
    }
    for (std::size_t m = 0; m < micros; ++m) bnd_begin[m + 1] += bnd_begin[m];
    std::vector<node_t> bnd_sorted(bnd_nodes.size());
    {
        std::vector<std::uint64_t> fill(bnd_begin.begin(), bnd_begin.end() - 1);
        for (const node_t v : bnd_nodes) bnd_sorted[fill[home[v]]++] = v;
    }
    std::vector<std::uint64_t> bnd_local, bnd_child_off{0}, bnd_last, bnd_rexit, bnd_shift, bnd_child_micro;
    std::vector<bool> red_seq, block_seq;
    std::uint64_t shift = 0;
    for (std::size_t b = 0; b < bnd_sorted.size(); ++b) {
        const node_t v = bnd_sorted[b];
        if (b == 0 || home[v] != home[bnd_sorted[b - 1]]) shift = 0;
        bnd_local.push_back(local[v]);
        bnd_last.push_back(v + t.subtree_size(v) - 1);
        const auto kids = t.children(v);
        bnd_rexit.push_back(home[kids.back()] != home[v] ? 1 : 0);
        bool first_foreign = true;
        for (std::size_t j = 0; j < kids.size(); ++j) {
            red_seq.push_back(t.is_red(kids[j]));
            block_seq.push_back(j == 0 || home[kids[j]] != home[kids[j - 1]]);
            if (home[kids[j]] == home[v]) continue;
            if (first_foreign) bnd_child_micro.push_back(home[kids[j]]);
            first_foreign = false;
            shift += t.subtree_size(kids[j]);
        }
        bnd_shift.push_back(shift);
        bnd_child_off.push_back(red_seq.size());
    }
    idx.red_bits_ = RankSelectBits(red_seq);
    idx.block_bits_ = RankSelectBits(block_seq);

    // Pack the per-item tables into records.
    const auto slot = static_cast<unsigned>(code_bits(codec.count(B)));
    idx.micros_ = RecordArray(micros, {local_bits(B), std::min(slot, 64u), slot > 64 ? slot - 64 : 0, 1, rel_bits(B), kLabelBits});
    idx.links_ = RecordArray(micros, {kLabelBits, kLabelBits});
    idx.maux_ = RecordArray(micros, {kLabelBits, kLabelBits, kLabelBits, kLabelBits});
    idx.bnd_samples_ = samples(bnd_begin, micros);
    for (std::size_t m = 0; m < micros; ++m) {
        const std::uint64_t fields[kMicroFields] = {sizes[m],  static_cast<std::uint64_t>(codes[m]),
                                                    static_cast<std::uint64_t>(codes[m] >> 64),
                                                    shared[m], bnd_begin[m] - idx.bnd_samples_[m / kSample],
                                                    start[m]};
        for (std::size_t f = 0; f < kMicroFields; ++f) idx.micros_.set(m, f, fields[f]);
        idx.links_.set(m, kAnchor, anchor[m]);
        idx.links_.set(m, kAttach, attach[m]);
        idx.maux_.set(m, kPmicro, pmicro[m]);
        idx.maux_.set(m, kRootDepth, depth[m]);
        idx.maux_.set(m, kMdepth, mdepth[m]);
        idx.maux_.set(m, kJump, jump[m]);
    }
    idx.runs_ = RecordArray(run_start.size(), {kLabelBits, local_bits(B), rel_bits(B)});  // a run spans at most B labels
    idx.run_samples_ = samples(run_start, run_start.size());
    for (std::size_t r = 0; r < run_start.size(); ++r) {
        idx.runs_.set(r, kRunMicro, run_micro[r]);
        idx.runs_.set(r, kRunLocal, run_local[r]);
        idx.runs_.set(r, kRunRel, run_start[r] - idx.run_samples_[r / kSample]);
    }
    idx.bnds_ = RecordArray(bnd_local.size(), {local_bits(B), kLabelBits});
    idx.bnd_info_ = RecordArray(bnd_local.size(), {kLabelBits, kLabelBits, 1, kLabelBits});
    for (std::size_t b = 0; b < bnd_local.size(); ++b) {
        idx.bnds_.set(b, kBndLocal, bnd_local[b]);
        idx.bnds_.set(b, kBndShift, bnd_shift[b]);
        const std::uint64_t info[kBndInfoFields] = {bnd_child_off[b], bnd_last[b], bnd_rexit[b], bnd_child_micro[b]};
        for (std::size_t f = 0; f < kBndInfoFields; ++f) idx.bnd_info_.set(b, f, info[f]);
    }
    return idx;
}

// ---------------------------------------------------------------------------
// lookups

void SuccinctLrmIndex::check(node_t v) const {
    if (v > n_) throw DomainError("SuccinctLrmIndex: node label out of range");
}

SuccinctLrmIndex::Loc SuccinctLrmIndex::home(node_t x) const {
    const std::size_t r = run_bits_.rank1(x + 1) - 1;
    const std::size_t run_start = run_samples_[r / kSample] + runs_.get(r, kRunRel);
    const auto run_local = static_cast<unsigned>(runs_.get(r, kRunLocal));
    return {runs_.get(r, kRunMicro), static_cast<unsigned>(run_local + (x - run_start)), run_local};
}

node_t SuccinctLrmIndex::global(std::size_t micro, unsigned local) const {
    const bool borrowed = shared(micro) != 0;
    if (local == 0 && borrowed) return anchor(micro);
    // labels skip the foreign subtrees hanging below earlier boundary nodes
    std::uint64_t skipped = 0;
    for (std::size_t b = bnd_begin(micro), e = bnd_begin(micro + 1); b < e && bnd_local(b) < local; ++b) skipped = bnd_shift(b);
    return start(micro) + (local - (borrowed ? 1 : 0)) + skipped;
}

code_t SuccinctLrmIndex::code(std::size_t micro) const {
    const code_t lo = micros_.get(micro, kCodeLo);
    if (micros_.width(kCodeHi) == 0) return lo;
    return lo | (code_t{micros_.get(micro, kCodeHi)} << 64);
}

MicroView SuccinctLrmIndex::shape(std::size_t micro) const { return shapes_->view(micro_nodes(micro), code(micro)); }

std::optional<std::size_t> SuccinctLrmIndex::boundary(std::size_t micro, unsigned local) const {
    for (std::size_t b = bnd_begin(micro), e = bnd_begin(micro + 1); b < e; ++b) {
        const auto l = bnd_local(b);
        if (l == local) return b;
        if (l > local) break;
    }
    return std::nullopt;
}

SuccinctLrmIndex::SiblingInfo SuccinctLrmIndex::sibling_info(node_t x) const {
    const Loc lx = home(x);
    if (lx.local == 0) {  // owned root of a micro-tree below a boundary node
        const node_t p = anchor(lx.micro);
        const Loc lp = home(p);
        return {p, lx, boundary(lp.micro, lp.local), attach(lx.micro) + 1};
    }
    const MicroView s = shape(lx.micro);
    const unsigned lp = s.parent(lx.local);
    if (lp == 0 && shared(lx.micro)) {
        const node_t p = anchor(lx.micro);
        const Loc ploc = home(p);
        return {p, lx, boundary(ploc.micro, ploc.local), attach(lx.micro) + s.child_rank(lx.local)};
    }
    const node_t p = global(lx.micro, lp);
    const auto b = boundary(lx.micro, lp);
    // p keeps its last run of children (if any) in its own micro-tree
    const std::size_t rank = b ? boundary_degree(*b) - s.degree(lp) + s.child_rank(lx.local) : s.child_rank(lx.local);
    return {p, lx, b, rank};
}

std::size_t SuccinctLrmIndex::micro_ancestor(std::size_t micro, std::size_t target) const {
    while (mdepth(micro) > target) {
        const std::size_t j = jump(micro);
        micro = mdepth(j) >= target ? j : pmicro(micro);
    }
    return micro;
}

// ---------------------------------------------------------------------------
// navigation kernel

node_t SuccinctLrmIndex::parent(node_t v) const {
    check(v);
    if (v == 0) throw DomainError("SuccinctLrmIndex::parent: root has no parent");
    const Loc l = home(v);
    if (l.local == 0) return anchor(l.micro);
    const unsigned lp = shape(l.micro).parent(l.local);
    if (lp >= l.run_local) return v - (l.local - lp);  // same run: labels and locals advance together
    return global(l.micro, lp);
}

std::size_t SuccinctLrmIndex::depth(node_t v) const {
    check(v);
    const Loc l = home(v);
    return root_depth(l.micro) + shape(l.micro).depth(l.local);
}

std::size_t SuccinctLrmIndex::subtree_size(node_t v) const {
    check(v);
    const Loc l = home(v);
    const MicroView s = shape(l.micro);
    const unsigned last_local = l.local + s.subtree_size(l.local) - 1;
    // The subtree leaves this micro-tree along its rightmost path at the topmost
    // boundary node whose last child lives elsewhere.
    for (std::size_t b = bnd_begin(l.micro), e = bnd_begin(l.micro + 1); b < e; ++b) {
        const auto w = static_cast<unsigned>(bnd_local(b));
        if (bnd_rexit(b) && s.is_ancestor(l.local, w) && s.is_ancestor(w, last_local)) {
            return bnd_last(b) - v + 1;
        }
    }
    return global(l.micro, last_local) - v + 1;
}

node_t SuccinctLrmIndex::lca(node_t u, node_t v) const {
    check(u);
    check(v);
    Loc lu = home(u), lv = home(v);
    if (lu.micro == lv.micro) return global(lu.micro, shape(lu.micro).lca(lu.local, lv.local));
    if (mdepth(lu.micro) < mdepth(lv.micro)) std::swap(lu, lv);

    std::size_t x;  // lowest common micro-tree
    unsigned xu, xv;
    std::size_t a = lu.micro, b = lv.micro;
    if (mdepth(a) > mdepth(b)) {
        const std::size_t below = micro_ancestor(a, mdepth(b) + 1);
        if (pmicro(below) == b) {
            x = b;
            xu = home(anchor(below)).local;
            xv = lv.local;
            return global(x, shape(x).lca(xu, xv));
        }
        a = pmicro(below);
    }
    while (pmicro(a) != pmicro(b)) {
        if (jump(a) != jump(b)) {
            a = jump(a);
            b = jump(b);
        } else {
            a = pmicro(a);
            b = pmicro(b);
        }
    }
    x = pmicro(a);
    xu = home(anchor(a)).local;
    xv = home(anchor(b)).local;
    return global(x, shape(x).lca(xu, xv));
}

node_t SuccinctLrmIndex::level_ancestor(node_t v, std::size_t d) const {
    check(v);
    const Loc l = home(v);
    const MicroView s = shape(l.micro);
    if (d > root_depth(l.micro) + s.depth(l.local)) throw DomainError("SuccinctLrmIndex::level_ancestor: depth exceeds node depth");
    if (key(l.micro) <= d) return global(l.micro, s.ancestor_at(l.local, static_cast<unsigned>(d - root_depth(l.micro))));
    // climb to the micro-tree just below the one that owns depth d
    std::size_t c = l.micro;
    while (key(pmicro(c)) > d) {
        const std::size_t j = jump(c);
        c = key(j) > d ? j : pmicro(c);
    }
    const std::size_t h = pmicro(c);
    const Loc entry = home(anchor(c));
    return global(h, shape(h).ancestor_at(entry.local, static_cast<unsigned>(d - root_depth(h))));
}

std::size_t SuccinctLrmIndex::degree(node_t v) const {
    check(v);
    const Loc l = home(v);
    if (const auto b = boundary(l.micro, l.local)) return boundary_degree(*b);
    return shape(l.micro).degree(l.local);
}

node_t SuccinctLrmIndex::ith_child(node_t v, std::size_t i) const {
    check(v);
    const Loc l = home(v);
    const auto b = boundary(l.micro, l.local);
    if (!b) {
        const MicroView s = shape(l.micro);
        if (i < 1 || i > s.degree(l.local)) throw DomainError("SuccinctLrmIndex::ith_child: rank out of [1,degree]");
        return global(l.micro, s.ith_child(l.local, static_cast<unsigned>(i)));
    }
    if (i < 1 || i > boundary_degree(*b)) throw DomainError("SuccinctLrmIndex::ith_child: rank out of [1,degree]");
    const std::size_t off = bnd_child_off(*b);
    const std::size_t first_block = block_bits_.rank1(off);
    const std::size_t blk = block_bits_.rank1(off + i) - first_block - 1;
    const std::size_t blocks = block_bits_.rank1(bnd_child_off(*b + 1)) - first_block;
    if (!bnd_rexit(*b) && blk + 1 == blocks) {  // trailing run kept at home
        const MicroView s = shape(l.micro);
        const auto k = static_cast<unsigned>(i - (boundary_degree(*b) - s.degree(l.local)));
        return global(l.micro, s.ith_child(l.local, k));
    }
    const std::size_t m = bnd_child_micro(*b) + blk;
    if (shared(m)) return global(m, shape(m).ith_child(0, static_cast<unsigned>(i - attach(m))));
    return global(m, 0);
}

std::size_t SuccinctLrmIndex::child_rank(node_t v) const {
    check(v);
    if (v == 0) throw DomainError("SuccinctLrmIndex::child_rank: root has no siblings");
    return sibling_info(v).rank;
}

maybe_node SuccinctLrmIndex::rightmost_child(node_t v) const {
    const std::size_t d = degree(v);
    if (d == 0) return std::nullopt;
    return ith_child(v, d);
}

bool SuccinctLrmIndex::is_red(node_t v) const {
    check(v);
    if (v == 0) return false;
    const SiblingInfo s = sibling_info(v);
    if (s.parent_boundary) return red_bits_[bnd_child_off(*s.parent_boundary) + s.rank - 1];
    return shape(s.node.micro).red(s.node.local);
}

maybe_node SuccinctLrmIndex::next_red_sibling(node_t v) const {
    check(v);
    if (v == 0) return std::nullopt;
    const SiblingInfo s = sibling_info(v);
    if (s.parent_boundary) {
        const std::size_t off = bnd_child_off(*s.parent_boundary);
        const std::size_t end = bnd_child_off(*s.parent_boundary + 1);
        const std::size_t reds = red_bits_.rank1(off + s.rank);
        if (reds == red_bits_.rank1(end)) return std::nullopt;
        return ith_child(s.parent, red_bits_.select1(reds + 1) - off + 1);
    }
    const unsigned r = shape(s.node.micro).next_red(s.node.local);
    if (r == kNoLocal) return std::nullopt;
    return global(s.node.micro, r);
}

std::size_t SuccinctLrmIndex::red_rank(node_t v) const {
    check(v);
    if (v == 0) throw DomainError("SuccinctLrmIndex::red_rank: root has no siblings");
    const SiblingInfo s = sibling_info(v);
    if (s.parent_boundary) {
        const std::size_t off = bnd_child_off(*s.parent_boundary);
        return red_bits_.rank1(off + s.rank) - red_bits_.rank1(off);
    }
    return shape(s.node.micro).red_prefix(s.node.local);
}

maybe_node SuccinctLrmIndex::red_select(node_t p, std::size_t k) const {
    check(p);
    if (k == 0) throw DomainError("SuccinctLrmIndex::red_select: rank is 1-based");
    const Loc l = home(p);
    if (const auto b = boundary(l.micro, l.local)) {
        const std::size_t off = bnd_child_off(*b);
        const std::size_t before = red_bits_.rank1(off);
        if (before + k > red_bits_.rank1(bnd_child_off(*b + 1))) return std::nullopt;
        return ith_child(p, red_bits_.select1(before + k) - off + 1);
    }
    const MicroView s = shape(l.micro);
    if (k > s.degree(l.local)) return std::nullopt;
    const unsigned c = s.red_select(l.local, static_cast<unsigned>(k));
    if (c == kNoLocal) return std::nullopt;
    return global(l.micro, c);
}

ColoredLrmTree SuccinctLrmIndex::decode() const {
    std::vector<node_t> parent(n_ + 1, 0);
    std::vector<bool> red(n_ + 1, false);
    for (node_t v = 1; v <= n_; ++v) {
        parent[v] = this->parent(v);
        red[v] = is_red(v);
    }
    return ColoredLrmTree::from_parents(std::move(parent), std::move(red));
}

// ---------------------------------------------------------------------------
// space and serialization

SpaceReport SuccinctLrmIndex::space_report() const {
    SpaceReport r;
    r.n = n_;
    r.micro_size = micro_size_;
    r.micro_count = micro_count_;
    r.payload_bits = payload_bits_;
    // code slots are as wide as the largest code; their padding is charged to topology
    r.topology_bits = micros_.bits() - payload_bits_ + links_.bits() + bnd_samples_.bits() + run_bits_.data_bits() +
                      run_bits_.directory_bits() + runs_.bits() + run_samples_.bits() + bnds_.bits() + bnd_info_.bits();
    r.red_fid_bits = red_bits_.data_bits() + red_bits_.directory_bits() + block_bits_.data_bits() + block_bits_.directory_bits();
    r.lookup_bits = shapes_->bits();
    r.aux_bits = maux_.bits();
    r.total_bits = r.payload_bits + r.topology_bits + r.red_fid_bits + r.lookup_bits + r.aux_bits;
    return r;
}

IndexSections SuccinctLrmIndex::to_sections() const {
    IndexSections s;
    s.n = n_;
    s.micro_size = micro_size_;
    s.micro_count = micro_count_;
    {
        WordWriter w;
        w.put(payload_bits_);
        micros_.save(w);
        s.codes = w.words();
    }
    {
        WordWriter w;
        links_.save(w);
        bnd_samples_.save(w);
        run_bits_.save(w);
        runs_.save(w);
        run_samples_.save(w);
        bnds_.save(w);
        bnd_info_.save(w);
        s.topology = w.words();
    }
    {
        WordWriter w;
        red_bits_.save(w);
        block_bits_.save(w);
        s.red_fids = w.words();
    }
    {
        WordWriter w;
        maux_.save(w);
        s.auxiliaries = w.words();
    }
    return s;
}

SuccinctLrmIndex SuccinctLrmIndex::from_sections(const IndexSections& s) {
    SuccinctLrmIndex idx{Raw{}};
    if (s.micro_size < 1 || s.micro_size > default_codec().max_size()) throw IntegrityError("index: bad micro size");
    idx.n_ = s.n;
    idx.micro_size_ = s.micro_size;
    idx.micro_count_ = s.micro_count;
    idx.shapes_ = ShapeTable::for_micro_size(s.micro_size);
    {
        WordReader r(s.codes);
        idx.payload_bits_ = r.get();
        idx.micros_ = RecordArray::load(r);
        if (!r.done()) throw IntegrityError("index: trailing data in codes section");
    }
    {
        WordReader r(s.topology);
        idx.links_ = RecordArray::load(r);
        idx.bnd_samples_ = IntVector::load(r);
        idx.run_bits_ = RankSelectBits::load(r);
        idx.runs_ = RecordArray::load(r);
        idx.run_samples_ = IntVector::load(r);
        idx.bnds_ = RecordArray::load(r);
        idx.bnd_info_ = RecordArray::load(r);
        if (!r.done()) throw IntegrityError("index: trailing data in topology section");
    }
    {
        WordReader r(s.red_fids);
        idx.red_bits_ = RankSelectBits::load(r);
        idx.block_bits_ = RankSelectBits::load(r);
        if (!r.done()) throw IntegrityError("index: trailing data in red_fids section");
    }
    {
        WordReader r(s.auxiliaries);
        idx.maux_ = RecordArray::load(r);
        if (!r.done()) throw IntegrityError("index: trailing data in auxiliaries section");
    }
    idx.validate();
    return idx;
}

void SuccinctLrmIndex::validate() const {
    const std::size_t m = micro_count_;
    const auto fail = [](const char* what) { throw IntegrityError(std::string("index: inconsistent ") + what); };
    const auto samples_for = [](std::size_t count) { return (count + kSample - 1) / kSample; };
    if (m == 0 || micros_.size() != m || micros_.fields() != kMicroFields || links_.size() != m || links_.fields() != kLinkFields || maux_.size() != m || maux_.fields() != kAuxFields ||
        bnd_samples_.size() != samples_for(m)) {
        fail("micro-tree table");
    }
    const auto slot = code_bits(default_codec().count(micro_size_));
    if (micros_.width(kCodeLo) != std::min<std::size_t>(slot, 64) || micros_.width(kCodeHi) != (slot > 64 ? slot - 64 : 0)) {
        fail("code slots");
    }
    const std::size_t runs = runs_.size();
    if (runs_.fields() != kRunFields || run_bits_.size() != n_ + 1 || run_bits_.ones() != runs || run_samples_.size() != samples_for(runs)) {
        fail("runs");
    }
    const std::size_t bnd = bnds_.size();
    if (bnds_.fields() != kBndFields || bnd_info_.size() != bnd || bnd_info_.fields() != kBndInfoFields ||
        red_bits_.size() != block_bits_.size()) {
        fail("boundary tables");
    }
    for (std::size_t r = 0; r < runs; ++r) {
        if (runs_.get(r, kRunMicro) >= m || runs_.get(r, kRunLocal) >= micro_size_) fail("runs");
    }
    for (std::size_t b = 0; b < bnd; ++b) {
        if (bnd_child_micro(b) >= m || bnd_child_off(b) >= bnd_child_off(b + 1) || bnd_last(b) > n_) fail("boundary tables");
    }
    std::size_t payload = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (anchor(i) > n_ || start(i) > n_ || pmicro(i) >= m || jump(i) >= m || bnd_begin(i) > bnd_begin(i + 1)) {
            fail("micro-tree linkage");
        }
        const std::size_t size = micro_nodes(i);
        if (size < 1 || size > micro_size_) fail("micro-tree size");
        payload += code_bits(default_codec().count(size));
        if (code(i) >= default_codec().count(size)) fail("code value");
    }
    if (payload != payload_bits_) fail("payload size");
}

}  // namespace clrm
