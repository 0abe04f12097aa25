#include "clrm/micro_shapes.hpp"

#include <map>
#include <mutex>

namespace clrm {

void MicroView::fill(std::span<const node_t> parent, const std::vector<bool>& red, std::uint8_t* out) {
    const std::size_t m = parent.size();
    std::uint8_t* par = out;
    std::uint8_t* dep = out + m;
    std::uint8_t* sz = out + 2 * m;
    std::uint8_t* deg = out + 3 * m;
    std::uint8_t* crank = out + 4 * m;
    std::uint8_t* rd = out + 5 * m;
    std::uint8_t* nrs = out + 6 * m;
    std::uint8_t* rpre = out + 7 * m;
    std::uint8_t* cbeg = out + 8 * m;
    std::uint8_t* kids = out + 9 * m + 1;

    par[0] = kNoLocal;
    dep[0] = 0;
    for (std::size_t l = 0; l < m; ++l) {
        sz[l] = 1;
        deg[l] = 0;
        rd[l] = red[l] ? 1 : 0;
        nrs[l] = kNoLocal;
    }
    for (std::size_t l = 1; l < m; ++l) {
        par[l] = static_cast<std::uint8_t>(parent[l]);
        dep[l] = static_cast<std::uint8_t>(dep[parent[l]] + 1);
        ++deg[parent[l]];
    }
    for (std::size_t l = m - 1; l > 0; --l) sz[parent[l]] = static_cast<std::uint8_t>(sz[parent[l]] + sz[l]);
    cbeg[0] = 0;
    for (std::size_t l = 0; l < m; ++l) cbeg[l + 1] = static_cast<std::uint8_t>(cbeg[l] + deg[l]);
    std::vector<std::uint8_t> fill_pos(cbeg, cbeg + m);
    crank[0] = 0;
    rpre[0] = 0;
    kids[m - 1] = 0;
    for (std::size_t l = 1; l < m; ++l) {
        const std::size_t p = parent[l];
        crank[l] = static_cast<std::uint8_t>(fill_pos[p] - cbeg[p] + 1);
        kids[fill_pos[p]++] = static_cast<std::uint8_t>(l);
    }
    for (std::size_t l = 0; l < m; ++l) {
        unsigned reds = 0;
        for (std::size_t j = cbeg[l]; j < cbeg[l + 1]; ++j) {
            reds += rd[kids[j]];
            rpre[kids[j]] = static_cast<std::uint8_t>(reds);
        }
        std::uint8_t next = kNoLocal;
        for (std::size_t j = cbeg[l + 1]; j-- > cbeg[l];) {
            nrs[kids[j]] = next;
            if (rd[kids[j]]) next = kids[j];
        }
    }
}

ShapeTable::ShapeTable(std::size_t micro_size)
    : micro_size_(micro_size), tabulated_(std::min(micro_size, kMaxTabulatedSize)) {
    const SchroederCodec& codec = default_codec();
    if (micro_size < 1 || micro_size > codec.max_size()) throw ConfigError("ShapeTable: unsupported micro size");
    records_.resize(tabulated_ + 1);
    std::vector<node_t> parent;
    std::vector<bool> red;
    for (std::size_t m = 1; m <= tabulated_; ++m) {
        const auto count = static_cast<std::size_t>(codec.count(m));
        const std::size_t stride = MicroView::record_bytes(m);
        records_[m].assign(count * stride, 0);
        for (std::size_t r = 0; r < count; ++r) {
            codec.unrank(m, r, parent, red);
            MicroView::fill(parent, red, records_[m].data() + r * stride);
        }
    }
}

std::shared_ptr<const ShapeTable> ShapeTable::for_micro_size(std::size_t micro_size) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const ShapeTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[micro_size];
    if (!slot) slot = std::make_shared<const ShapeTable>(micro_size);
    return slot;
}

MicroView ShapeTable::view(std::size_t m, code_t code) const {
    if (m <= tabulated_) {
        return MicroView(records_[m].data() + static_cast<std::size_t>(code) * MicroView::record_bytes(m), static_cast<unsigned>(m));
    }
    std::vector<node_t> parent;
    std::vector<bool> red;
    default_codec().unrank(m, code, parent, red);
    auto buf = std::make_shared<std::vector<std::uint8_t>>(MicroView::record_bytes(m));
    MicroView::fill(parent, red, buf->data());
    return MicroView(std::move(buf), static_cast<unsigned>(m));
}

std::size_t ShapeTable::bits() const noexcept {
    std::size_t b = 0;
    for (const auto& r : records_) b += r.size() * 8;
    return b;
}

}  // namespace clrm
