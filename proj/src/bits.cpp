#include "clrm/bits.hpp"

#include <algorithm>

namespace clrm {

IntVector::IntVector(std::size_t size, unsigned width)
    : size_(size), width_(width), words_((size * width + 63) / 64 + 1, 0) {
    if (width > 64) throw ConfigError("IntVector: width exceeds 64");
}

IntVector IntVector::packed(std::span<const std::uint64_t> values) {
    std::uint64_t mx = 0;
    for (const auto v : values) mx = std::max(mx, v);
    IntVector out(values.size(), static_cast<unsigned>(std::bit_width(mx)));
    for (std::size_t i = 0; i < values.size(); ++i) out.set(i, values[i]);
    return out;
}

IntVector IntVector::fixed(std::span<const std::uint64_t> values, unsigned width) {
    IntVector out(values.size(), width);
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (width < 64 && (values[i] >> width) != 0) throw ConfigError("IntVector: value exceeds field width");
        out.set(i, values[i]);
    }
    return out;
}

void IntVector::set(std::size_t i, std::uint64_t v) noexcept {
    if (width_ == 0) return;
    const std::uint64_t mask = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
    v &= mask;
    const std::size_t bit = i * width_;
    const std::size_t word = bit >> 6, off = bit & 63;
    words_[word] = (words_[word] & ~(mask << off)) | (v << off);
    if (off + width_ > 64) {
        const unsigned spill = static_cast<unsigned>(off + width_ - 64);
        const std::uint64_t hi_mask = (std::uint64_t{1} << spill) - 1;
        words_[word + 1] = (words_[word + 1] & ~hi_mask) | (v >> (64 - off));
    }
}

RecordArray::RecordArray(std::size_t size, std::vector<unsigned> widths) : size_(size), widths_(std::move(widths)) {
    if (widths_.size() > kMaxFields) throw ConfigError("RecordArray: too many fields");
    for (const unsigned w : widths_) {
        if (w > 64) throw ConfigError("RecordArray: width exceeds 64");
    }
    layout();
    words_.assign((size_ * stride_ + 63) / 64 + 1, 0);
}

void RecordArray::layout() {
    stride_ = 0;
    for (std::size_t f = 0; f < widths_.size(); ++f) {
        offsets_[f] = static_cast<unsigned>(stride_);
        stride_ += widths_[f];
    }
}

void RecordArray::set(std::size_t i, std::size_t f, std::uint64_t v) {
    const unsigned w = widths_[f];
    if (w < 64 && (v >> w) != 0) throw ConfigError("RecordArray: value exceeds field width");
    const std::size_t pos = i * stride_ + offsets_[f];
    for (unsigned done = 0; done < w;) {
        const std::size_t word = (pos + done) >> 6, off = (pos + done) & 63;
        const unsigned take = std::min<unsigned>(w - done, static_cast<unsigned>(64 - off));
        const std::uint64_t mask = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
        words_[word] = (words_[word] & ~(mask << off)) | (((v >> done) & mask) << off);
        done += take;
    }
}

void RecordArray::save(WordWriter& out) const {
    out.put(size_);
    const std::vector<std::uint64_t> widths(widths_.begin(), widths_.end());
    out.put_words(widths);
    out.put_words(words_);
}

RecordArray RecordArray::load(WordReader& in) {
    RecordArray r;
    r.size_ = in.get();
    const auto widths = in.get_words();
    if (widths.size() > kMaxFields) throw IntegrityError("RecordArray: too many fields");
    for (const auto w : widths) {
        if (w > 64) throw IntegrityError("RecordArray: bad width");
        r.widths_.push_back(static_cast<unsigned>(w));
    }
    r.layout();
    r.words_ = in.get_words();
    if (r.stride_ > 0 && r.size_ > (std::size_t{1} << 58) / r.stride_) throw IntegrityError("RecordArray: bad size");
    if (r.words_.size() != (r.size_ * r.stride_ + 63) / 64 + 1) throw IntegrityError("RecordArray: bad length");
    return r;
}

void IntVector::save(WordWriter& out) const {
    out.put(size_);
    out.put(width_);
    out.put_words(words_);
}

IntVector IntVector::load(WordReader& in) {
    IntVector v;
    v.size_ = in.get();
    const std::uint64_t width = in.get();
    if (width > 64) throw IntegrityError("IntVector: bad width");
    v.width_ = static_cast<unsigned>(width);
    v.words_ = in.get_words();
    if (v.width_ > 0 && v.size_ > (std::size_t{1} << 58) / v.width_) throw IntegrityError("IntVector: bad size");
    if (v.words_.size() != (v.size_ * v.width_ + 63) / 64 + 1) throw IntegrityError("IntVector: bad length");
    return v;
}

void BitBuilder::push_bits(std::uint64_t v, unsigned width) {
    if (width == 0) return;
    if (width < 64) v &= (std::uint64_t{1} << width) - 1;
    const std::size_t off = size_ & 63;
    if (off == 0) words_.push_back(0);
    words_.back() |= v << off;
    if (off + width > 64) words_.push_back(v >> (64 - off));
    size_ += width;
}

RankSelectBits::RankSelectBits(std::vector<std::uint64_t> words, std::size_t size) : words_(std::move(words)), size_(size) {
    words_.resize((size_ + 63) / 64 + 1, 0);
    if (size_ & 63) words_[size_ >> 6] &= (std::uint64_t{1} << (size_ & 63)) - 1;
    std::fill(words_.begin() + static_cast<std::ptrdiff_t>((size_ + 63) / 64), words_.end(), 0);
    index();
}

RankSelectBits::RankSelectBits(const std::vector<bool>& bits) : size_(bits.size()) {
    words_.assign((size_ + 63) / 64 + 1, 0);
    for (std::size_t i = 0; i < size_; ++i) {
        if (bits[i]) words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    index();
}

void RankSelectBits::index() {
    // one extra trailing word keeps rank1(size) in bounds
    const std::size_t nblocks = words_.size() / 8 + 1;
    blocks_.assign(nblocks, 0);
    samples_.clear();
    std::size_t count = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((w & 7) == 0) blocks_[w >> 3] = count;
        const auto pc = static_cast<std::size_t>(std::popcount(words_[w]));
        // sample the block holding ones number 1, 4097, 8193, ...
        const std::size_t next_sample = samples_.size() * 4096 + 1;
        if (count < next_sample && count + pc >= next_sample) samples_.push_back(w >> 3);
        count += pc;
    }
    for (std::size_t b = (words_.size() + 7) / 8; b < nblocks; ++b) blocks_[b] = count;
    ones_ = count;
}

std::size_t RankSelectBits::select1(std::size_t k) const {
    if (k < 1 || k > ones_) throw DomainError("RankSelectBits::select1: rank out of range");
    const std::size_t s = (k - 1) / 4096;
    std::size_t lo = samples_[s];
    std::size_t hi = s + 1 < samples_.size() ? samples_[s + 1] : blocks_.size() - 1;
    // last block whose prefix count is < k
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (blocks_[mid] < k) lo = mid; else hi = mid - 1;
    }
    std::size_t remaining = k - blocks_[lo];
    std::size_t w = lo << 3;
    for (;; ++w) {
        const auto pc = static_cast<std::size_t>(std::popcount(words_[w]));
        if (pc >= remaining) break;
        remaining -= pc;
    }
    std::uint64_t word = words_[w];
    for (std::size_t r = 1; r < remaining; ++r) word &= word - 1;
    return (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
}

void RankSelectBits::save(WordWriter& out) const {
    out.put(size_);
    out.put_words(std::span<const std::uint64_t>(words_).first((size_ + 63) / 64));
}

RankSelectBits RankSelectBits::load(WordReader& in) {
    const std::uint64_t size = in.get();
    auto words = in.get_words();
    if (words.size() != (size + 63) / 64) throw IntegrityError("RankSelectBits: bad length");
    return RankSelectBits(std::move(words), size);
}

}  // namespace clrm
