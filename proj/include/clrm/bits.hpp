#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "clrm/types.hpp"

namespace clrm {


/// Appends and reads little-endian 64-bit words; the unit of every serialized section.
class WordWriter {
public:
    void put(std::uint64_t w) { words_.push_back(w); }
    void put_words(std::span<const std::uint64_t> ws) {
        put(ws.size());
        words_.insert(words_.end(), ws.begin(), ws.end());
    }
    [[nodiscard]] const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::vector<std::uint64_t> words_;
};

class WordReader {
public:
    explicit WordReader(std::span<const std::uint64_t> words) : words_(words) {}

    std::uint64_t get() {
        if (pos_ >= words_.size()) throw IntegrityError("section truncated");
        return words_[pos_++];
    }
    std::vector<std::uint64_t> get_words() {
        const std::uint64_t len = get();
        if (len > words_.size() - pos_) throw IntegrityError("section truncated");
        std::vector<std::uint64_t> out(words_.begin() + static_cast<std::ptrdiff_t>(pos_),
                                       words_.begin() + static_cast<std::ptrdiff_t>(pos_ + len));
        pos_ += len;
        return out;
    }
    [[nodiscard]] bool done() const noexcept { return pos_ == words_.size(); }

private:
    std::span<const std::uint64_t> words_;
    std::size_t pos_ = 0;
};

/// Fixed-width packed unsigned integers, LSB-first within 64-bit words.
class IntVector {
public:
    IntVector() = default;
    IntVector(std::size_t size, unsigned width);

    /// Packs values at the smallest width holding their maximum.
    static IntVector packed(std::span<const std::uint64_t> values);
    /// Packs values at a given width; throws ConfigError if one does not fit.
    static IntVector fixed(std::span<const std::uint64_t> values, unsigned width);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] unsigned width() const noexcept { return width_; }

    [[nodiscard]] std::uint64_t operator[](std::size_t i) const noexcept {
        if (width_ == 0) return 0;
        const std::size_t bit = i * width_;
        const std::size_t word = bit >> 6, off = bit & 63;
        std::uint64_t v = words_[word] >> off;
        if (off + width_ > 64) v |= words_[word + 1] << (64 - off);
        return width_ == 64 ? v : v & ((std::uint64_t{1} << width_) - 1);
    }
    void set(std::size_t i, std::uint64_t v) noexcept;

    [[nodiscard]] std::size_t bits() const noexcept { return words_.size() * 64; }

    void save(WordWriter& out) const;
    static IntVector load(WordReader& in);

private:
    std::size_t size_ = 0;
    unsigned width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Array of packed records with fixed field widths. The fields of one record
/// are adjacent, so reading several fields of a record touches one cache line
/// (two when the record straddles a boundary).
class RecordArray {
public:
    static constexpr std::size_t kMaxFields = 16;

    RecordArray() = default;
    /// Throws ConfigError if a width exceeds 64 or there are more than kMaxFields fields.
    RecordArray(std::size_t size, std::vector<unsigned> widths);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t fields() const noexcept { return widths_.size(); }
    [[nodiscard]] unsigned width(std::size_t f) const noexcept { return widths_[f]; }

    [[nodiscard]] std::uint64_t get(std::size_t i, std::size_t f) const noexcept {
        const unsigned w = widths_[f];
        const std::size_t pos = i * stride_ + offsets_[f];
        const std::size_t word = pos >> 6, off = pos & 63;
        std::uint64_t v = words_[word] >> off;
        if (off + w > 64) v |= words_[word + 1] << (64 - off);
        return w == 64 ? v : v & ((std::uint64_t{1} << w) - 1);
    }
    /// Throws ConfigError if v does not fit the field.
    void set(std::size_t i, std::size_t f, std::uint64_t v);

    /// Bits of one field over all records.
    [[nodiscard]] std::size_t field_bits(std::size_t f) const noexcept { return size_ * widths_[f]; }
    [[nodiscard]] std::size_t bits() const noexcept { return words_.size() * 64; }

    void save(WordWriter& out) const;
    static RecordArray load(WordReader& in);

private:
    void layout();

    std::size_t size_ = 0;
    std::size_t stride_ = 0;
    std::vector<unsigned> widths_;
    std::array<unsigned, kMaxFields> offsets_{};
    std::vector<std::uint64_t> words_;
};

/// Append-only bit sequence, LSB-first within 64-bit words.
class BitBuilder {
public:
    void push(bool b) { push_bits(b ? 1 : 0, 1); }
    /// Appends the low `width` bits of v (width <= 64).
    void push_bits(std::uint64_t v, unsigned width);
    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::vector<std::uint64_t> take() { return std::move(words_); }

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

/// Reads `width` bits (<= 64) starting at bit position `pos`.
inline std::uint64_t read_bits(std::span<const std::uint64_t> words, std::size_t pos, unsigned width) noexcept {
    if (width == 0) return 0;
    const std::size_t word = pos >> 6, off = pos & 63;
    std::uint64_t v = words[word] >> off;
    if (off + width > 64) v |= words[word + 1] << (64 - off);
    return width == 64 ? v : v & ((std::uint64_t{1} << width) - 1);
}

/// Bit vector with rank1 and select1.
///
/// Rank directory: one 64-bit absolute count per 512-bit block (12.5% of the
/// bits). Select samples the block holding every 4096-th one.
class RankSelectBits {
public:
    RankSelectBits() = default;
    RankSelectBits(std::vector<std::uint64_t> words, std::size_t size);
    explicit RankSelectBits(const std::vector<bool>& bits);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t ones() const noexcept { return ones_; }

    [[nodiscard]] bool operator[](std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    /// Ones in [0, i), 0 <= i <= size.
    [[nodiscard]] std::size_t rank1(std::size_t i) const noexcept {
        const std::size_t block = i >> 9;
        std::size_t r = blocks_[block];
        const std::size_t word = i >> 6;
        for (std::size_t w = block << 3; w < word; ++w) r += static_cast<std::size_t>(std::popcount(words_[w]));
        if (i & 63) r += static_cast<std::size_t>(std::popcount(words_[word] & ((std::uint64_t{1} << (i & 63)) - 1)));
        return r;
    }
    [[nodiscard]] std::size_t rank0(std::size_t i) const noexcept { return i - rank1(i); }

    /// Position of the k-th one (1-based), 1 <= k <= ones().
    [[nodiscard]] std::size_t select1(std::size_t k) const;

    /// Payload bits (rounded to words).
    [[nodiscard]] std::size_t data_bits() const noexcept { return words_.size() * 64; }
    /// Rank and select directory bits.
    [[nodiscard]] std::size_t directory_bits() const noexcept { return (blocks_.size() + samples_.size()) * 64; }

    void save(WordWriter& out) const;
    static RankSelectBits load(WordReader& in);

private:
    void index();

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> blocks_;
    std::vector<std::uint64_t> samples_;
};

}  // namespace clrm
