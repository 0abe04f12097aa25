#include "clrm/index_file.hpp"

#include <zlib.h>

#include <array>
#include <cstring>
#include <fstream>
#include <iterator>

namespace clrm {

namespace {

constexpr std::array<char, 4> kMagic = {'C', 'L', 'R', 'M'};
constexpr std::size_t kSections = 5;
constexpr std::size_t kHeaderBytes = kMagic.size() + 1 + 8 * (3 + 2 * kSections);

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
}

std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t at) {
    std::uint64_t v = 0;
    for (int b = 0; b < 8; ++b) v |= std::uint64_t{in[at + static_cast<std::size_t>(b)]} << (8 * b);
    return v;
}

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths
    for (std::size_t at = 0; at < bytes.size();) {
        const std::size_t len = std::min<std::size_t>(bytes.size() - at, 1u << 30);
        crc = crc32(crc, bytes.data() + at, static_cast<uInt>(len));
        at += len;
    }
    return static_cast<std::uint32_t>(crc);
}

std::vector<std::uint64_t> cst_words(const CstParts& c) {
    const std::size_t n = c.text.size();
    std::vector<std::uint64_t> text_words((n + 7) / 8, 0);
    for (std::size_t i = 0; i < n; ++i) text_words[i / 8] |= std::uint64_t{static_cast<unsigned char>(c.text[i])} << (8 * (i % 8));
    std::vector<std::uint64_t> lcp(n);
    for (std::size_t i = 1; i <= n; ++i) lcp[i - 1] = static_cast<std::uint64_t>(c.lcp[i]);
    WordWriter w;
    w.put(n);
    w.put_words(text_words);
    w.put_words(std::span<const std::uint64_t>(c.sa).subspan(1));
    w.put_words(lcp);
    return w.words();
}

CstParts cst_from_words(std::span<const std::uint64_t> words) {
    WordReader r(words);
    CstParts c;
    const std::uint64_t n = r.get();
    const auto text_words = r.get_words();
    auto sa = r.get_words();
    const auto lcp = r.get_words();
    if (!r.done() || text_words.size() != (n + 7) / 8 || sa.size() != n || lcp.size() != n) {
        throw IntegrityError("index file: malformed cst section");
    }
    c.text.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.text[i] = static_cast<char>(text_words[i / 8] >> (8 * (i % 8)));
    c.sa.reserve(n + 1);
    c.sa.push_back(0);
    c.sa.insert(c.sa.end(), sa.begin(), sa.end());
    c.lcp.reserve(n + 1);
    c.lcp.push_back(0);
    for (const auto v : lcp) c.lcp.push_back(static_cast<value_t>(v));
    return c;
}

}  // namespace

IndexFile IndexFile::from_cst(const CstIndex& c) {
    return {c.queries().kernel(), CstParts{c.text(), c.sa(), c.lcp()}};
}

CstIndex IndexFile::to_cst() const {
    if (!cst) throw ConfigError("index file: no suffix tree section");
    return CstIndex::from_parts(cst->text, cst->sa, cst->lcp, index);
}

std::vector<std::uint8_t> IndexFile::serialize() const {
    const IndexSections s = index.to_sections();
    std::vector<std::uint64_t> cst_section;
    if (cst) cst_section = cst_words(*cst);
    const std::array<const std::vector<std::uint64_t>*, kSections> sections = {&s.codes, &s.topology, &s.red_fids,
                                                                               &s.auxiliaries, &cst_section};
    std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
    out.push_back(kVersion);
    put_u64(out, s.n);
    put_u64(out, s.micro_size);
    put_u64(out, s.micro_count);
    std::uint64_t offset = kHeaderBytes;
    for (const auto* sec : sections) {
        put_u64(out, offset);
        put_u64(out, sec->size() * 8);
        offset += sec->size() * 8;
    }
    for (const auto* sec : sections) {
        for (const auto w : *sec) put_u64(out, w);
    }
    const std::uint32_t crc = crc32_of(out);
    for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(crc >> (8 * b)));
    return out;
}

IndexFile IndexFile::deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderBytes + 4) throw IntegrityError("index file: truncated");
    const std::size_t body = bytes.size() - 4;
    std::uint32_t stored = 0;
    for (int b = 0; b < 4; ++b) stored |= std::uint32_t{bytes[body + static_cast<std::size_t>(b)]} << (8 * b);
    if (crc32_of(bytes.first(body)) != stored) throw IntegrityError("index file: checksum mismatch");
    if (std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) throw IntegrityError("index file: bad magic");
    if (bytes[kMagic.size()] != kVersion) throw IntegrityError("index file: unsupported version");

    std::size_t at = kMagic.size() + 1;
    IndexSections s;
    s.n = get_u64(bytes, at);
    s.micro_size = get_u64(bytes, at + 8);
    s.micro_count = get_u64(bytes, at + 16);
    at += 24;
    std::array<std::vector<std::uint64_t>, kSections> sections;
    for (auto& sec : sections) {
        const std::uint64_t off = get_u64(bytes, at), len = get_u64(bytes, at + 8);
        at += 16;
        if (off < kHeaderBytes || off > body || len > body - off || len % 8 != 0) {
            throw IntegrityError("index file: section out of bounds");
        }
        sec.resize(len / 8);
        for (std::size_t w = 0; w < sec.size(); ++w) sec[w] = get_u64(bytes, off + 8 * w);
    }
    s.codes = std::move(sections[0]);
    s.topology = std::move(sections[1]);
    s.red_fids = std::move(sections[2]);
    s.auxiliaries = std::move(sections[3]);

    IndexFile f{SuccinctLrmIndex::from_sections(s), std::nullopt};
    if (!sections[4].empty()) {
        f.cst = cst_from_words(sections[4]);
        if (f.cst->text.size() != f.index.size()) throw IntegrityError("index file: cst section disagrees with index");
    }
    return f;
}

void IndexFile::save(const std::filesystem::path& path) const {
    const auto bytes = serialize();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

IndexFile IndexFile::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

}  // namespace clrm
