#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "clrm/cst.hpp"
#include "clrm/succinct.hpp"

namespace clrm {

/// Text, suffix array and LCP array stored next to an index built over the LCP
/// array. Arrays are 1-based; entry 0 is unused.
struct CstParts {
    std::string text;
    std::vector<std::uint64_t> sa;
    std::vector<value_t> lcp;
};

/// Contents of a "CLRM" container.
///
/// Layout: "CLRM", version byte, then little-endian u64 fields n, B, micro-tree
/// count and a table of (offset, length) byte pairs for the sections codes,
/// topology, red_fids, auxiliaries and cst. Sections are arrays of little-endian
/// u64 words; cst has length 0 when absent. A CRC-32 of all preceding bytes ends
/// the file. Shape tables are not stored; they are rebuilt from B.
struct IndexFile {
    static constexpr std::uint8_t kVersion = 1;

    SuccinctLrmIndex index;
    std::optional<CstParts> cst;

    static IndexFile from_cst(const CstIndex& c);
    /// Reassembles the suffix tree; requires a cst section.
    [[nodiscard]] CstIndex to_cst() const;

    [[nodiscard]] std::vector<std::uint8_t> serialize() const;
    /// Throws IntegrityError on any malformed or corrupted input.
    static IndexFile deserialize(std::span<const std::uint8_t> bytes);

    void save(const std::filesystem::path& path) const;
    static IndexFile load(const std::filesystem::path& path);
};

}  // namespace clrm
