#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clrm {

struct LatencyStats {
    double median_ns = 0;
    double p99_ns = 0;
};

struct BenchRow {
    unsigned log_n = 0;
    std::size_t n = 0;
    std::size_t micro_size = 0;
    double build_seconds = 0;
    LatencyStats psv, nsv, rmq;
    double bits_per_element = 0;

    /// One line of key=value pairs.
    [[nodiscard]] std::string to_text() const;
};

/// Uniform random arrays of size 2^k for k in [min_log, max_log], default micro
/// size. Latencies are per query, measured over batches of kBatch queries; each
/// operation runs `rounds` times and the round with the lowest median is kept.
struct BenchConfig {
    static constexpr std::size_t kBatch = 32;
    unsigned min_log = 16;
    unsigned max_log = 22;
    std::size_t queries = 100000;
    unsigned rounds = 3;
    std::uint64_t seed = 1;
};

/// Throws ConfigError unless min_log <= max_log <= 24.
std::vector<BenchRow> run_bench(const BenchConfig& cfg);

}  // namespace clrm
