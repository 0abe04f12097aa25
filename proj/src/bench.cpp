#include "clrm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "clrm/queries.hpp"

namespace clrm {

namespace {

using Clock = std::chrono::steady_clock;

volatile std::uint64_t g_sink = 0;

template <class Fn>
LatencyStats time_round(std::size_t queries, Fn& run_one) {
    const std::size_t batches = std::max<std::size_t>(1, queries / BenchConfig::kBatch);
    std::vector<double> per_query(batches);
    std::uint64_t sink = 0;
    std::size_t q = 0;
    for (std::size_t b = 0; b < batches; ++b) {
        const auto t0 = Clock::now();
        for (std::size_t k = 0; k < BenchConfig::kBatch; ++k) sink += run_one(q++ % queries);
        const std::chrono::duration<double, std::nano> dt = Clock::now() - t0;
        per_query[b] = dt.count() / BenchConfig::kBatch;
    }
    g_sink = sink;
    std::sort(per_query.begin(), per_query.end());
    const auto at = [&](double p) { return per_query[std::min(batches - 1, static_cast<std::size_t>(p * static_cast<double>(batches)))]; };
    return {at(0.5), at(0.99)};
}

// The round with the smallest median; the others absorb interference.
template <class Fn>
LatencyStats time_queries(const BenchConfig& cfg, Fn&& run_one) {
    std::uint64_t sink = 0;
    for (std::size_t k = 0; k < cfg.queries; ++k) sink += run_one(k);  // warm-up
    g_sink = sink;
    LatencyStats best = time_round(cfg.queries, run_one);
    for (unsigned r = 1; r < cfg.rounds; ++r) {
        const LatencyStats s = time_round(cfg.queries, run_one);
        if (s.median_ns < best.median_ns) best = s;
    }
    return best;
}

}  // namespace

std::string BenchRow::to_text() const {
    std::ostringstream out;
    out << "log_n=" << log_n << " n=" << n << " B=" << micro_size << " build_s=" << build_seconds
        << " psv_median_ns=" << psv.median_ns << " psv_p99_ns=" << psv.p99_ns << " nsv_median_ns=" << nsv.median_ns
        << " nsv_p99_ns=" << nsv.p99_ns << " rmq_median_ns=" << rmq.median_ns << " rmq_p99_ns=" << rmq.p99_ns
        << " bits_per_element=" << bits_per_element;
    return out.str();
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
    if (cfg.min_log > cfg.max_log || cfg.max_log > 24) throw ConfigError("bench: need min_log <= max_log <= 24");
    std::mt19937_64 rng(cfg.seed);
    std::vector<BenchRow> rows;
    for (unsigned lg = cfg.min_log; lg <= cfg.max_log; ++lg) {
        const std::size_t n = std::size_t{1} << lg;
        std::vector<value_t> values(n);
        for (auto& v : values) v = static_cast<value_t>(rng());

        const auto t0 = Clock::now();
        const SuccinctQueryIndex q(SuccinctLrmIndex::encode(ColoredLrmTree::build(ValueArray(values))));
        BenchRow row;
        row.build_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        row.log_n = lg;
        row.n = n;
        row.micro_size = q.kernel().micro_size();
        row.bits_per_element = q.kernel().space_report().per_element(q.kernel().space_report().total_bits);

        std::uniform_int_distribution<std::size_t> pos(1, n);
        std::vector<std::size_t> a(cfg.queries), b(cfg.queries);
        for (std::size_t k = 0; k < cfg.queries; ++k) {
            a[k] = pos(rng);
            b[k] = pos(rng);
            if (a[k] > b[k]) std::swap(a[k], b[k]);
        }
        row.psv = time_queries(cfg, [&](std::size_t k) { return q.psv(a[k]); });
        row.nsv = time_queries(cfg, [&](std::size_t k) { return q.nsv(a[k]); });
        row.rmq = time_queries(cfg, [&](std::size_t k) { return q.rmq(a[k], b[k]); });
        rows.push_back(row);
    }
    return rows;
}

}  // namespace clrm
