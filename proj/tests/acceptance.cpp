// Acceptance run: one PASS/FAIL line per criterion. With arguments, runs only
// the listed criteria (1..9). Exit status is 0 iff every criterion run passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clrm/bench.hpp"
#include "clrm/index_file.hpp"
#include "clrm/oracle.hpp"
#include "clrm/queries.hpp"
#include "clrm/schroeder.hpp"
#include "clrm/succinct.hpp"
#include "cst_compare.hpp"

using namespace clrm;

namespace {

// Tolerances.
constexpr double kLgRhoExpected = 2.5431;
constexpr double kLgRhoTolerance = 1e-4;
constexpr double kTrendNoise = 0.10;        // bits/element may rise by at most 10% between sizes
constexpr double kLatencyGrowthLimit = 2.0;  // median 2^22 over median 2^16
constexpr std::size_t kMaxTernaryLength = 9;
constexpr std::size_t kRandomArrays = 1000;
constexpr std::size_t kRandomLength = 10000;
constexpr std::size_t kRmqPairs = 10000;
constexpr std::size_t kRandomTexts = 200;
constexpr std::size_t kMaxTextLength = 2000;

struct Outcome {
    bool pass = true;
    std::string detail;
};

ValueArray ternary(std::size_t n, std::size_t code) {
    std::vector<value_t> v(n);
    for (auto& x : v) {
        x = static_cast<value_t>(code % 3);
        code /= 3;
    }
    return ValueArray(std::move(v));
}

void for_each_ternary(const std::function<void(const ValueArray&)>& f) {
    std::size_t total = 1;
    for (std::size_t n = 0; n <= kMaxTernaryLength; ++n, total *= 3) {
        for (std::size_t code = 0; code < total; ++code) f(ternary(n, code));
    }
}

SuccinctQueryIndex succinct(const ValueArray& a, std::size_t B = 0) {
    const ColoredLrmTree t = ColoredLrmTree::build(a);
    return SuccinctQueryIndex(B == 0 ? SuccinctLrmIndex::encode(t) : SuccinctLrmIndex::encode(t, B));
}

const char* kDistributions[] = {"uniform64", "binary", "all-equal", "sorted", "reverse-sorted"};

ValueArray random_array(std::size_t dist, std::size_t n, std::mt19937_64& rng) {
    std::vector<value_t> v(n);
    switch (dist) {
        case 0:
            for (auto& x : v) x = static_cast<value_t>(rng());
            break;
        case 1:
            for (auto& x : v) x = static_cast<value_t>(rng() & 1);
            break;
        case 2:
            std::fill(v.begin(), v.end(), static_cast<value_t>(rng() % 1000));
            break;
        default:
            for (auto& x : v) x = static_cast<value_t>(rng() % (4 * n));
            std::sort(v.begin(), v.end());
            if (dist == 4) std::reverse(v.begin(), v.end());
    }
    return ValueArray(std::move(v));
}

// Array k of the randomized battery; the same k always gives the same array.
ValueArray battery_array(std::size_t k) {
    std::mt19937_64 rng(0x5eed0000 + k);
    return random_array(k % 5, kRandomLength, rng);
}

// All psv/nsv and kRmqPairs rmq pairs against the sparse-table oracle.
std::size_t battery_mismatches(const SuccinctQueryIndex& q, const ValueArray& a, std::size_t k) {
    const SparseTableOracle o(a);
    const std::size_t n = a.size();
    std::size_t bad = q.size() == n ? 0 : 1;
    for (std::size_t i = 1; i <= n; ++i) {
        bad += q.psv(i) != o.psv(i);
        bad += q.nsv(i) != o.nsv(i);
    }
    std::mt19937_64 rng(0xabc00000 + k);
    for (std::size_t t = 0; t < kRmqPairs; ++t) {
        std::size_t i = 1 + rng() % n, j = 1 + rng() % n;
        if (i > j) std::swap(i, j);
        bad += q.rmq(i, j) != o.rmq(i, j);
    }
    return bad;
}

Outcome exhaustive_oracle() {
    std::size_t arrays = 0, queries = 0, bad = 0;
    for_each_ternary([&](const ValueArray& a) {
        ++arrays;
        const std::size_t n = a.size();
        for (const std::size_t B : {std::size_t{0}, std::size_t{1}, std::size_t{3}}) {
            const auto q = succinct(a, B);
            for (std::size_t i = 1; i <= n; ++i) {
                bad += q.psv(i) != psv_scan(a, i);
                bad += q.nsv(i) != nsv_scan(a, i);
                queries += 2;
                for (std::size_t j = i; j <= n; ++j, ++queries) bad += q.rmq(i, j) != rmq_scan(a, i, j);
            }
        }
    });
    std::ostringstream d;
    d << arrays << " arrays, B in {default,1,3}, " << queries << " queries, " << bad << " mismatches";
    return {bad == 0 && arrays == 29524, d.str()};
}

Outcome randomized_oracle() {
    std::size_t bad = 0, failing = 0;
    for (std::size_t k = 0; k < kRandomArrays; ++k) {
        const ValueArray a = battery_array(k);
        const std::size_t b = battery_mismatches(succinct(a), a, k);
        bad += b;
        failing += b != 0;
    }
    std::ostringstream d;
    d << kRandomArrays << " arrays of n=" << kRandomLength << " over " << std::size(kDistributions) << " distributions, "
      << bad << " mismatches in " << failing << " arrays";
    return {bad == 0, d.str()};
}

Outcome reconstruction() {
    std::size_t arrays = 0, bad = 0;
    for_each_ternary([&](const ValueArray& a) {
        ++arrays;
        bad += !(reconstruct(succinct(a), a.size()) == ColoredLrmTree::build(a));
    });
    std::ostringstream d;
    d << arrays << " arrays, " << bad << " mismatched trees";
    return {bad == 0, d.str()};
}

Outcome bijection() {
    const std::vector<std::size_t> expect{1, 1, 3, 11, 45, 197, 903, 4279};
    const SchroederCodec& codec = default_codec();
    std::size_t bad = 0;
    std::ostringstream d;
    for (std::size_t m = 1; m <= expect.size(); ++m) {
        const auto count = static_cast<std::size_t>(codec.count(m));
        bad += count != expect[m - 1];
        std::set<std::pair<std::vector<node_t>, std::vector<bool>>> seen;
        for (std::size_t r = 0; r < count; ++r) {
            const ColoredLrmTree t = codec.unrank(m, r);
            bad += codec.rank(t) != r;
            bad += !(ColoredLrmTree::build(canonical_array(t)) == t);
            std::vector<node_t> p(m, 0);
            std::vector<bool> red(m, false);
            for (node_t v = 1; v < m; ++v) {
                p[v] = t.parent(v);
                red[v] = t.is_red(v);
            }
            seen.emplace(std::move(p), std::move(red));
        }
        bad += seen.size() != expect[m - 1];
        d << (m == 1 ? "C = " : ",") << seen.size();
    }
    d << "; " << bad << " failures";
    return {bad == 0, d.str()};
}

Outcome payload_bound() {
    std::size_t indexes = 0, bad = 0;
    double worst = 0;  // largest payload - (n lg rho + micro_count)
    auto audit = [&](const SuccinctLrmIndex& idx) {
        const SpaceReport r = idx.space_report();
        ++indexes;
        bad += !r.payload_within_bound();
        const double slack = static_cast<double>(r.payload_bits) - static_cast<double>(r.n) * kLgRho - static_cast<double>(r.micro_count);
        if (indexes == 1 || slack > worst) worst = slack;
    };
    for_each_ternary([&](const ValueArray& a) {
        const ColoredLrmTree t = ColoredLrmTree::build(a);
        audit(SuccinctLrmIndex::encode(t));
        audit(SuccinctLrmIndex::encode(t, 2));
    });
    std::mt19937_64 rng(55);
    for (std::size_t k = 0; k < 200; ++k) {
        const ColoredLrmTree t = ColoredLrmTree::build(random_array(k % 5, 1 + rng() % 5000, rng));
        audit(SuccinctLrmIndex::encode(t));
        audit(SuccinctLrmIndex::encode(t, 1 + rng() % kMaxCodecSize));
    }
    audit(SuccinctLrmIndex::encode(ColoredLrmTree::build(random_array(0, std::size_t{1} << 20, rng))));
    const bool constant_ok = std::abs(kLgRho - kLgRhoExpected) <= kLgRhoTolerance;
    std::ostringstream d;
    d.precision(6);
    d << "lg(3+2sqrt2)=" << kLgRho << ", " << indexes << " indexes, " << bad << " over the bound, worst slack " << worst
      << " bits";
    return {bad == 0 && constant_ok, d.str()};
}

Outcome space_trend() {
    std::mt19937_64 rng(66);
    std::vector<double> per_element, overhead;
    std::ostringstream d;
    d.precision(4);
    for (unsigned lg = 12; lg <= 22; lg += 2) {
        const std::size_t n = std::size_t{1} << lg;
        const SpaceReport r =
            SuccinctLrmIndex::encode(ColoredLrmTree::build(random_array(0, n, rng))).space_report();
        per_element.push_back(r.per_element(r.total_bits));
        overhead.push_back(static_cast<double>(r.total_bits - r.payload_bits) / static_cast<double>(r.total_bits));
        d << (lg == 12 ? "" : " ") << "2^" << lg << ":B=" << r.micro_size << ",bpe=" << per_element.back()
          << ",share=" << overhead.back();
    }
    bool ok = true;
    for (std::size_t k = 1; k < per_element.size(); ++k) {
        ok = ok && per_element[k] <= per_element[k - 1] * (1 + kTrendNoise);
        ok = ok && overhead[k] < overhead[k - 1];
    }
    return {ok, d.str()};
}

Outcome cst_equivalence() {
    std::size_t texts = 0, bad = 0;
    std::string first;
    auto run = [&](const std::string& text) {
        ++texts;
        std::string why;
        const std::size_t m = testing::cst_mismatches(text, &why);
        if (m != 0 && first.empty()) first = why;
        bad += m;
    };
    run("mississippi");
    run("aab");
    std::mt19937_64 rng(77);
    const int sigmas[] = {2, 4, 26};
    for (std::size_t k = 0; k < kRandomTexts; ++k) {
        const int sigma = sigmas[k % 3];
        std::string text(1 + rng() % kMaxTextLength, 'a');
        for (auto& c : text) c = static_cast<char>('a' + rng() % static_cast<unsigned>(sigma));
        run(text);
    }
    std::ostringstream d;
    d << texts << " texts, " << bad << " mismatches";
    if (!first.empty()) d << "; first: " << first;
    return {bad == 0, d.str()};
}

Outcome latency_growth() {
    BenchConfig cfg;
    cfg.min_log = 16;
    cfg.max_log = 22;
    cfg.rounds = 5;
    const std::vector<BenchRow> rows = run_bench(cfg);
    const BenchRow& lo = rows.front();
    const BenchRow& hi = rows.back();
    const double ratios[] = {hi.psv.median_ns / lo.psv.median_ns, hi.nsv.median_ns / lo.nsv.median_ns,
                             hi.rmq.median_ns / lo.rmq.median_ns};
    const char* names[] = {"psv", "nsv", "rmq"};
    std::ostringstream d;
    d.precision(3);
    bool ok = true;
    for (int k = 0; k < 3; ++k) {
        ok = ok && ratios[k] <= kLatencyGrowthLimit;
        d << (k == 0 ? "" : ", ") << names[k] << " x" << ratios[k];
    }
    d << " (medians ns at 2^16/2^22: " << lo.psv.median_ns << "/" << hi.psv.median_ns << ", " << lo.nsv.median_ns << "/"
      << hi.nsv.median_ns << ", " << lo.rmq.median_ns << "/" << hi.rmq.median_ns << ")";
    return {ok, d.str()};
}

// Number of single-bit flips of `bytes` that deserialize without an error.
std::size_t accepted_flips(std::vector<std::uint8_t> bytes) {
    std::size_t accepted = 0;
    for (std::size_t bit = 0; bit < bytes.size() * 8; ++bit) {
        bytes[bit / 8] ^= static_cast<std::uint8_t>(1U << (bit % 8));
        try {
            (void)IndexFile::deserialize(bytes);
            ++accepted;
        } catch (const IntegrityError&) {
        }
        bytes[bit / 8] ^= static_cast<std::uint8_t>(1U << (bit % 8));
    }
    return accepted;
}

Outcome serialization() {
    const std::filesystem::path path = std::filesystem::temp_directory_path() / "clrm_acceptance.clrm";
    std::size_t bad = 0;
    for (std::size_t k = 0; k < kRandomArrays; ++k) {
        const ValueArray a = battery_array(k);
        IndexFile f{SuccinctLrmIndex::encode(ColoredLrmTree::build(a)), std::nullopt};
        f.save(path);
        bad += battery_mismatches(SuccinctQueryIndex(IndexFile::load(path).index), a, k);
    }
    std::filesystem::remove(path);

    std::mt19937_64 rng(99);
    std::string text(300, 'a');
    for (auto& c : text) c = static_cast<char>('a' + rng() % 4);
    const std::vector<std::vector<std::uint8_t>> files{
        IndexFile{SuccinctLrmIndex::encode(ColoredLrmTree::build(random_array(0, 1000, rng))), std::nullopt}.serialize(),
        IndexFile{SuccinctLrmIndex::encode(ColoredLrmTree::build(random_array(1, 500, rng)), 3), std::nullopt}.serialize(),
        IndexFile{SuccinctLrmIndex::encode(ColoredLrmTree{}), std::nullopt}.serialize(),
        IndexFile::from_cst(CstIndex::build(text)).serialize()};
    std::size_t flips = 0, accepted = 0;
    for (const auto& bytes : files) {
        flips += bytes.size() * 8;
        accepted += accepted_flips(bytes);
    }
    std::ostringstream d;
    d << kRandomArrays << " reloaded indexes, " << bad << " query mismatches; " << flips << " single-bit flips over "
      << files.size() << " files, " << accepted << " accepted";
    return {bad == 0 && accepted == 0, d.str()};
}

struct Criterion {
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"exhaustive oracle equivalence", exhaustive_oracle},
    {"randomized oracle equivalence", randomized_oracle},
    {"reconstruction round trip", reconstruction},
    {"Schroeder bijection", bijection},
    {"payload bound", payload_bound},
    {"redundancy trend", space_trend},
    {"suffix tree equivalence", cst_equivalence},
    {"latency growth", latency_growth},
    {"serialization", serialization},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> which;
    for (int k = 1; k < argc; ++k) {
        const long c = std::strtol(argv[k], nullptr, 10);
        if (c < 1 || c > static_cast<long>(std::size(kCriteria))) {
            std::fprintf(stderr, "usage: %s [criterion 1..9]...\n", argv[0]);
            return 2;
        }
        which.push_back(static_cast<std::size_t>(c));
    }
    if (which.empty()) {
        for (std::size_t c = 1; c <= std::size(kCriteria); ++c) which.push_back(c);
    }
    bool all = true;
    for (const std::size_t c : which) {
        const Criterion& crit = kCriteria[c - 1];
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = crit.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::printf("criterion %zu %s: %s (%s) [%.1fs]\n", c, crit.name, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
