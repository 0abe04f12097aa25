// clrm: build, query and measure psv/nsv/rmq indices.
//
// Exit codes: 0 success, 1 some queries failed, 2 usage or format error.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "clrm/bench.hpp"
#include "clrm/index_file.hpp"
#include "clrm/queries.hpp"

namespace {

using namespace clrm;

constexpr int kQueryError = 1;
constexpr int kFormatError = 2;

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class T>
bool parse_number(std::string_view tok, T& out) {
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<value_t> read_ints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::vector<value_t> values;
    std::string line, tok;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        std::istringstream words(line);
        while (words >> tok) {
            value_t v = 0;
            if (!parse_number(tok, v)) throw FormatError(path + ":" + std::to_string(lineno) + ": not an integer: " + tok);
            values.push_back(v);
        }
    }
    return values;
}

std::string read_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct BuildArgs {
    std::string ints, text, out;
    std::size_t micro_size = 0;
};

int cmd_build(const BuildArgs& a) {
    IndexFile f;
    if (!a.text.empty()) {
        std::string text = read_bytes(a.text);
        if (text.empty()) throw FormatError("empty text: " + a.text);
        f = IndexFile::from_cst(CstIndex::build(std::move(text), a.micro_size));
    } else {
        const auto tree = ColoredLrmTree::build(ValueArray(read_ints(a.ints)));
        const std::size_t B = a.micro_size == 0 ? default_micro_size(tree.size()) : a.micro_size;
        f.index = SuccinctLrmIndex::encode(tree, B);
    }
    f.save(a.out);
    std::cout << f.index.space_report().to_text();
    return 0;
}

// Answers one query line; std::nullopt means the line is malformed.
std::optional<std::string> answer(const SuccinctQueryIndex& q, const std::vector<std::string>& words) {
    if (words.empty()) return std::nullopt;
    const std::string& op = words[0];
    const std::size_t arity = op == "rmq" ? 2 : (op == "psv" || op == "nsv") ? 1 : 0;
    if (arity == 0 || words.size() != arity + 1) return std::nullopt;
    std::size_t args[2] = {0, 0};
    for (std::size_t k = 0; k < arity; ++k) {
        if (!parse_number(words[k + 1], args[k])) return std::nullopt;
    }
    try {
        node_t r = 0;
        if (op == "psv") r = q.psv(args[0]);
        else if (op == "nsv") r = q.nsv(args[0]);
        else r = q.rmq(args[0], args[1]);
        return std::to_string(r);
    } catch (const DomainError&) {
        return std::string("ERR");
    }
}

int cmd_query(const std::string& index, const std::vector<std::string>& op, const std::string& batch) {
    const SuccinctQueryIndex q(IndexFile::load(index).index);
    bool failed = false;
    const auto run = [&](const std::vector<std::string>& words, const std::string& where) {
        const auto out = answer(q, words);
        if (!out) throw FormatError(where + ": malformed query");
        failed |= *out == "ERR";
        std::cout << *out << '\n';
    };
    if (!op.empty()) run(op, "--op");
    if (!batch.empty()) {
        std::ifstream file;
        if (batch != "-") {
            file.open(batch);
            if (!file) throw FormatError("cannot open " + batch);
        }
        std::istream& in = batch == "-" ? std::cin : file;
        std::string line, tok;
        for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
            std::istringstream ws(line);
            std::vector<std::string> words;
            while (ws >> tok) words.push_back(tok);
            if (words.empty()) continue;
            run(words, "line " + std::to_string(lineno));
        }
    }
    return failed ? kQueryError : 0;
}

int cmd_stats(const std::string& index) {
    const IndexFile f = IndexFile::load(index);
    std::cout << f.index.space_report().to_text();
    if (f.cst) std::cout << "text_length=" << f.cst->text.size() << '\n';
    return 0;
}

int cmd_bench(const BenchConfig& cfg) {
    for (const BenchRow& row : run_bench(cfg)) std::cout << row.to_text() << std::endl;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compact psv/nsv/rmq indices and suffix-tree navigation"};
    app.require_subcommand(1);

    BuildArgs build;
    auto* b = app.add_subcommand("build", "Build an index file");
    auto* ints = b->add_option("--ints", build.ints, "ASCII integers separated by whitespace");
    auto* text = b->add_option("--text", build.text, "raw bytes; the index is built over the LCP array");
    ints->excludes(text);
    b->add_option("--micro-size", build.micro_size, "micro-tree size B (0: default)");
    b->add_option("-o", build.out, "output index file")->required();

    std::string index, batch;
    std::vector<std::string> op;
    auto* q = app.add_subcommand("query", "Answer psv/nsv/rmq queries");
    q->add_option("-i", index, "index file")->required();
    q->add_option("--op", op, "psv i | nsv i | rmq i j")->expected(2, 3);
    q->add_option("--batch", batch, "query file, one query per line; - for stdin");

    auto* s = app.add_subcommand("stats", "Print the space report");
    s->add_option("-i", index, "index file")->required();

    BenchConfig cfg;
    auto* bench = app.add_subcommand("bench", "Time queries on random arrays of size 2^k");
    bench->add_option("--min-log", cfg.min_log)->required();
    bench->add_option("--max-log", cfg.max_log)->required();
    bench->add_option("--queries", cfg.queries, "queries per operation and size")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kFormatError;
    }
    if (b->parsed() && build.ints.empty() && build.text.empty()) {
        std::cerr << "build: one of --ints or --text is required\n";
        return kFormatError;
    }
    if (q->parsed() && op.empty() && batch.empty()) {
        std::cerr << "query: give --op or --batch\n";
        return kFormatError;
    }

    try {
        if (b->parsed()) return cmd_build(build);
        if (q->parsed()) return cmd_query(index, op, batch);
        if (s->parsed()) return cmd_stats(index);
        return cmd_bench(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFormatError;
    }
}
