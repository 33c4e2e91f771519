#pragma once

// Mining runs, evaluation sweeps and synthetic database generation.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "tnosp/core.hpp"
#include "tnosp/io.hpp"
#include "tnosp/miner.hpp"
#include "tnosp/oracle.hpp"
#include "tnosp/report.hpp"

namespace tnosp {

enum class Algorithm { tnosp, tnosp_noqmsp, heuristic, bruteforce };

inline Algorithm parse_algorithm(const std::string& name) {
    if (name == "tnosp") return Algorithm::tnosp;
    if (name == "tnosp-noqmsp") return Algorithm::tnosp_noqmsp;
    if (name == "heuristic") return Algorithm::heuristic;
    if (name == "bruteforce") return Algorithm::bruteforce;
    throw InvalidArgument("unknown algorithm: " + name);
}

inline std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::tnosp: return "tnosp";
        case Algorithm::tnosp_noqmsp: return "tnosp-noqmsp";
        case Algorithm::heuristic: return "heuristic";
        case Algorithm::bruteforce: return "bruteforce";
    }
    return "?";
}

/// Limits used when the brute-force miner is driven from the command line.
/// Patterns are allowed to reach the full sequence-length bound.
inline OracleLimits cli_oracle_limits() {
    OracleLimits limits;
    limits.max_pattern_length = limits.max_sequence_length;
    return limits;
}

struct RunConfig {
    std::string input;
    InputFormat format = InputFormat::fasta;
    std::size_t k = 10;
    GapConstraint gap{0, 5};
    LengthConstraint len{1, 20};
    Algorithm algorithm = Algorithm::tnosp;
    std::optional<std::size_t> heuristic_max_len;
    OutputFormat output = OutputFormat::json;
    std::uint64_t seed = 0;

    void validate() const {
        MiningParams{k, gap, len}.validate();
        if (heuristic_max_len && *heuristic_max_len == 0)
            throw InvalidArgument("heuristic max length must be at least 1");
    }
};

struct BenchRecord {
    RunConfig config;
    std::size_t sequences = 0;
    double runtime_ms = 0.0;  // mining call only
    double io_ms = 0.0;       // loading the database
    std::uint64_t visited_nodes = 0;
    std::vector<std::size_t> candidates_per_length;
    std::size_t result_count = 0;
    std::size_t l_max = 0;
    std::optional<double> precision;  // set only when an exact reference ran
    std::string status = "ok";

    std::size_t candidates_total() const noexcept {
        std::size_t n = 0;
        for (auto c : candidates_per_length) n += c;
        return n;
    }
};

inline nlohmann::json bench_to_json(const BenchRecord& r) {
    nlohmann::json j = {
        {"config",
         {{"input", r.config.input},
          {"format", r.config.format == InputFormat::fasta ? "fasta" : "lines"},
          {"k", r.config.k},
          {"mingap", r.config.gap.mingap},
          {"maxgap", r.config.gap.maxgap},
          {"minlen", r.config.len.minlen},
          {"maxlen", r.config.len.maxlen},
          {"algorithm", to_string(r.config.algorithm)}}},
        {"sequences", r.sequences},
        {"runtime_ms", r.runtime_ms},
        {"io_ms", r.io_ms},
        {"visited_nodes", r.visited_nodes},
        {"candidates_per_length", r.candidates_per_length},
        {"candidates_total", r.candidates_total()},
        {"result_count", r.result_count},
        {"l_max", r.l_max},
        {"status", r.status}};
    if (r.config.heuristic_max_len) j["config"]["heuristic_max_len"] = *r.config.heuristic_max_len;
    j["precision"] = r.precision ? nlohmann::json(*r.precision) : nlohmann::json(nullptr);
    return j;
}

inline BenchRecord make_record(const RunConfig& config, const SequenceDatabase& db, const MiningReport& report) {
    BenchRecord rec;
    rec.config = config;
    rec.sequences = db.size();
    rec.runtime_ms = report.metrics.runtime_ms;
    rec.visited_nodes = report.metrics.visited_nodes;
    rec.candidates_per_length = report.metrics.candidates_per_length;
    rec.result_count = report.ranked.size();
    rec.l_max = report.l_max;
    return rec;
}

/// Runs one algorithm on an in-memory database. The heuristic without an
/// explicit max length is fed the exact miner's l_max.
inline MiningReport mine_with(const SequenceDatabase& db, const RunConfig& config) {
    config.validate();
    switch (config.algorithm) {
        case Algorithm::tnosp: return tnosp_mine(db, config.k, config.gap, config.len, true);
        case Algorithm::tnosp_noqmsp: return tnosp_mine(db, config.k, config.gap, config.len, false);
        case Algorithm::bruteforce: return exhaustive_topk(db, config.k, config.gap, config.len, cli_oracle_limits());
        case Algorithm::heuristic: {
            std::size_t max_len = config.heuristic_max_len.value_or(0);
            if (max_len == 0) max_len = std::max<std::size_t>(1, tnosp_mine(db, config.k, config.gap, config.len).l_max);
            return heuristic_mine(db, config.k, max_len, config.gap, config.len);
        }
    }
    throw InvalidArgument("unknown algorithm");
}

struct MineOutcome {
    MiningReport report;
    BenchRecord record;
};

inline MineOutcome run_mine(const RunConfig& config) {
    config.validate();
    const auto t0 = std::chrono::steady_clock::now();
    SequenceDatabase db = load_database(config.input, config.format);
    const double io_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    MineOutcome out{mine_with(db, config), {}};
    out.record = make_record(config, db, out.report);
    out.record.io_ms = io_ms;
    return out;
}

struct EvalConfig {
    RunConfig base;                  // input, format and constraints
    std::vector<std::size_t> k_list{10, 20, 30, 40, 50, 60};
    std::optional<std::size_t> size_step;  // prefix sweep in this many sequences
    std::vector<Algorithm> algorithms{Algorithm::tnosp, Algorithm::tnosp_noqmsp, Algorithm::heuristic};
};

/// One row per (prefix size, k, algorithm), in config order. Precision is
/// measured against the exact miner on the same prefix and k. A failing row
/// is marked and the sweep continues.
inline std::vector<BenchRecord> run_eval(const SequenceDatabase& db, const EvalConfig& eval) {
    std::vector<std::size_t> sizes;
    if (eval.size_step && *eval.size_step > 0) {
        for (std::size_t n = *eval.size_step; n < db.size(); n += *eval.size_step) sizes.push_back(n);
    }
    sizes.push_back(db.size());

    std::vector<BenchRecord> rows;
    for (std::size_t n : sizes) {
        const SequenceDatabase part = db.prefix(n);
        for (std::size_t k : eval.k_list) {
            RunConfig cfg = eval.base;
            cfg.k = k;
            std::optional<MiningReport> exact;
            try {
                cfg.algorithm = Algorithm::tnosp;
                exact = mine_with(part, cfg);
            } catch (const std::exception&) {
                // reference failure surfaces on the rows below
            }
            for (Algorithm algo : eval.algorithms) {
                cfg.algorithm = algo;
                BenchRecord rec;
                rec.config = cfg;
                rec.sequences = part.size();
                try {
                    if (algo == Algorithm::heuristic && !cfg.heuristic_max_len && exact)
                        cfg.heuristic_max_len = std::max<std::size_t>(1, exact->l_max);
                    MiningReport report = (algo == Algorithm::tnosp && exact) ? *exact : mine_with(part, cfg);
                    rec = make_record(cfg, part, report);
                    if (exact) rec.precision = precision(*exact, report);
                } catch (const std::exception& e) {
                    rec.status = std::string("failed: ") + e.what();
                }
                cfg.heuristic_max_len = eval.base.heuristic_max_len;
                rows.push_back(std::move(rec));
            }
        }
    }
    return rows;
}

inline std::string eval_to_csv(const std::vector<BenchRecord>& rows) {
    std::string out =
        "sequences,k,algorithm,runtime_ms,visited_nodes,candidates_total,result_count,l_max,precision,status\n";
    for (const auto& r : rows) {
        out += std::to_string(r.sequences) + ',' + std::to_string(r.config.k) + ',' + to_string(r.config.algorithm) +
               ',' + std::to_string(r.runtime_ms) + ',' + std::to_string(r.visited_nodes) + ',' +
               std::to_string(r.candidates_total()) + ',' + std::to_string(r.result_count) + ',' +
               std::to_string(r.l_max) + ',' + (r.precision ? std::to_string(*r.precision) : std::string()) + ',' +
               '"' + r.status + '"' + '\n';
    }
    return out;
}

inline nlohmann::json eval_to_json(const std::vector<BenchRecord>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) arr.push_back(bench_to_json(r));
    return arr;
}

struct SynthConfig {
    std::size_t alphabet_size = 4;
    std::size_t count = 10;
    std::size_t min_length = 50;
    std::size_t max_length = 50;
    std::string motif;                 // empty disables planting
    GapConstraint motif_gap{0, 2};
    std::size_t motif_copies = 2;      // per sequence, when it fits
    std::uint64_t seed = 0;

    void validate() const {
        if (alphabet_size == 0 || alphabet_size > 26) throw InvalidArgument("alphabet size must be in 1..26");
        if (count == 0) throw InvalidArgument("sequence count must be positive");
        if (min_length == 0 || min_length > max_length) throw InvalidArgument("invalid sequence length range");
        motif_gap.validate();
    }
};

/// The first `size` symbols of ACGT followed by the remaining capital letters.
inline std::string synthetic_alphabet(std::size_t size) {
    std::string symbols = "ACGT";
    for (char c = 'A'; c <= 'Z'; ++c)
        if (symbols.find(c) == std::string::npos) symbols.push_back(c);
    return symbols.substr(0, size);
}

/// Uniform random sequences, optionally with a planted gapped motif.
/// Deterministic for a fixed seed on a given standard library.
inline SequenceDatabase gen_synthetic(const SynthConfig& cfg) {
    cfg.validate();
    const std::string alphabet = synthetic_alphabet(cfg.alphabet_size);
    for (char c : cfg.motif)
        if (alphabet.find(c) == std::string::npos)
            throw InvalidArgument(std::string("motif item '") + c + "' is outside the alphabet");

    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&rng](std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
    };

    std::vector<Sequence> seqs;
    seqs.reserve(cfg.count);
    for (std::size_t s = 0; s < cfg.count; ++s) {
        std::string items(uniform(cfg.min_length, cfg.max_length), ' ');
        for (auto& c : items) c = alphabet[uniform(0, alphabet.size() - 1)];

        if (!cfg.motif.empty()) {
            for (std::size_t copy = 0; copy < cfg.motif_copies; ++copy) {
                std::vector<std::size_t> gaps(cfg.motif.size() - 1);
                std::size_t span = 1;
                for (auto& g : gaps) {
                    g = uniform(cfg.motif_gap.mingap, cfg.motif_gap.maxgap);
                    span += g + 1;
                }
                if (span > items.size()) break;
                std::size_t pos = uniform(0, items.size() - span);
                items[pos] = cfg.motif[0];
                for (std::size_t j = 1; j < cfg.motif.size(); ++j) {
                    pos += gaps[j - 1] + 1;
                    items[pos] = cfg.motif[j];
                }
            }
        }
        seqs.push_back({"seq" + std::to_string(s + 1), std::move(items)});
    }
    return SequenceDatabase(std::move(seqs));
}

}  // namespace tnosp
