// tnosp: mine top-k non-overlapping sequential patterns, run evaluation
// sweeps, and generate synthetic databases.
//
// Exit codes: 0 success, 1 usage/config error, 2 input parse error,
// 3 oracle limits exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tnosp/bench.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kLimits = 3 };

struct Options {
    tnosp::RunConfig run;
    std::string format = "fasta";
    std::string algorithm = "tnosp";
    std::string output = "json";
    std::string stats;
    std::size_t heuristic_max_len = 0;

    std::vector<std::size_t> k_list{10, 20, 30, 40, 50, 60};
    std::size_t size_step = 0;
    std::string out;

    tnosp::SynthConfig synth;
    std::size_t length = 50;
    std::vector<std::size_t> motif_gap{0, 2};
};

void add_constraints(CLI::App* cmd, Options& o) {
    cmd->add_option("--mingap", o.run.gap.mingap, "minimum items between adjacent matches")->capture_default_str();
    cmd->add_option("--maxgap", o.run.gap.maxgap, "maximum items between adjacent matches")->capture_default_str();
    cmd->add_option("--minlen", o.run.len.minlen, "minimum occurrence span")->capture_default_str();
    cmd->add_option("--maxlen", o.run.len.maxlen, "maximum occurrence span")->capture_default_str();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw tnosp::InvalidArgument("cannot write " + path);
    return f;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_mine(Options& o) {
    o.run.format = tnosp::parse_input_format(o.format);
    o.run.algorithm = tnosp::parse_algorithm(o.algorithm);
    o.run.output = tnosp::parse_output_format(o.output);
    if (o.heuristic_max_len) o.run.heuristic_max_len = o.heuristic_max_len;

    auto outcome = tnosp::run_mine(o.run);
    tnosp::write_report(std::cout, outcome.report, o.run.output);

    const std::string record = tnosp::bench_to_json(outcome.record).dump();
    if (o.stats.empty()) {
        std::cerr << record << '\n';
    } else {
        auto f = open_out(o.stats);
        f << record << '\n';
    }
    return kOk;
}

int run_eval(Options& o) {
    o.run.format = tnosp::parse_input_format(o.format);
    tnosp::EvalConfig eval;
    eval.base = o.run;
    eval.k_list = o.k_list;
    if (o.size_step) eval.size_step = o.size_step;

    const tnosp::SequenceDatabase db = tnosp::load_database(o.run.input, o.run.format);
    const auto rows = tnosp::run_eval(db, eval);

    auto f = open_out(o.out);
    if (ends_with(o.out, ".json"))
        f << tnosp::eval_to_json(rows).dump(2) << '\n';
    else
        f << tnosp::eval_to_csv(rows);
    return kOk;
}

int run_gen(Options& o) {
    if (o.motif_gap.size() != 2) throw tnosp::InvalidArgument("--motif-gap expects two values a,b");
    o.synth.min_length = o.synth.max_length = o.length;
    o.synth.motif_gap = {o.motif_gap[0], o.motif_gap[1]};
    const auto db = tnosp::gen_synthetic(o.synth);
    auto f = open_out(o.out);
    tnosp::write_database(f, db, tnosp::parse_input_format(o.format));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Top-k non-overlapping sequential pattern mining"};
    app.require_subcommand(1);
    Options o;

    auto* mine = app.add_subcommand("mine", "mine the top-k patterns of a database");
    mine->add_option("--input", o.run.input, "database file")->required();
    mine->add_option("--format", o.format, "fasta | lines")->capture_default_str();
    mine->add_option("--k", o.run.k, "number of patterns")->capture_default_str();
    add_constraints(mine, o);
    mine->add_option("--algorithm", o.algorithm, "tnosp | tnosp-noqmsp | heuristic | bruteforce")
        ->capture_default_str();
    mine->add_option("--heuristic-max-len", o.heuristic_max_len,
                     "max pattern length for the heuristic (default: exact l_max)");
    mine->add_option("--output", o.output, "json | csv")->capture_default_str();
    mine->add_option("--stats", o.stats, "write the bench record here instead of stderr");

    auto* eval = app.add_subcommand("eval", "precision / runtime sweep over k and database prefixes");
    eval->add_option("--input", o.run.input, "database file")->required();
    eval->add_option("--format", o.format, "fasta | lines")->capture_default_str();
    eval->add_option("--k-list", o.k_list, "comma-separated k values")->delimiter(',')->capture_default_str();
    eval->add_option("--size-step", o.size_step, "prefix sweep step in sequences");
    add_constraints(eval, o);
    eval->add_option("--out", o.out, "output table (.json or .csv)")->required();

    auto* gen = app.add_subcommand("gen", "generate a synthetic database");
    gen->add_option("--alphabet", o.synth.alphabet_size, "alphabet size (1..26)")->capture_default_str();
    gen->add_option("--count", o.synth.count, "number of sequences")->capture_default_str();
    gen->add_option("--len", o.length, "sequence length")->capture_default_str();
    gen->add_option("--motif", o.synth.motif, "motif to plant");
    gen->add_option("--motif-gap", o.motif_gap, "gap window a,b for the planted motif")->delimiter(',');
    gen->add_option("--copies", o.synth.motif_copies, "motif copies per sequence")->capture_default_str();
    gen->add_option("--seed", o.synth.seed, "random seed")->capture_default_str();
    gen->add_option("--format", o.format, "fasta | lines")->capture_default_str();
    gen->add_option("--out", o.out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*mine) return run_mine(o);
        if (*eval) return run_eval(o);
        if (*gen) return run_gen(o);
    } catch (const tnosp::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const tnosp::LimitsError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kLimits;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
