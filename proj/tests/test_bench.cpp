#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tnosp/bench.hpp"

using namespace tnosp;

namespace {

RunConfig walkthrough_config(Algorithm algo) {
    RunConfig cfg;
    cfg.input = std::string(TNOSP_DATA_DIR) + "/walkthrough.txt";
    cfg.format = InputFormat::lines;
    cfg.k = 3;
    cfg.gap = {0, 3};
    cfg.len = {1, 9};
    cfg.algorithm = algo;
    cfg.output = OutputFormat::csv;
    return cfg;
}

}  // namespace

TEST(RunMine, WalkthroughCsv) {
    auto out = run_mine(walkthrough_config(Algorithm::tnosp));
    EXPECT_EQ(report_to_csv(out.report), "pattern,support,length\nA,3,1\nC,3,1\nAC,3,2\n");
    EXPECT_EQ(out.record.result_count, 3u);
    EXPECT_EQ(out.record.l_max, 2u);
    EXPECT_EQ(out.record.sequences, 1u);
    EXPECT_FALSE(out.record.precision.has_value());
}

TEST(RunMine, BruteforceAndNoQmspAgree) {
    auto tnosp = run_mine(walkthrough_config(Algorithm::tnosp));
    auto brute = run_mine(walkthrough_config(Algorithm::bruteforce));
    auto noqmsp = run_mine(walkthrough_config(Algorithm::tnosp_noqmsp));
    EXPECT_EQ(report_to_csv(brute.report), report_to_csv(tnosp.report));
    EXPECT_EQ(report_to_csv(noqmsp.report), report_to_csv(tnosp.report));
    EXPECT_GE(noqmsp.record.candidates_total(), tnosp.record.candidates_total());
}

TEST(RunMine, VisitedNodesEqualEngineCounters) {
    auto cfg = walkthrough_config(Algorithm::tnosp);
    auto out = run_mine(cfg);
    // replay every support computation the miner performed
    auto db = load_database(cfg.input, cfg.format);
    std::uint64_t visited = 0;
    std::vector<Pattern> candidates;
    for (char c : db.alphabet()) candidates.emplace_back(std::string(1, c));
    TopKHeap heap(cfg.k);
    while (!candidates.empty()) {
        FrequentArray frequent;
        for (auto& p : candidates) {
            auto s = db_support(db, p, cfg.gap, cfg.len);
            visited += s.visited_nodes;
            const auto minsup = heap.minsup();
            const bool grow = s.support > 0 && (s.support > minsup || (s.support == minsup && !heap.full()));
            if (s.support > 0) heap.offer({p, s.support});
            if (grow) frequent.entries.push_back({p, s.support});
        }
        std::erase_if(frequent.entries, [&](const RankedPattern& e) { return e.support < heap.minsup(); });
        candidates = generate_candidates(frequent);
    }
    EXPECT_EQ(out.record.visited_nodes, visited);
}

TEST(RunMine, HeuristicDefaultsToExactLmax) {
    auto out = run_mine(walkthrough_config(Algorithm::heuristic));
    EXPECT_EQ(report_to_csv(out.report), "pattern,support,length\nA,3,1\nC,3,1\nAC,3,2\n");
}

TEST(RunMine, ErrorsPropagate) {
    auto cfg = walkthrough_config(Algorithm::tnosp);
    cfg.k = 0;
    EXPECT_THROW(run_mine(cfg), InvalidArgument);
    cfg = walkthrough_config(Algorithm::tnosp);
    cfg.input = "/does/not/exist";
    EXPECT_THROW(run_mine(cfg), ParseError);
}

TEST(RunEval, ExactRowsHavePrecisionOne) {
    auto db = gen_synthetic({4, 30, 40, 40, "", {0, 2}, 0, 5});
    EvalConfig eval;
    eval.k_list = {10, 20};
    auto rows = run_eval(db, eval);
    ASSERT_EQ(rows.size(), 6u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.status, "ok");
        ASSERT_TRUE(r.precision.has_value());
        EXPECT_LE(*r.precision, 1.0);
        if (r.config.algorithm != Algorithm::heuristic) EXPECT_DOUBLE_EQ(*r.precision, 1.0);
    }
    // rows follow config order: k outer, algorithm inner
    EXPECT_EQ(rows[0].config.k, 10u);
    EXPECT_EQ(rows[0].config.algorithm, Algorithm::tnosp);
    EXPECT_EQ(rows[5].config.k, 20u);
    EXPECT_EQ(rows[5].config.algorithm, Algorithm::heuristic);
    // QMSP never generates more candidates than the unpruned run
    EXPECT_LE(rows[0].candidates_total(), rows[1].candidates_total());
    EXPECT_LE(rows[3].candidates_total(), rows[4].candidates_total());
}

TEST(RunEval, PrefixSweepAndFailedRows) {
    auto db = gen_synthetic({4, 50, 25, 25, "", {0, 2}, 0, 6});
    EvalConfig eval;
    eval.k_list = {5};
    eval.size_step = 20;
    eval.algorithms = {Algorithm::tnosp, Algorithm::bruteforce};
    auto rows = run_eval(db, eval);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].sequences, 20u);
    EXPECT_EQ(rows[2].sequences, 40u);
    EXPECT_EQ(rows[4].sequences, 50u);
    // sequences exceed the oracle length limit: those rows are marked, not fatal
    for (std::size_t i = 1; i < rows.size(); i += 2) EXPECT_NE(rows[i].status, "ok");
    for (std::size_t i = 0; i < rows.size(); i += 2) EXPECT_EQ(rows[i].status, "ok");

    const std::string csv = eval_to_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "sequences,k,algorithm,runtime_ms,visited_nodes,candidates_total,result_count,l_max,precision,status");
    EXPECT_EQ(eval_to_json(rows).size(), rows.size());
}

TEST(GenSynthetic, DeterministicForSeed) {
    SynthConfig cfg{4, 10, 50, 50, "GCTA", {0, 2}, 2, 7};
    std::ostringstream a, b;
    write_database(a, gen_synthetic(cfg), InputFormat::fasta);
    write_database(b, gen_synthetic(cfg), InputFormat::fasta);
    EXPECT_EQ(a.str(), b.str());
    cfg.seed = 8;
    std::ostringstream c;
    write_database(c, gen_synthetic(cfg), InputFormat::fasta);
    EXPECT_NE(a.str(), c.str());
}

TEST(GenSynthetic, UniformWithoutMotif) {
    auto db = gen_synthetic({3, 5, 10, 30, "", {0, 2}, 2, 1});
    EXPECT_EQ(db.size(), 5u);
    for (const auto& s : db.sequences()) {
        EXPECT_GE(s.size(), 10u);
        EXPECT_LE(s.size(), 30u);
        for (char c : s.items) EXPECT_NE(std::string("ACG").find(c), std::string::npos);
    }
}

TEST(GenSynthetic, PlantedMotifIsRecovered) {
    auto db = gen_synthetic({4, 10, 50, 50, "GCTA", {0, 2}, 2, 7});
    auto r = tnosp_mine(db, 5, {0, 2}, {1, 20});
    bool found = false;
    for (const auto& e : r.ranked)
        found |= std::string("GCTA").find(e.pattern.str()) != std::string::npos;
    EXPECT_TRUE(found);
    // every sequence carries the motif under the planted gap window
    for (const auto& s : db.sequences())
        EXPECT_GE(netgap_support(s, Pattern("GCTA"), {0, 2}, {1, 20}).support, 1u);
}

TEST(GenSynthetic, InvalidParameters) {
    EXPECT_THROW(gen_synthetic({0, 5, 10, 10, "", {0, 2}, 2, 1}), InvalidArgument);
    EXPECT_THROW(gen_synthetic({4, 0, 10, 10, "", {0, 2}, 2, 1}), InvalidArgument);
    EXPECT_THROW(gen_synthetic({4, 5, 20, 10, "", {0, 2}, 2, 1}), InvalidArgument);
    EXPECT_THROW(gen_synthetic({4, 5, 10, 10, "GZ", {0, 2}, 2, 1}), InvalidArgument);
    EXPECT_THROW(gen_synthetic({4, 5, 10, 10, "GC", {3, 2}, 2, 1}), InvalidArgument);
}

TEST(Algorithms, NamesRoundTrip) {
    for (auto a : {Algorithm::tnosp, Algorithm::tnosp_noqmsp, Algorithm::heuristic, Algorithm::bruteforce})
        EXPECT_EQ(parse_algorithm(to_string(a)), a);
    EXPECT_THROW(parse_algorithm("nostopk"), InvalidArgument);
}
