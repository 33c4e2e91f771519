#pragma once

// Pattern-growth candidate generation, the exact top-k loop with a dynamic
// minimum support, and a per-length beam heuristic used as a baseline.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tnosp/core.hpp"
#include "tnosp/nettree.hpp"
#include "tnosp/report.hpp"

namespace tnosp {

/// Size-k min-heap of (pattern, support). The top is the smallest support;
/// among equal supports the entry ranked last by `ranks_before` is on top,
/// so eviction always drops the worst-ranked pattern.
class TopKHeap {
public:
    explicit TopKHeap(std::size_t capacity) : capacity_(capacity) {
        if (capacity == 0) throw InvalidArgument("k must be at least 1");
    }

    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t size() const noexcept { return heap_.size(); }
    bool full() const noexcept { return heap_.size() >= capacity_; }

    /// 0 until the heap first fills, then the smallest support held.
    std::size_t minsup() const noexcept { return full() ? heap_.top().support : 0; }

    /// Inserts while not full; once full, replaces the top when `entry`
    /// has strictly greater support. Returns whether `entry` was kept.
    bool offer(RankedPattern entry) {
        if (!full()) {
            heap_.push(std::move(entry));
            return true;
        }
        if (entry.support <= heap_.top().support) return false;
        heap_.pop();
        heap_.push(std::move(entry));
        return true;
    }

    std::vector<RankedPattern> sorted() const {
        auto copy = heap_;
        std::vector<RankedPattern> out;
        out.reserve(copy.size());
        while (!copy.empty()) {
            out.push_back(copy.top());
            copy.pop();
        }
        sort_ranked(out);
        return out;
    }

private:
    struct WorstOnTop {
        bool operator()(const RankedPattern& a, const RankedPattern& b) const noexcept {
            return ranks_before(a, b);
        }
    };

    std::size_t capacity_;
    std::priority_queue<RankedPattern, std::vector<RankedPattern>, WorstOnTop> heap_;
};

/// Patterns of one length retained for growth.
struct FrequentArray {
    std::vector<RankedPattern> entries;

    bool empty() const noexcept { return entries.empty(); }
    std::size_t size() const noexcept { return entries.size(); }
};

/// Prefix-suffix join: every length-(L+1) pattern whose L-prefix and
/// L-suffix both appear in `frequent`. Sorted and deduplicated.
inline std::vector<Pattern> generate_candidates(const FrequentArray& frequent) {
    if (frequent.empty()) return {};
    const std::size_t length = frequent.entries.front().pattern.size();
    for (const auto& e : frequent.entries)
        if (e.pattern.size() != length) throw InvalidArgument("frequent patterns must share one length");

    // (L-1)-prefix -> last items of the patterns that start with it
    std::map<std::string_view, std::string> by_prefix;
    for (const auto& e : frequent.entries) {
        std::string_view s = e.pattern.str();
        by_prefix[s.substr(0, length - 1)].push_back(s.back());
    }

    std::set<std::string> out;
    for (const auto& e : frequent.entries) {
        std::string_view s = e.pattern.str();
        auto it = by_prefix.find(s.substr(1));
        if (it == by_prefix.end()) continue;
        for (char last : it->second) out.insert(std::string(s) + last);
    }
    std::vector<Pattern> result;
    result.reserve(out.size());
    for (const auto& s : out) result.emplace_back(s);
    return result;
}

namespace detail {

inline std::vector<Pattern> single_item_patterns(const SequenceDatabase& db) {
    std::vector<Pattern> out;
    for (char c : db.alphabet()) out.emplace_back(std::string(1, c));
    return out;
}

/// Span bound used for growth decisions. With minlen <= 1 it equals the
/// true support; otherwise minlen is dropped, which restores
/// anti-monotonicity and gives an upper bound on every super-pattern.
inline LengthConstraint growth_bound(const LengthConstraint& len) {
    return len.minlen <= 1 ? len : LengthConstraint{0, len.maxlen};
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Exact top-k non-overlapping patterns. With `qmsp`, patterns whose
/// growth support fell below the round's final minsup are dropped from the
/// frequent array before the next length is generated.
inline MiningReport tnosp_mine(const SequenceDatabase& db, std::size_t k, const GapConstraint& gap,
                               const LengthConstraint& len, bool qmsp = true) {
    MiningReport report;
    report.algorithm = qmsp ? "tnosp" : "tnosp-noqmsp";
    report.params = {k, gap, len};
    report.params.validate();

    const auto start = std::chrono::steady_clock::now();
    const bool relaxed = len.minlen > 1;
    const LengthConstraint growth_len = detail::growth_bound(len);

    TopKHeap heap(k);
    auto& metrics = report.metrics;
    std::vector<Pattern> candidates = detail::single_item_patterns(db);

    while (!candidates.empty()) {
        const std::size_t length = candidates.front().size();
        metrics.candidates_per_length.push_back(candidates.size());
        FrequentArray frequent;

        for (auto& p : candidates) {
            DbSupport strict = db_support(db, p, gap, len);
            DbSupport growth = relaxed ? db_support(db, p, gap, growth_len) : strict;
            metrics.visited_nodes += strict.visited_nodes + (relaxed ? growth.visited_nodes : 0);
            metrics.supports_computed += relaxed ? 2 : 1;

            const std::size_t minsup = heap.minsup();
            const bool grow = growth.support > 0 &&
                              (growth.support > minsup || (growth.support == minsup && !heap.full()));
            if (strict.support > 0) heap.offer({p, strict.support});
            if (grow) frequent.entries.push_back({std::move(p), growth.support});
            metrics.minsup_trace.push_back(heap.minsup());
        }

        if (qmsp) {
            const std::size_t minsup = heap.minsup();
            std::erase_if(frequent.entries, [minsup](const RankedPattern& e) { return e.support < minsup; });
        }

        if (length >= len.maxlen) break;
        candidates = generate_candidates(frequent);
    }

    report.ranked = heap.sorted();
    report.metrics.runtime_ms = detail::elapsed_ms(start);
    report.finalize();
    return report;
}

/// Per-length beam baseline: at each length only the best k patterns of that
/// length are kept and grown. Not exact.
inline MiningReport heuristic_mine(const SequenceDatabase& db, std::size_t k, std::size_t max_length,
                                   const GapConstraint& gap, const LengthConstraint& len) {
    MiningReport report;
    report.algorithm = "heuristic";
    report.params = {k, gap, len};
    report.params.validate();
    if (max_length == 0) throw InvalidArgument("heuristic max_length must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    auto& metrics = report.metrics;
    std::vector<RankedPattern> pool;
    std::vector<Pattern> candidates = detail::single_item_patterns(db);
    const std::size_t limit = std::min(max_length, len.maxlen);

    for (std::size_t length = 1; length <= limit && !candidates.empty(); ++length) {
        metrics.candidates_per_length.push_back(candidates.size());
        std::vector<RankedPattern> scored;
        for (auto& p : candidates) {
            DbSupport s = db_support(db, p, gap, len);
            metrics.visited_nodes += s.visited_nodes;
            ++metrics.supports_computed;
            if (s.support > 0) scored.push_back({std::move(p), s.support});
        }
        sort_ranked(scored);
        if (scored.size() > k) scored.erase(scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end());

        FrequentArray kept{scored};
        pool.insert(pool.end(), scored.begin(), scored.end());
        candidates = generate_candidates(kept);
    }

    sort_ranked(pool);
    if (pool.size() > k) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k), pool.end());
    report.ranked = std::move(pool);
    report.metrics.runtime_ms = detail::elapsed_ms(start);
    report.finalize();
    return report;
}

/// Fraction of `candidate`'s patterns that also appear in `exact`.
inline double precision(const MiningReport& exact, const MiningReport& candidate) {
    if (!(exact.params == candidate.params))
        throw InvalidArgument("precision requires reports mined with identical parameters");
    if (candidate.ranked.empty()) return 0.0;

    std::set<std::string> reference;
    for (const auto& r : exact.ranked) reference.insert(r.pattern.str());

    // Per-length tallies, summed; equal to |candidate ∩ exact| / |candidate|.
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_length;  // length -> (correct, total)
    for (const auto& r : candidate.ranked) {
        auto& [correct, total] = by_length[r.pattern.size()];
        ++total;
        if (reference.contains(r.pattern.str())) ++correct;
    }
    std::size_t correct = 0, total = 0;
    for (const auto& [length, tally] : by_length) {
        correct += tally.first;
        total += tally.second;
    }
    return static_cast<double>(correct) / static_cast<double>(total);
}

}  // namespace tnosp
