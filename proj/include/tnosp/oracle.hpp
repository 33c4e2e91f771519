#pragma once

// Brute-force reference. Enumerates every occurrence, finds the exact
// maximum index-disjoint subset by branch and bound, and ranks every
// pattern with nonzero support. Exponential; for cross-checking only.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnosp/core.hpp"
#include "tnosp/report.hpp"

namespace tnosp {

class LimitsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleLimits {
    std::size_t max_sequence_length = 20;
    std::size_t max_pattern_length = 5;
    std::size_t max_total_patterns = 100000;
    std::size_t max_occurrences = 20000;  // per (pattern, sequence)

    void validate() const {
        if (max_sequence_length == 0 || max_pattern_length == 0 || max_total_patterns == 0 || max_occurrences == 0)
            throw InvalidArgument("oracle limits must be positive");
    }
};

namespace detail {

inline void enumerate_from(const Sequence& seq, const Pattern& pat, const GapConstraint& gap,
                           const LengthConstraint& len, std::vector<std::size_t>& prefix,
                           std::vector<Occurrence>& out, std::size_t cap) {
    const std::size_t j = prefix.size();
    if (j == pat.size()) {
        if (len.admits(prefix.back() - prefix.front() + 1)) {
            if (out.size() >= cap) throw LimitsError("oracle occurrence limit exceeded");
            out.push_back({seq.sid, prefix});
        }
        return;
    }
    std::size_t lo = 1, hi = seq.size();
    if (j > 0) {
        lo = prefix.back() + gap.mingap + 1;
        hi = std::min(hi, prefix.back() + gap.maxgap + 1);
    }
    for (std::size_t pos = lo; pos <= hi; ++pos) {
        if (seq.items[pos - 1] != pat[j]) continue;
        prefix.push_back(pos);
        enumerate_from(seq, pat, gap, len, prefix, out, cap);
        prefix.pop_back();
    }
}

/// Branch and bound over "which occurrence, if any, claims node (level, pos)".
class DisjointSearch {
public:
    explicit DisjointSearch(std::span<const Occurrence> occ) : occ_(occ) {
        if (!occ.empty()) m_ = occ.front().positions.size();
        for (const auto& o : occ)
            if (o.positions.size() != m_) throw InvalidArgument("occurrences of different pattern lengths");
    }

    std::size_t solve() {
        if (occ_.empty()) return 0;
        std::vector<std::uint32_t> active(occ_.size());
        for (std::uint32_t i = 0; i < active.size(); ++i) active[i] = i;
        ceiling_ = upper_bound(active).first;
        seed_lower_bound(active);
        search(active, 0);
        return best_;
    }

private:
    bool conflict(std::uint32_t a, std::uint32_t b) const noexcept {
        const auto& pa = occ_[a].positions;
        const auto& pb = occ_[b].positions;
        for (std::size_t i = 0; i < m_; ++i)
            if (pa[i] == pb[i]) return true;
        return false;
    }

    // Distinct positions per level; the minimum bounds any disjoint subset.
    // Returns (bound, level attaining it).
    std::pair<std::size_t, std::size_t> upper_bound(const std::vector<std::uint32_t>& active) const {
        std::size_t bound = active.size(), level = 0;
        std::vector<std::size_t> seen;
        for (std::size_t j = 0; j < m_; ++j) {
            seen.clear();
            for (auto id : active) seen.push_back(occ_[id].positions[j]);
            std::sort(seen.begin(), seen.end());
            const auto distinct = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
            if (distinct < bound) {
                bound = distinct;
                level = j;
            }
        }
        return {bound, level};
    }

    void seed_lower_bound(const std::vector<std::uint32_t>& active) {
        std::vector<std::uint32_t> chosen;
        for (auto id : active) {
            bool ok = true;
            for (auto c : chosen)
                if (conflict(id, c)) {
                    ok = false;
                    break;
                }
            if (ok) chosen.push_back(id);
        }
        best_ = chosen.size();
    }

    void search(const std::vector<std::uint32_t>& active, std::size_t taken) {
        if (best_ == ceiling_) return;
        if (active.empty()) {
            best_ = std::max(best_, taken);
            return;
        }
        auto [bound, level] = upper_bound(active);
        if (taken + bound <= best_) return;

        std::size_t pos = occ_[active.front()].positions[level];
        for (auto id : active) pos = std::min(pos, occ_[id].positions[level]);

        std::vector<std::uint32_t> rest;
        for (auto id : active) {
            if (occ_[id].positions[level] != pos) continue;
            rest.clear();
            for (auto other : active)
                if (other != id && !conflict(id, other)) rest.push_back(other);
            search(rest, taken + 1);
            if (best_ == ceiling_) return;
        }
        rest.clear();
        for (auto other : active)
            if (occ_[other].positions[level] != pos) rest.push_back(other);
        search(rest, taken);
    }

    std::span<const Occurrence> occ_;
    std::size_t m_ = 0;
    std::size_t best_ = 0;
    std::size_t ceiling_ = 0;
};

}  // namespace detail

/// All occurrences of `pat` in `seq`, in lexicographic order of positions.
inline std::vector<Occurrence> enumerate_occurrences(const Sequence& seq, const Pattern& pat,
                                                     const GapConstraint& gap, const LengthConstraint& len,
                                                     const OracleLimits& limits = {}) {
    limits.validate();
    gap.validate();
    len.validate();
    if (seq.size() > limits.max_sequence_length) throw LimitsError("oracle sequence length limit exceeded");
    if (pat.size() > limits.max_pattern_length) throw LimitsError("oracle pattern length limit exceeded");
    std::vector<Occurrence> out;
    std::vector<std::size_t> prefix;
    prefix.reserve(pat.size());
    detail::enumerate_from(seq, pat, gap, len, prefix, out, limits.max_occurrences);
    return out;
}

/// Exact size of the largest pairwise non-overlapping subset.
inline std::size_t max_nonoverlapping(std::span<const Occurrence> occurrences, const OracleLimits& limits = {}) {
    limits.validate();
    if (occurrences.size() > limits.max_occurrences) throw LimitsError("oracle occurrence limit exceeded");
    return detail::DisjointSearch(occurrences).solve();
}

inline std::size_t oracle_support(const SequenceDatabase& db, const Pattern& pat, const GapConstraint& gap,
                                  const LengthConstraint& len, const OracleLimits& limits = {}) {
    std::size_t total = 0;
    for (const auto& seq : db.sequences()) {
        auto occ = enumerate_occurrences(seq, pat, gap, len, limits);
        total += max_nonoverlapping(occ, limits);
    }
    return total;
}

/// Scores every pattern that has at least one gap-feasible occurrence of
/// span <= maxlen and returns the best k under the shared tie policy.
/// A pattern with no such occurrence cannot be the prefix of one that has.
inline MiningReport exhaustive_topk(const SequenceDatabase& db, std::size_t k, const GapConstraint& gap,
                                    const LengthConstraint& len, const OracleLimits& limits = {}) {
    MiningReport report;
    report.algorithm = "bruteforce";
    report.params = {k, gap, len};
    report.params.validate();
    limits.validate();
    for (const auto& seq : db.sequences())
        if (seq.size() > limits.max_sequence_length) throw LimitsError("oracle sequence length limit exceeded");

    const auto start = std::chrono::steady_clock::now();
    const LengthConstraint reach{0, len.maxlen};
    const std::string alphabet = db.alphabet();
    std::vector<RankedPattern> scored;
    std::vector<std::string> frontier{""};
    std::size_t evaluated = 0;

    for (std::size_t length = 1; length <= len.maxlen && !frontier.empty(); ++length) {
        if (length > limits.max_pattern_length)
            throw LimitsError("oracle pattern length limit exceeded");
        std::vector<std::string> next;
        for (const auto& base : frontier) {
            for (char c : alphabet) {
                if (++evaluated > limits.max_total_patterns) throw LimitsError("oracle pattern budget exceeded");
                Pattern p(base + c);
                bool reachable = false;
                std::size_t support = 0;
                for (const auto& seq : db.sequences()) {
                    if (!enumerate_occurrences(seq, p, gap, reach, limits).empty()) reachable = true;
                    auto occ = enumerate_occurrences(seq, p, gap, len, limits);
                    support += max_nonoverlapping(occ, limits);
                }
                if (support > 0) scored.push_back({p, support});
                if (reachable) next.push_back(p.str());
            }
        }
        report.metrics.candidates_per_length.push_back(frontier.size() * alphabet.size());
        frontier = std::move(next);
    }

    report.metrics.supports_computed = evaluated;
    sort_ranked(scored);
    if (scored.size() > k) scored.erase(scored.begin() + static_cast<std::ptrdiff_t>(k), scored.end());
    report.ranked = std::move(scored);
    report.metrics.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.finalize();
    return report;
}

}  // namespace tnosp
