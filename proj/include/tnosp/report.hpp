#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tnosp/core.hpp"

namespace tnosp {

struct RankedPattern {
    Pattern pattern;
    std::size_t support = 0;

    friend bool operator==(const RankedPattern&, const RankedPattern&) = default;
};

/// Output order and tie policy: support descending, then length ascending,
/// then lexicographic. Every miner and the oracle rank with this.
inline bool ranks_before(const RankedPattern& a, const RankedPattern& b) noexcept {
    if (a.support != b.support) return a.support > b.support;
    if (a.pattern.size() != b.pattern.size()) return a.pattern.size() < b.pattern.size();
    return a.pattern < b.pattern;
}

inline void sort_ranked(std::vector<RankedPattern>& v) { std::sort(v.begin(), v.end(), ranks_before); }

struct MiningParams {
    std::size_t k = 1;
    GapConstraint gap;
    LengthConstraint len;

    void validate() const {
        if (k == 0) throw InvalidArgument("k must be at least 1");
        gap.validate();
        len.validate();
    }

    friend bool operator==(const MiningParams&, const MiningParams&) = default;
};

struct MiningMetrics {
    double runtime_ms = 0.0;
    std::uint64_t visited_nodes = 0;
    std::vector<std::size_t> candidates_per_length;  // index 0 holds length 1
    std::size_t supports_computed = 0;
    std::vector<std::size_t> minsup_trace;  // minsup after each admission decision

    std::size_t candidates_total() const noexcept {
        std::size_t n = 0;
        for (auto c : candidates_per_length) n += c;
        return n;
    }
};

struct MiningReport {
    std::string algorithm;
    MiningParams params;
    std::vector<RankedPattern> ranked;
    std::size_t l_max = 0;
    bool shortfall = false;  // fewer than k patterns with nonzero support
    MiningMetrics metrics;

    void finalize() {
        sort_ranked(ranked);
        l_max = 0;
        for (const auto& r : ranked) l_max = std::max(l_max, r.pattern.size());
        shortfall = ranked.size() < params.k;
    }

    std::vector<std::size_t> support_multiset() const {
        std::vector<std::size_t> s;
        s.reserve(ranked.size());
        for (const auto& r : ranked) s.push_back(r.support);
        std::sort(s.begin(), s.end(), std::greater<>());
        return s;
    }
};

}  // namespace tnosp
