#pragma once

// Nettree construction, lonely-node pruning and the NETGAP greedy that
// extracts non-overlapping full paths to compute support.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tnosp/core.hpp"

namespace tnosp {

/// Half-open index range into an adjacent level.
struct NodeRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    bool empty() const noexcept { return begin >= end; }
    std::size_t size() const noexcept { return end - begin; }
};

struct NettreeNode {
    std::size_t level = 0;     // 1-based pattern index
    std::size_t position = 0;  // 1-based sequence position
    NodeRange children;        // indices into level + 1, ascending position
    NodeRange parents;         // indices into level - 1, ascending position
    std::size_t live_children = 0;
    std::size_t live_parents = 0;
    bool pruned = false;
};

/// Leveled DAG of every gap-feasible occurrence of one pattern in one
/// sequence. Level j holds one node per position where p_j occurs, and
/// edges join adjacent levels inside the gap window. Because the window is
/// monotone in the position, the children (and parents) of a node form a
/// contiguous run of the adjacent level.
class Nettree {
public:
    Nettree(const Sequence& seq, const Pattern& pat, const GapConstraint& gap) : gap_(gap) {
        gap.validate();
        const std::size_t m = pat.size();
        levels_.resize(m);
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t pos = 1; pos <= seq.size(); ++pos) {
                if (seq.items[pos - 1] != pat[j]) continue;
                NettreeNode node;
                node.level = j + 1;
                node.position = pos;
                levels_[j].push_back(node);
                ++visited_;
            }
            if (levels_[j].empty()) {
                levels_.assign(m, {});
                return;
            }
        }
        connect();
        prune_lonely_nodes();
    }

    std::size_t depth() const noexcept { return levels_.size(); }

    /// Nodes of 1-based `level`, ascending position, including pruned ones.
    std::span<const NettreeNode> level(std::size_t level) const { return levels_.at(level - 1); }

    bool empty() const noexcept {
        return levels_.empty() || levels_.front().empty();
    }

    std::size_t live_nodes() const noexcept {
        std::size_t n = 0;
        for (const auto& lv : levels_)
            for (const auto& node : lv) n += node.pruned ? 0 : 1;
        return n;
    }

    std::uint64_t visited_nodes() const noexcept { return visited_; }

    /// Marks a node pruned and cascades to every node that becomes lonely.
    void prune(std::size_t level, std::size_t index) {
        std::vector<std::pair<std::size_t, std::size_t>> work;
        mark(level - 1, index, work);
        drain(work);
    }

    /// Leftmost length-feasible full path from the root at `root_index`,
    /// as node indices per level. Empty if the root yields none.
    std::vector<std::size_t> leftmost_path(std::size_t root_index, const LengthConstraint& len) {
        const std::size_t m = levels_.size();
        std::vector<std::size_t> path;
        if (m == 0) return path;
        const NettreeNode& root = levels_[0][root_index];
        if (root.pruned) return path;
        path.reserve(m);
        path.push_back(root_index);
        if (m == 1) {
            if (len.admits(1)) return path;
            path.clear();
            return path;
        }
        if (dead_.size() != m) {
            dead_.assign(m, {});
            for (std::size_t j = 0; j < m; ++j) dead_[j].assign(levels_[j].size(), 0);
        }
        ++stamp_;
        if (!descend(0, root_index, root.position, len, path)) path.clear();
        return path;
    }

private:
    void connect() {
        const std::size_t m = levels_.size();
        for (std::size_t j = 0; j + 1 < m; ++j) {
            auto& upper = levels_[j];
            auto& lower = levels_[j + 1];
            for (auto& node : upper) {
                const std::size_t lo = node.position + gap_.mingap + 1;
                const std::size_t hi = node.position + gap_.maxgap + 1;
                node.children.begin = lower_index(lower, lo);
                node.children.end = lower_index(lower, hi + 1);
                node.live_children = node.children.size();
            }
            for (auto& node : lower) {
                const std::size_t span_min = gap_.mingap + 1;
                const std::size_t span_max = gap_.maxgap + 1;
                const std::size_t lo = node.position > span_max ? node.position - span_max : 0;
                const std::size_t hi = node.position > span_min ? node.position - span_min : 0;
                node.parents.begin = lower_index(upper, lo);
                node.parents.end = hi == 0 ? node.parents.begin : lower_index(upper, hi + 1);
                node.live_parents = node.parents.size();
            }
        }
    }

    static std::size_t lower_index(const std::vector<NettreeNode>& lv, std::size_t position) {
        auto it = std::lower_bound(lv.begin(), lv.end(), position,
                                   [](const NettreeNode& n, std::size_t p) { return n.position < p; });
        return static_cast<std::size_t>(it - lv.begin());
    }

    bool lonely(const NettreeNode& node) const noexcept {
        const std::size_t m = levels_.size();
        return (node.level < m && node.live_children == 0) || (node.level > 1 && node.live_parents == 0);
    }

    void prune_lonely_nodes() {
        std::vector<std::pair<std::size_t, std::size_t>> work;
        for (std::size_t j = 0; j < levels_.size(); ++j)
            for (std::size_t i = 0; i < levels_[j].size(); ++i)
                if (lonely(levels_[j][i])) mark(j, i, work);
        drain(work);
    }

    void mark(std::size_t j, std::size_t i, std::vector<std::pair<std::size_t, std::size_t>>& work) {
        NettreeNode& node = levels_[j][i];
        if (node.pruned) return;
        node.pruned = true;
        ++visited_;
        work.emplace_back(j, i);
    }

    void drain(std::vector<std::pair<std::size_t, std::size_t>>& work) {
        while (!work.empty()) {
            auto [j, i] = work.back();
            work.pop_back();
            const NettreeNode& node = levels_[j][i];
            if (j > 0) {
                for (std::size_t p = node.parents.begin; p < node.parents.end; ++p) {
                    NettreeNode& parent = levels_[j - 1][p];
                    if (parent.pruned) continue;
                    if (--parent.live_children == 0) mark(j - 1, p, work);
                }
            }
            if (j + 1 < levels_.size()) {
                for (std::size_t c = node.children.begin; c < node.children.end; ++c) {
                    NettreeNode& child = levels_[j + 1][c];
                    if (child.pruned) continue;
                    if (--child.live_parents == 0) mark(j + 1, c, work);
                }
            }
        }
    }

    // Depth-first, children in ascending position. A node that fails for the
    // current root is stamped dead so each node is expanded at most once per
    // root. Failures are root-specific (the span window moves with the root),
    // so nothing is pruned from the tree here.
    bool descend(std::size_t j, std::size_t index, std::size_t root_pos, const LengthConstraint& len,
                 std::vector<std::size_t>& path) {
        const std::size_t m = levels_.size();
        const NettreeNode& node = levels_[j][index];
        const std::size_t after_child = m - (j + 2);  // levels below the child
        for (std::size_t c = node.children.begin; c < node.children.end; ++c) {
            const NettreeNode& child = levels_[j + 1][c];
            if (child.pruned) continue;
            ++visited_;
            const std::size_t span = child.position - root_pos + 1;
            if (span + after_child * (gap_.mingap + 1) > len.maxlen) break;
            if (after_child == 0) {
                if (span < len.minlen) continue;
                path.push_back(c);
                return true;
            }
            if (span + after_child * (gap_.maxgap + 1) < len.minlen) continue;
            if (dead_[j + 1][c] == stamp_) continue;
            path.push_back(c);
            if (descend(j + 1, c, root_pos, len, path)) return true;
            path.pop_back();
            dead_[j + 1][c] = stamp_;
        }
        return false;
    }

    GapConstraint gap_;
    std::vector<std::vector<NettreeNode>> levels_;
    std::vector<std::vector<std::uint64_t>> dead_;
    std::uint64_t stamp_ = 0;
    std::uint64_t visited_ = 0;
};

struct SupportResult {
    std::size_t support = 0;
    std::vector<Occurrence> occurrences;
    std::uint64_t visited_nodes = 0;
};

namespace detail {

template <bool Record>
SupportResult netgap(const Sequence& seq, const Pattern& pat, const GapConstraint& gap, const LengthConstraint& len) {
    gap.validate();
    len.validate();
    SupportResult result;

    if (pat.size() == 1) {
        // One level, no edges: every match is a full path of span 1.
        for (std::size_t pos = 1; pos <= seq.size(); ++pos) {
            if (seq.items[pos - 1] != pat[0]) continue;
            ++result.visited_nodes;
            if (!len.admits(1)) continue;
            ++result.support;
            if constexpr (Record) result.occurrences.push_back({seq.sid, {pos}});
        }
        return result;
    }

    Nettree tree(seq, pat, gap);
    if (!tree.empty()) {
        const std::size_t roots = tree.level(1).size();
        for (std::size_t r = 0; r < roots; ++r) {
            if (tree.level(1)[r].pruned) continue;
            std::vector<std::size_t> path = tree.leftmost_path(r, len);
            if (path.empty()) continue;
            ++result.support;
            if constexpr (Record) {
                Occurrence occ{seq.sid, {}};
                occ.positions.reserve(path.size());
                for (std::size_t j = 0; j < path.size(); ++j)
                    occ.positions.push_back(tree.level(j + 1)[path[j]].position);
                result.occurrences.push_back(std::move(occ));
            }
            for (std::size_t j = 0; j < path.size(); ++j) tree.prune(j + 1, path[j]);
        }
    }
    result.visited_nodes = tree.visited_nodes();
    return result;
}

}  // namespace detail

/// Non-overlapping support of `pat` in `seq`, with the selected occurrences.
inline SupportResult netgap_support(const Sequence& seq, const Pattern& pat, const GapConstraint& gap,
                                    const LengthConstraint& len) {
    return detail::netgap<true>(seq, pat, gap, len);
}

struct DbSupport {
    std::size_t support = 0;
    std::uint64_t visited_nodes = 0;
};

/// Sum of per-sequence supports and visited-node counters.
inline DbSupport db_support(const SequenceDatabase& db, const Pattern& pat, const GapConstraint& gap,
                            const LengthConstraint& len) {
    DbSupport total;
    for (const auto& seq : db.sequences()) {
        SupportResult r = detail::netgap<false>(seq, pat, gap, len);
        total.support += r.support;
        total.visited_nodes += r.visited_nodes;
    }
    return total;
}

}  // namespace tnosp
