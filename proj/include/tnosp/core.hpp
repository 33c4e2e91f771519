#pragma once

// Domain types shared by the support engine, the miner and the oracle.
// Positions are 1-based in every public surface.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tnosp {

/// A single symbol. Any non-whitespace byte is a valid item.
using Item = char;

/// Thrown for argument / precondition violations from library calls.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GapConstraint {
    std::size_t mingap = 0;
    std::size_t maxgap = 0;

    void validate() const {
        if (mingap > maxgap)
            throw InvalidArgument("gap constraint requires mingap <= maxgap");
    }

    /// `gap` is the number of items strictly between two matched positions.
    bool admits(std::size_t gap) const noexcept { return gap >= mingap && gap <= maxgap; }

    friend bool operator==(const GapConstraint&, const GapConstraint&) = default;
};

/// Bounds on the span (last - first + 1) of an occurrence.
struct LengthConstraint {
    std::size_t minlen = 0;
    std::size_t maxlen = 1;

    void validate() const {
        if (maxlen == 0)
            throw InvalidArgument("length constraint requires maxlen >= 1");
        if (minlen > maxlen)
            throw InvalidArgument("length constraint requires minlen <= maxlen");
    }

    bool admits(std::size_t span) const noexcept { return span >= minlen && span <= maxlen; }

    friend bool operator==(const LengthConstraint&, const LengthConstraint&) = default;
};

/// A non-empty ordered list of items. Ordered lexicographically.
class Pattern {
public:
    Pattern() = delete;

    explicit Pattern(std::string items) : items_(std::move(items)) {
        if (items_.empty())
            throw InvalidArgument("pattern must contain at least one item");
    }

    explicit Pattern(const char* items) : Pattern(std::string(items)) {}

    std::size_t size() const noexcept { return items_.size(); }
    Item operator[](std::size_t index) const noexcept { return items_[index]; }
    const std::string& str() const noexcept { return items_; }

    /// Pattern with `item` appended.
    Pattern extended(Item item) const { return Pattern(items_ + item); }

    /// First `size() - 1` items; the caller ensures size() >= 2.
    std::string_view prefix() const noexcept {
        return std::string_view(items_).substr(0, items_.size() - 1);
    }
    std::string_view suffix() const noexcept { return std::string_view(items_).substr(1); }

    friend auto operator<=>(const Pattern&, const Pattern&) = default;
    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::string items_;
};

struct Sequence {
    std::string sid;
    std::string items;

    std::size_t size() const noexcept { return items.size(); }

    /// Item at 1-based position `pos`.
    Item at(std::size_t pos) const {
        if (pos == 0 || pos > items.size())
            throw InvalidArgument("position out of range");
        return items[pos - 1];
    }

    friend bool operator==(const Sequence&, const Sequence&) = default;
};

/// Identifier-tagged sequences with unique sids.
class SequenceDatabase {
public:
    SequenceDatabase() = default;

    explicit SequenceDatabase(std::vector<Sequence> sequences) : sequences_(std::move(sequences)) {
        std::unordered_set<std::string> seen;
        for (const auto& seq : sequences_) {
            if (!seen.insert(seq.sid).second)
                throw InvalidArgument("duplicate sequence id: " + seq.sid);
        }
    }

    /// Builds a database from bare strings; sids are "1", "2", ...
    static SequenceDatabase from_strings(std::span<const std::string> rows) {
        std::vector<Sequence> seqs;
        seqs.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            seqs.push_back({std::to_string(i + 1), rows[i]});
        return SequenceDatabase(std::move(seqs));
    }

    static SequenceDatabase from_strings(std::initializer_list<std::string> rows) {
        return from_strings(std::span<const std::string>(rows.begin(), rows.size()));
    }

    const std::vector<Sequence>& sequences() const noexcept { return sequences_; }
    std::size_t size() const noexcept { return sequences_.size(); }
    bool empty() const noexcept { return sequences_.empty(); }

    std::size_t total_length() const noexcept {
        std::size_t total = 0;
        for (const auto& s : sequences_) total += s.size();
        return total;
    }

    std::size_t longest() const noexcept {
        std::size_t best = 0;
        for (const auto& s : sequences_) best = std::max(best, s.size());
        return best;
    }

    /// Distinct items over all sequences, sorted ascending.
    std::string alphabet() const {
        bool present[256] = {};
        for (const auto& s : sequences_)
            for (unsigned char c : s.items) present[c] = true;
        std::string out;
        for (int c = 0; c < 256; ++c)
            if (present[c]) out.push_back(static_cast<char>(c));
        return out;
    }

    /// First `count` sequences (all of them if count exceeds size()).
    SequenceDatabase prefix(std::size_t count) const {
        count = std::min(count, sequences_.size());
        return SequenceDatabase(std::vector<Sequence>(sequences_.begin(), sequences_.begin() + count));
    }

    friend bool operator==(const SequenceDatabase&, const SequenceDatabase&) = default;

private:
    std::vector<Sequence> sequences_;
};

struct Occurrence {
    std::string sid;
    std::vector<std::size_t> positions;  // 1-based, strictly increasing

    std::size_t span() const noexcept {
        return positions.empty() ? 0 : positions.back() - positions.front() + 1;
    }

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// True iff `positions` realises `pat` in `seq` under both constraints.
/// Throws InvalidArgument when positions are out of range or the wrong count.
inline bool is_occurrence(const Sequence& seq, const Pattern& pat, std::span<const std::size_t> positions,
                          const GapConstraint& gap, const LengthConstraint& len) {
    if (positions.size() != pat.size())
        throw InvalidArgument("position count differs from pattern length");
    for (std::size_t p : positions)
        if (p == 0 || p > seq.size()) throw InvalidArgument("position out of range");

    for (std::size_t j = 0; j < positions.size(); ++j) {
        if (seq.items[positions[j] - 1] != pat[j]) return false;
        if (j > 0) {
            if (positions[j] <= positions[j - 1]) return false;
            if (!gap.admits(positions[j] - positions[j - 1] - 1)) return false;
        }
    }
    return len.admits(positions.back() - positions.front() + 1);
}

/// Index-wise disjointness: the same position may appear at different indices.
inline bool non_overlapping(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    if (a.size() != b.size())
        throw InvalidArgument("occurrences of different pattern lengths");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return false;
    return true;
}

inline bool non_overlapping(const Occurrence& a, const Occurrence& b) {
    return non_overlapping(std::span<const std::size_t>(a.positions), std::span<const std::size_t>(b.positions));
}

}  // namespace tnosp
