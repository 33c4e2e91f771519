#pragma once

// Database ingestion (FASTA / one-sequence-per-line) and result
// serialization (json / csv).

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "tnosp/core.hpp"
#include "tnosp/report.hpp"

namespace tnosp {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    /// 1-based line the error refers to; 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class InputFormat { fasta, lines };

inline InputFormat parse_input_format(const std::string& name) {
    if (name == "fasta") return InputFormat::fasta;
    if (name == "lines") return InputFormat::lines;
    throw InvalidArgument("unknown input format: " + name);
}

namespace detail {

inline std::string strip_whitespace(const std::string& line) {
    std::string out;
    out.reserve(line.size());
    for (unsigned char c : line)
        if (!std::isspace(c)) out.push_back(static_cast<char>(c));
    return out;
}

inline std::string upper(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace detail

inline SequenceDatabase parse_database(std::istream& in, InputFormat format) {
    std::vector<Sequence> seqs;
    std::unordered_set<std::string> sids;
    std::string raw;
    std::size_t lineno = 0;

    auto add = [&](Sequence seq, std::size_t at) {
        if (!sids.insert(seq.sid).second) throw ParseError("duplicate sequence id '" + seq.sid + "'", at);
        seqs.push_back(std::move(seq));
    };

    if (format == InputFormat::lines) {
        while (std::getline(in, raw)) {
            ++lineno;
            std::string items = detail::strip_whitespace(raw);
            if (items.empty()) continue;
            add({std::to_string(lineno), std::move(items)}, lineno);
        }
    } else {
        bool open = false;
        Sequence current;
        std::size_t header_line = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            if (!raw.empty() && raw.front() == '>') {
                if (open) add(std::move(current), header_line);
                std::istringstream header(raw.substr(1));
                current = Sequence{};
                if (!(header >> current.sid)) throw ParseError("fasta header without an identifier", lineno);
                header_line = lineno;
                open = true;
                continue;
            }
            std::string items = detail::strip_whitespace(raw);
            if (items.empty()) continue;
            if (!open) throw ParseError("sequence data before any fasta header", lineno);
            current.items += detail::upper(std::move(items));
        }
        if (open) add(std::move(current), header_line);
    }

    if (seqs.empty()) throw ParseError("empty database", lineno);
    return SequenceDatabase(std::move(seqs));
}

inline SequenceDatabase load_database(const std::string& path, InputFormat format) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path, 0);
    return parse_database(in, format);
}

inline void write_database(std::ostream& out, const SequenceDatabase& db, InputFormat format) {
    for (const auto& seq : db.sequences()) {
        if (format == InputFormat::fasta) out << '>' << seq.sid << '\n';
        out << seq.items << '\n';
    }
}

enum class OutputFormat { json, csv };

inline OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw InvalidArgument("unknown output format: " + name);
}

inline nlohmann::json metrics_to_json(const MiningMetrics& m) {
    return {{"runtime_ms", m.runtime_ms},
            {"visited_nodes", m.visited_nodes},
            {"candidates_per_length", m.candidates_per_length},
            {"candidates_total", m.candidates_total()},
            {"supports_computed", m.supports_computed}};
}

inline nlohmann::json report_to_json(const MiningReport& report) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& r : report.ranked)
        patterns.push_back({{"pattern", r.pattern.str()}, {"support", r.support}, {"length", r.pattern.size()}});
    return {{"patterns", std::move(patterns)},
            {"l_max", report.l_max},
            {"algorithm", report.algorithm},
            {"k", report.params.k},
            {"shortfall", report.shortfall},
            {"metrics", metrics_to_json(report.metrics)}};
}

inline std::string report_to_csv(const MiningReport& report) {
    std::string out = "pattern,support,length\n";
    for (const auto& r : report.ranked)
        out += r.pattern.str() + ',' + std::to_string(r.support) + ',' + std::to_string(r.pattern.size()) + '\n';
    return out;
}

inline void write_report(std::ostream& out, const MiningReport& report, OutputFormat format) {
    if (format == OutputFormat::json)
        out << report_to_json(report).dump() << '\n';
    else
        out << report_to_csv(report);
}

}  // namespace tnosp
