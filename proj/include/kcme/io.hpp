#ifndef KCME_IO_HPP
#define KCME_IO_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "model.hpp"

namespace kcme {

namespace detail {

/// Yields non-blank, non-comment lines together with their 1-based physical
/// line number. Trailing whitespace (including '\r') is stripped.
class LineReader {
   public:
    explicit LineReader(std::istream& in) : in_(in) {}

    struct Line {
        std::size_t number;
        std::string text;
    };

    std::optional<Line> next() {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++line_no_;
            const auto end = raw.find_last_not_of(" \t\r");
            if (end == std::string::npos) continue;
            raw.resize(end + 1);
            if (raw.front() == '#') continue;
            return Line{line_no_, raw};
        }
        return std::nullopt;
    }

    [[nodiscard]] std::size_t line_no() const noexcept { return line_no_; }

   private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

/// Splits a line into whitespace-separated integers.
inline std::vector<long long> parse_integers(const LineReader::Line& line, bool allow_negative = false) {
    std::vector<long long> out;
    std::string_view rest = line.text;
    while (true) {
        const auto start = rest.find_first_not_of(" \t");
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto stop = std::min(rest.find_first_of(" \t"), rest.size());
        const std::string_view tok = rest.substr(0, stop);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || (!allow_negative && value < 0)) {
            throw ParseError(line.number, "expected a non-negative integer, got '" + std::string(tok) + "'");
        }
        out.push_back(value);
        rest.remove_prefix(stop);
    }
    return out;
}

inline LineReader::Line require_line(LineReader& reader, const char* what) {
    auto line = reader.next();
    if (!line) throw ParseError(reader.line_no() + 1, std::string("unexpected end of input, expected ") + what);
    return *line;
}

inline std::vector<long long> require_ints(LineReader& reader, std::size_t count, const char* what) {
    const auto line = require_line(reader, what);
    auto values = parse_integers(line);
    if (values.size() != count) {
        throw ParseError(line.number, std::string("malformed header: expected ") + what);
    }
    return values;
}

}  // namespace detail

/// Reads the instance text format:
///   k d
///   n m
///   <n rows over {0,1,?}, each of length m>
/// Lines starting with '#' are comments.
inline Instance parse_instance(std::istream& in) {
    detail::LineReader reader(in);
    const auto kd = detail::require_ints(reader, 2, "'k d'");
    const auto nm = detail::require_ints(reader, 2, "'n m'");
    const auto k = static_cast<std::size_t>(kd[0]);
    const auto d = static_cast<std::size_t>(kd[1]);
    const auto n = static_cast<std::size_t>(nm[0]);
    const auto m = static_cast<std::size_t>(nm[1]);
    if (k < 1) throw ParseError(1, "k must be at least 1");
    if (n < 1 || m < 1) throw ParseError(2, "n and m must be at least 1");

    std::vector<PartialString> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto line = detail::require_line(reader, "a matrix row");
        if (line.text.size() != m) {
            throw ParseError(line.number, "row length " + std::to_string(line.text.size()) + " != m = " +
                                              std::to_string(m));
        }
        for (const char c : line.text) {
            if (c != '0' && c != '1' && c != '?') {
                throw ParseError(line.number, std::string("illegal character '") + c + "'");
            }
        }
        rows.push_back(PartialString::from_string(line.text));
    }
    if (const auto extra = reader.next()) {
        throw ParseError(extra->number, "row count exceeds n = " + std::to_string(n));
    }
    return Instance(k, d, std::move(rows));
}

inline Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

/// Normalised form: no comments, single spaces, '\n' line ends.
inline std::string serialize_instance(const Instance& inst) {
    std::string out;
    out += std::to_string(inst.k()) + ' ' + std::to_string(inst.d()) + '\n';
    out += std::to_string(inst.n()) + ' ' + std::to_string(inst.m()) + '\n';
    for (const auto& row : inst.rows()) {
        out += row.to_string();
        out += '\n';
    }
    return out;
}

/// Reads a solution: one binary center per line, then a final line with the
/// 1-based cluster index of every row.
inline Solution parse_solution(std::istream& in) {
    detail::LineReader reader(in);
    std::vector<detail::LineReader::Line> lines;
    while (auto line = reader.next()) lines.push_back(std::move(*line));
    if (lines.size() < 2) throw ParseError(reader.line_no(), "solution needs center lines and an assignment line");

    Solution sol;
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
        for (const char c : lines[i].text) {
            if (c != '0' && c != '1') throw ParseError(lines[i].number, std::string("illegal center character '") + c + "'");
        }
        sol.centers.push_back(BitVector::from_string(lines[i].text));
    }
    for (const long long idx : detail::parse_integers(lines.back())) {
        if (idx < 1) throw ParseError(lines.back().number, "cluster indices are 1-based");
        sol.assignment.push_back(static_cast<std::size_t>(idx - 1));
    }
    return sol;
}

inline Solution parse_solution(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_solution(in);
}

inline std::string serialize_solution(const Solution& sol) {
    std::string out;
    for (const auto& c : sol.centers) {
        out += c.to_string();
        out += '\n';
    }
    for (std::size_t r = 0; r < sol.assignment.size(); ++r) {
        if (r != 0) out += ' ';
        out += std::to_string(sol.assignment[r] + 1);
    }
    out += '\n';
    return out;
}

}  // namespace kcme

#endif  // KCME_IO_HPP
