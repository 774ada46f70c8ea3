#pragma once

// .dmat text format:
//
//   t n\n
//   <row 0: exactly n characters from {0,1}>\n
//   ...
//   <row t-1>\n
//
// Header is two base-10 integers separated by one space. Row i, position j
// is M(i,j). The trailing newline is mandatory; no comments, no '\r'.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "disjunct/errors.hpp"
#include "disjunct/matrix.hpp"

namespace disjunct {

namespace detail {

inline bool parse_size(std::string_view s, std::size_t& out) {
    if (s.empty() || s.front() < '0' || s.front() > '9') return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace detail

inline BinaryMatrix read_matrix(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& line) -> bool {
        if (pos >= text.size()) return false;
        auto nl = text.find('\n', pos);
        ++line_no;
        if (nl == std::string_view::npos)
            throw ParseError(line_no, "missing trailing newline");
        line = text.substr(pos, nl - pos);
        pos = nl + 1;
        return true;
    };

    std::string_view header;
    if (!next_line(header)) throw ParseError(1, "empty input");
    auto sp = header.find(' ');
    std::size_t t = 0, n = 0;
    if (sp == std::string_view::npos || !detail::parse_size(header.substr(0, sp), t) ||
        !detail::parse_size(header.substr(sp + 1), n))
        throw ParseError(line_no, "malformed header, expected \"t n\"");
    if (t == 0 || n == 0) throw ParseError(line_no, "t and n must be positive");

    std::vector<BitSet> cols(n, BitSet(t));
    for (std::size_t i = 0; i < t; ++i) {
        std::string_view row;
        if (!next_line(row))
            throw ParseError(line_no + 1, "expected " + std::to_string(t) + " rows, got " +
                                              std::to_string(i));
        for (std::size_t j = 0; j < row.size(); ++j) {
            const char ch = row[j];
            if (ch != '0' && ch != '1') throw ParseError(line_no, "invalid character");
            if (j < n && ch == '1') cols[j].set(i);
        }
        if (row.size() != n)
            throw ParseError(line_no, "wrong row length " + std::to_string(row.size()) +
                                          ", expected " + std::to_string(n));
    }
    if (pos != text.size()) throw ParseError(line_no + 1, "unexpected content after last row");

    std::vector<ColumnSupport> supports;
    supports.reserve(n);
    for (auto& c : cols) supports.emplace_back(std::move(c));
    return BinaryMatrix(t, std::move(supports));
}

inline std::string write_matrix(const BinaryMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    out.reserve(out.size() + m.rows() * (m.cols() + 1));
    for (RowId i = 0; i < m.rows(); ++i) {
        for (ColumnId j = 0; j < m.cols(); ++j) out.push_back(m.column(j).contains(i) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

inline BinaryMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return read_matrix(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.reason(), path.string());
    }
}

inline void save_matrix(const std::filesystem::path& path, const BinaryMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << write_matrix(m);
    if (!out) throw Error("write failed: " + path.string());
}

}  // namespace disjunct
