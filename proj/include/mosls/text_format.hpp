/*
   Copyright 2026 The mosls Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// The `mosls v1` text format:
//
//   mosls v1
//   order <n> type <q> <r> count <f>
//   <n lines of n space-separated symbols>      (square 1)
//                                               (blank separator)
//   <n lines ...>                               (square 2)
//   ...

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "designs.hpp"
#include "error.hpp"

namespace mosls {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline long long parse_int(const std::string& tok, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    return v;
}

}  // namespace detail

inline MoslsFamily read_family(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string s; std::getline(in, s);) {
        if (!s.empty() && s.back() == '\r') s.pop_back();
        lines.push_back(s);
    }
    while (!lines.empty() && detail::split_ws(lines.back()).empty()) lines.pop_back();

    if (lines.empty() || detail::split_ws(lines[0]) != std::vector<std::string>{"mosls", "v1"})
        throw ParseError(1, "expected header 'mosls v1'");
    if (lines.size() < 2) throw ParseError(2, "missing 'order <n> type <q> <r> count <f>' line");
    const auto head = detail::split_ws(lines[1]);
    if (head.size() != 7 || head[0] != "order" || head[2] != "type" || head[5] != "count")
        throw ParseError(2, "expected 'order <n> type <q> <r> count <f>'");
    const long long n = detail::parse_int(head[1], 2), q = detail::parse_int(head[3], 2),
                    r = detail::parse_int(head[4], 2), f = detail::parse_int(head[6], 2);
    if (n < 1 || q < 1 || r < 1 || f < 0) throw ParseError(2, "order, type and count must be positive");
    if (q * r != n) throw ParseError(2, "type (" + head[3] + "," + head[4] + ") does not match order " + head[1]);
    if (n > 4096) throw ParseError(2, "order too large");

    const SudokuShape shape{static_cast<int>(q), static_cast<int>(r)};
    std::vector<LatinSquare> squares;
    std::size_t idx = 2;
    for (long long k = 0; k < f; ++k) {
        if (k > 0) {
            if (idx >= lines.size() || !detail::split_ws(lines[idx]).empty())
                throw ParseError(idx + 1, "expected a blank line between squares");
            ++idx;
        }
        std::vector<int> entries;
        entries.reserve(static_cast<std::size_t>(n * n));
        for (long long row = 0; row < n; ++row, ++idx) {
            if (idx >= lines.size())
                throw ParseError(idx + 1, "unexpected end of input in square " + std::to_string(k + 1));
            const auto toks = detail::split_ws(lines[idx]);
            if (static_cast<long long>(toks.size()) != n)
                throw ParseError(idx + 1, "expected " + std::to_string(n) + " symbols, got " + std::to_string(toks.size()));
            for (const auto& t : toks) {
                const long long s = detail::parse_int(t, idx + 1);
                if (s < 1 || s > n)
                    throw ParseError(idx + 1, "symbol " + t + " outside [1, " + std::to_string(n) + "]");
                entries.push_back(static_cast<int>(s));
            }
        }
        squares.emplace_back(shape, std::move(entries));
    }
    if (idx < lines.size()) throw ParseError(idx + 1, "trailing content after " + std::to_string(f) + " squares");
    return MoslsFamily(shape, std::move(squares));
}

inline MoslsFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    return read_family(in);
}

inline void write_family(std::ostream& out, const MoslsFamily& F) {
    const int n = F.order();
    out << "mosls v1\n";
    out << "order " << n << " type " << F.shape().q << ' ' << F.shape().r << " count " << F.size() << '\n';
    for (std::size_t k = 0; k < F.size(); ++k) {
        if (k > 0) out << '\n';
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) out << (j ? " " : "") << F[k](i, j);
            out << '\n';
        }
    }
}

inline std::string format_family(const MoslsFamily& F) {
    std::ostringstream out;
    write_family(out, F);
    return out.str();
}

}  // namespace mosls
