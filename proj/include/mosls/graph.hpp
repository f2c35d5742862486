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

// Cell graphs of a family of Latin squares. Vertices are the n^2 cells in row-major order
// (vertex of (row, col) is row * n + col). Two cells are adjacent in the MOLS graph when their
// tuples (row, col, L_k(row, col) for k in the subset) agree in exactly one coordinate; the
// MOSLS graph adds every pair inside one block that differs in both row and column.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "designs.hpp"
#include "error.hpp"
#include "matrix.hpp"

namespace mosls {

enum class GraphFlavor { Mols, Mosls };

struct CellGraph {
    SudokuShape shape;
    std::size_t family_size = 0;  ///< number of squares in the selected subset
    GraphFlavor flavor = GraphFlavor::Mols;
    IntMatrix adjacency;

    int order() const { return shape.order(); }
    std::size_t vertex_count() const { return adjacency.rows(); }
    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (std::size_t u = 0; u < vertex_count(); ++u) d += adjacency(v, u) != 0;
        return d;
    }
};

namespace detail {

inline std::vector<std::size_t> check_subset(const MoslsFamily& F, const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> s = subset;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw DomainError("subset contains a repeated index");
    for (auto k : s)
        if (k >= F.size())
            throw DomainError("subset index " + std::to_string(k + 1) + " exceeds family size " + std::to_string(F.size()));
    return subset;
}

inline bool same_block(const SudokuShape& sh, int row1, int col1, int row2, int col2) {
    return row1 / sh.q == row2 / sh.q && col1 / sh.r == col2 / sh.r;
}

}  // namespace detail

/// Indices 0..f-1.
inline std::vector<std::size_t> full_subset(const MoslsFamily& F) {
    std::vector<std::size_t> s(F.size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = k;
    return s;
}

/// Throws VerificationError when two distinct cells agree in two coordinates, naming the
/// offending pair of lines.
inline CellGraph build_mols_graph(const MoslsFamily& F, const std::vector<std::size_t>& subset) {
    const auto sel = detail::check_subset(F, subset);
    const int n = F.order();
    const auto N = static_cast<std::size_t>(n) * n;
    CellGraph G{F.shape(), sel.size(), GraphFlavor::Mols, IntMatrix(N, N)};

    // coordinate labels: 0 = row, 1 = column, 2 + i = square sel[i]
    auto label = [&](std::size_t c) {
        return c == 0 ? std::string("row") : c == 1 ? std::string("column") : "square " + std::to_string(sel[c - 2] + 1);
    };
    std::vector<std::size_t> agree;
    for (std::size_t x = 0; x < N; ++x) {
        const int i = static_cast<int>(x) / n, j = static_cast<int>(x) % n;
        for (std::size_t y = x + 1; y < N; ++y) {
            const int k = static_cast<int>(y) / n, l = static_cast<int>(y) % n;
            agree.clear();
            if (i == k) agree.push_back(0);
            if (j == l) agree.push_back(1);
            for (std::size_t s = 0; s < sel.size(); ++s)
                if (F[sel[s]](i, j) == F[sel[s]](k, l)) agree.push_back(2 + s);
            if (agree.size() > 1)
                throw VerificationError("cells (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                                        std::to_string(k + 1) + "," + std::to_string(l + 1) + ") agree in both " +
                                        label(agree[0]) + " and " + label(agree[1]) +
                                        "; the family is not a set of mutually orthogonal Latin squares");
            if (agree.size() == 1) G.adjacency(x, y) = G.adjacency(y, x) = 1;
        }
    }
    return G;
}

/// Block-edge matrix: 1 for distinct cells of one block that differ in row and in column.
inline IntMatrix block_edge_matrix(const SudokuShape& shape) {
    const int n = shape.order();
    const auto N = static_cast<std::size_t>(n) * n;
    IntMatrix B(N, N);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y) {
            const int i = static_cast<int>(x) / n, j = static_cast<int>(x) % n;
            const int k = static_cast<int>(y) / n, l = static_cast<int>(y) % n;
            if (i != k && j != l && detail::same_block(shape, i, j, k, l)) B(x, y) = 1;
        }
    return B;
}

inline CellGraph build_mosls_graph(const MoslsFamily& F, const std::vector<std::size_t>& subset) {
    CellGraph G = build_mols_graph(F, subset);
    G.adjacency = G.adjacency + block_edge_matrix(F.shape());
    G.flavor = GraphFlavor::Mosls;
    return G;
}

inline CellGraph build_mosls_graph(const LatinSquare& L) {
    return build_mosls_graph(MoslsFamily(L.shape(), {L}), {0});
}

struct SrgParameters {
    long long v = 0;
    long long k = 0;
    long long lambda = 0;
    long long mu = 0;

    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Exhaustive common-neighbour count. Absent when the graph is not strongly regular (including
/// the empty and complete graphs).
inline std::optional<SrgParameters> srg_check(const CellGraph& G) {
    const std::size_t N = G.vertex_count();
    if (N < 2) return std::nullopt;
    const std::size_t words = (N + 63) / 64;
    std::vector<std::uint64_t> bits(N * words, 0);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
            if (G.adjacency(x, y)) bits[x * words + y / 64] |= std::uint64_t{1} << (y % 64);

    const auto k = static_cast<long long>(G.degree(0));
    for (std::size_t x = 1; x < N; ++x)
        if (static_cast<long long>(G.degree(x)) != k) return std::nullopt;
    if (k == 0 || k == static_cast<long long>(N) - 1) return std::nullopt;

    std::optional<long long> lambda, mu;
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = x + 1; y < N; ++y) {
            long long common = 0;
            for (std::size_t w = 0; w < words; ++w) common += std::popcount(bits[x * words + w] & bits[y * words + w]);
            auto& slot = G.adjacency(x, y) ? lambda : mu;
            if (!slot) slot = common;
            else if (*slot != common) return std::nullopt;
        }
    return SrgParameters{static_cast<long long>(N), k, lambda.value_or(0), mu.value_or(0)};
}

struct QuotientMatrix {
    std::vector<std::vector<std::size_t>> parts;
    IntMatrix entries;
};

/// The blocks B_{i,j} as vertex sets, ordered B_{0,0}, ..., B_{0,q-1}, ..., B_{r-1,q-1}.
inline std::vector<std::vector<std::size_t>> block_partition(const SudokuShape& shape) {
    const int n = shape.order();
    std::vector<std::vector<std::size_t>> parts(static_cast<std::size_t>(n));
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col)
            parts[static_cast<std::size_t>((row / shape.q) * shape.q + col / shape.r)].push_back(
                static_cast<std::size_t>(row * n + col));
    return parts;
}

/// Counts neighbours of every vertex in every part; throws VerificationError if the counts are
/// not constant across a part.
inline QuotientMatrix quotient_matrix(const CellGraph& G, const std::vector<std::vector<std::size_t>>& parts) {
    const std::size_t N = G.vertex_count();
    std::vector<std::size_t> part_of(N, parts.size());
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (auto v : parts[a]) {
            if (v >= N || part_of[v] != parts.size()) throw DomainError("quotient_matrix: parts do not partition the vertices");
            part_of[v] = a;
        }
    if (std::count(part_of.begin(), part_of.end(), parts.size()) != 0)
        throw DomainError("quotient_matrix: parts do not cover the vertices");

    QuotientMatrix Q{parts, IntMatrix(parts.size(), parts.size())};
    std::vector<long long> counts(parts.size());
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t idx = 0; idx < parts[a].size(); ++idx) {
            const auto x = parts[a][idx];
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t y = 0; y < N; ++y)
                if (G.adjacency(x, y)) ++counts[part_of[y]];
            for (std::size_t b = 0; b < parts.size(); ++b) {
                if (idx == 0) Q.entries(a, b) = counts[b];
                else if (Q.entries(a, b) != counts[b])
                    throw VerificationError("partition is not equitable: part " + std::to_string(a + 1) +
                                            " has vertices with different neighbour counts into part " +
                                            std::to_string(b + 1));
            }
        }
    return Q;
}

/// Exact test of A_MOLS * B == B * A_MOLS.
inline bool commute_check(const MoslsFamily& F, const std::vector<std::size_t>& subset) {
    const IntMatrix A = build_mols_graph(F, subset).adjacency;
    const IntMatrix B = block_edge_matrix(F.shape());
    return A * B == B * A;
}

/// One `u v` line per edge, 1-based, u < v.
inline void write_edge_list(std::ostream& out, const CellGraph& G) {
    for (std::size_t x = 0; x < G.vertex_count(); ++x)
        for (std::size_t y = x + 1; y < G.vertex_count(); ++y)
            if (G.adjacency(x, y)) out << x + 1 << ' ' << y + 1 << '\n';
}

inline void write_dense_matrix(std::ostream& out, const CellGraph& G) { out << G.adjacency; }

}  // namespace mosls
