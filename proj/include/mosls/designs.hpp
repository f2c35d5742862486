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

// Latin squares with a Sudoku shape annotation, orthogonality, blocks and the
// block-permutational property.
//
// Indices (rows, columns, block coordinates) are 0-based; symbols are 1-based in [1, n].
// A square of shape (q, r) has order n = q*r and is tiled by q x r blocks: block (i, j) with
// i in [0, r) and j in [0, q) covers rows [i*q, (i+1)*q) and columns [j*r, (j+1)*r).

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace mosls {

struct SudokuShape {
    int q = 1;  ///< rows per block
    int r = 1;  ///< columns per block

    int order() const noexcept { return q * r; }
    friend bool operator==(const SudokuShape&, const SudokuShape&) = default;
};

inline std::string to_string(const SudokuShape& s) {
    return "(" + std::to_string(s.q) + "," + std::to_string(s.r) + ")";
}

class LatinSquare {
public:
    LatinSquare() = default;

    /// `entries` is row-major of size n*n. Only dimensions are checked here; the Latin and
    /// Sudoku properties are checked by is_latin / is_sudoku.
    LatinSquare(SudokuShape shape, std::vector<int> entries) : shape_(shape), entries_(std::move(entries)) {
        if (shape_.q < 1 || shape_.r < 1) throw DomainError("shape parameters must be positive");
        const auto n = static_cast<std::size_t>(shape_.order());
        if (entries_.size() != n * n)
            throw DomainError("expected " + std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
    }

    const SudokuShape& shape() const noexcept { return shape_; }
    int order() const noexcept { return shape_.order(); }
    int operator()(int row, int col) const { return entries_[static_cast<std::size_t>(row * order() + col)]; }
    int& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row * order() + col)]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    SudokuShape shape_{};
    std::vector<int> entries_;
};

class MoslsFamily {
public:
    MoslsFamily() = default;
    MoslsFamily(SudokuShape shape, std::vector<LatinSquare> squares) : shape_(shape), squares_(std::move(squares)) {
        for (const auto& s : squares_)
            if (!(s.shape() == shape_)) throw DomainError("all squares of a family must share the shape " + to_string(shape_));
    }

    const SudokuShape& shape() const noexcept { return shape_; }
    int order() const noexcept { return shape_.order(); }
    std::size_t size() const noexcept { return squares_.size(); }
    bool empty() const noexcept { return squares_.empty(); }
    const LatinSquare& operator[](std::size_t k) const { return squares_.at(k); }
    const std::vector<LatinSquare>& squares() const noexcept { return squares_; }

    friend bool operator==(const MoslsFamily&, const MoslsFamily&) = default;

private:
    SudokuShape shape_{};
    std::vector<LatinSquare> squares_;
};

/// A q x r subarray of a square.
struct Block {
    int block_row = 0;  ///< in [0, r)
    int block_col = 0;  ///< in [0, q)
    int rows = 0;
    int cols = 0;
    std::vector<int> cells;  ///< row-major, rows x cols

    int operator()(int a, int b) const { return cells[static_cast<std::size_t>(a * cols + b)]; }
};

namespace detail {

inline void check_symbols(const LatinSquare& L) {
    const int n = L.order();
    for (std::size_t k = 0; k < L.entries().size(); ++k) {
        const int s = L.entries()[k];
        if (s < 1 || s > n)
            throw DomainError("symbol " + std::to_string(s) + " at row " + std::to_string(k / n + 1) + ", column " +
                              std::to_string(k % n + 1) + " is outside [1, " + std::to_string(n) + "]");
    }
}

}  // namespace detail

inline bool is_latin(const LatinSquare& L) {
    detail::check_symbols(L);
    const int n = L.order();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j)
            if (std::exchange(seen[L(i, j)], 1)) return false;
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < n; ++j)
            if (std::exchange(seen[L(j, i)], 1)) return false;
    }
    return true;
}

inline Block block(const LatinSquare& L, int i, int j) {
    const auto [q, r] = L.shape();
    if (i < 0 || i >= r || j < 0 || j >= q)
        throw DomainError("block index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for shape " +
                          to_string(L.shape()));
    Block b{i, j, q, r, {}};
    b.cells.reserve(static_cast<std::size_t>(q * r));
    for (int a = 0; a < q; ++a)
        for (int c = 0; c < r; ++c) b.cells.push_back(L(i * q + a, j * r + c));
    return b;
}

/// Every block holds each symbol exactly once. Requires a Latin square.
inline bool is_sudoku(const LatinSquare& L) {
    if (!is_latin(L)) throw DomainError("is_sudoku: input is not a Latin square");
    const auto [q, r] = L.shape();
    std::vector<char> seen(static_cast<std::size_t>(L.order()) + 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < q; ++j) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int s : block(L, i, j).cells)
                if (std::exchange(seen[s], 1)) return false;
        }
    return true;
}

inline bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order() != b.order()) throw DomainError("are_orthogonal: orders differ");
    const int n = a.order();
    std::vector<char> seen(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        const int x = a.entries()[k], y = b.entries()[k];
        if (x < 1 || x > n || y < 1 || y > n) throw DomainError("are_orthogonal: symbol out of range");
        if (std::exchange(seen[static_cast<std::size_t>((x - 1) * n + (y - 1))], 1)) return false;
    }
    return true;
}

/// Row permutation sigma and column permutation tau with M(a,b) = M2(sigma[a], tau[b]).
struct BlockFactorization {
    std::vector<int> row_perm;
    std::vector<int> col_perm;

    friend bool operator==(const BlockFactorization&, const BlockFactorization&) = default;
};

/// Reads the unique cell bijection off the (distinct) symbols and accepts it only when it splits
/// into a row map and a column map, i.e. when the 0/1 matching matrix is a Kronecker product of two
/// permutation matrices.
inline std::optional<BlockFactorization> block_map_factorization(const Block& M, const Block& M2) {
    if (M.rows != M2.rows || M.cols != M2.cols) throw DomainError("block_map_factorization: block dimensions differ");
    int max_symbol = 0;
    for (int s : M.cells) max_symbol = std::max(max_symbol, s);
    for (int s : M2.cells) max_symbol = std::max(max_symbol, s);
    std::vector<int> where(static_cast<std::size_t>(max_symbol) + 1, -1);
    for (std::size_t k = 0; k < M2.cells.size(); ++k) {
        if (M2.cells[k] < 1) throw DomainError("block_map_factorization: invalid symbol");
        if (where[M2.cells[k]] != -1) throw DomainError("block_map_factorization: repeated entry in block");
        where[M2.cells[k]] = static_cast<int>(k);
    }
    std::vector<char> seen(where.size());
    for (int s : M.cells) {
        if (s < 1) throw DomainError("block_map_factorization: invalid symbol");
        if (std::exchange(seen[s], 1)) throw DomainError("block_map_factorization: repeated entry in block");
        if (where[s] == -1) throw DomainError("block_map_factorization: blocks use different symbol sets");
    }

    BlockFactorization f{std::vector<int>(M.rows, -1), std::vector<int>(M.cols, -1)};
    for (int a = 0; a < M.rows; ++a)
        for (int b = 0; b < M.cols; ++b) {
            const int k = where[M(a, b)];
            const int a2 = k / M.cols, b2 = k % M.cols;
            if (f.row_perm[a] == -1) f.row_perm[a] = a2;
            if (f.col_perm[b] == -1) f.col_perm[b] = b2;
            if (f.row_perm[a] != a2 || f.col_perm[b] != b2) return std::nullopt;
        }
    return f;
}

/// Every block is the (0,0) block up to independent row and column permutations.
inline bool is_block_permutational(const LatinSquare& L) {
    if (!is_sudoku(L)) throw DomainError("is_block_permutational: input is not a Sudoku Latin square");
    const auto [q, r] = L.shape();
    const Block first = block(L, 0, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < q; ++j)
            if (!block_map_factorization(first, block(L, i, j))) return false;
    return true;
}

inline LatinSquare transpose(const LatinSquare& L) {
    const int n = L.order();
    std::vector<int> e(L.entries().size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j * n + i)] = L(i, j);
    return LatinSquare(SudokuShape{L.shape().r, L.shape().q}, std::move(e));
}

inline MoslsFamily transpose(const MoslsFamily& F) {
    std::vector<LatinSquare> out;
    for (const auto& L : F.squares()) out.push_back(transpose(L));
    return MoslsFamily(SudokuShape{F.shape().r, F.shape().q}, std::move(out));
}

/// Per-square and pairwise verdicts for a family. Sudoku and block-permutational verdicts are
/// false (not errors) when the prerequisite property fails.
struct FamilyReport {
    std::vector<bool> latin;
    std::vector<bool> sudoku;
    std::vector<bool> block_permutational;
    std::vector<std::vector<bool>> orthogonal;  ///< symmetric; diagonal unused

    bool all_pass() const {
        const auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
        if (!all(latin) || !all(sudoku) || !all(block_permutational)) return false;
        for (std::size_t a = 0; a < orthogonal.size(); ++a)
            for (std::size_t b = 0; b < orthogonal.size(); ++b)
                if (a != b && !orthogonal[a][b]) return false;
        return true;
    }
};

inline FamilyReport check_family(const MoslsFamily& F) {
    FamilyReport rep;
    const std::size_t f = F.size();
    for (const auto& L : F.squares()) {
        const bool latin = is_latin(L);
        const bool sudoku = latin && is_sudoku(L);
        rep.latin.push_back(latin);
        rep.sudoku.push_back(sudoku);
        rep.block_permutational.push_back(sudoku && is_block_permutational(L));
    }
    rep.orthogonal.assign(f, std::vector<bool>(f, false));
    for (std::size_t a = 0; a < f; ++a)
        for (std::size_t b = a + 1; b < f; ++b)
            rep.orthogonal[a][b] = rep.orthogonal[b][a] = are_orthogonal(F[a], F[b]);
    return rep;
}

}  // namespace mosls
