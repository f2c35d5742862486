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


#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>

#include <mosls/construct.hpp>
#include <mosls/designs.hpp>

#include "test_support.hpp"

using namespace mosls;
using mosls::testing::load;
using mosls::testing::square;

namespace {

LatinSquare cyclic(int n) {
    std::vector<int> cells;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cells.push_back((i + j) % n + 1);
    return LatinSquare({1, n}, cells);
}

// Sudoku squares of type (q,r) by backtracking, stopping after `cap` squares. Symbols are tried
// in the order given by `order_of[pos]`.
void enumerate_sudoku(SudokuShape sh, std::vector<int>& cells, std::size_t pos, std::vector<LatinSquare>& out,
                      std::size_t cap, const std::vector<std::vector<int>>& order_of) {
    const int n = sh.order();
    if (out.size() >= cap) return;
    if (pos == cells.size()) {
        out.emplace_back(sh, cells);
        return;
    }
    const int i = static_cast<int>(pos) / n, j = static_cast<int>(pos) % n;
    for (int s : order_of[pos]) {
        bool ok = true;
        for (int k = 0; k < j && ok; ++k) ok = cells[static_cast<std::size_t>(i * n + k)] != s;
        for (int k = 0; k < i && ok; ++k) ok = cells[static_cast<std::size_t>(k * n + j)] != s;
        for (int a = i / sh.q * sh.q; a <= i && ok; ++a)
            for (int b = j / sh.r * sh.r; b < (j / sh.r + 1) * sh.r && ok; ++b)
                if (a * n + b < static_cast<int>(pos)) ok = cells[static_cast<std::size_t>(a * n + b)] != s;
        if (!ok) continue;
        cells[pos] = s;
        enumerate_sudoku(sh, cells, pos + 1, out, cap, order_of);
        cells[pos] = 0;
    }
}

// Block-permutational by brute force over all row and column permutations of the (0,0)-block.
bool block_permutational_oracle(const LatinSquare& L) {
    const SudokuShape sh = L.shape();
    const Block M = block(L, 0, 0);
    for (int i = 0; i < sh.r; ++i)
        for (int j = 0; j < sh.q; ++j) {
            const Block N = block(L, i, j);
            std::vector<int> sigma = mosls::testing::identity_map(sh.q);
            bool found = false;
            do {
                std::vector<int> tau = mosls::testing::identity_map(sh.r);
                do {
                    bool eq = true;
                    for (int a = 0; a < sh.q && eq; ++a)
                        for (int b = 0; b < sh.r && eq; ++b)
                            eq = N(a, b) == M(sigma[static_cast<std::size_t>(a)], tau[static_cast<std::size_t>(b)]);
                    found = found || eq;
                } while (!found && std::next_permutation(tau.begin(), tau.end()));
            } while (!found && std::next_permutation(sigma.begin(), sigma.end()));
            if (!found) return false;
        }
    return true;
}

}  // namespace

TEST(Designs, IsLatin) {
    const auto pair = load("mosls4_pair.txt");
    EXPECT_TRUE(is_latin(pair[0]));
    EXPECT_TRUE(is_latin(cyclic(7)));
    EXPECT_FALSE(is_latin(square({1, 2}, {{1, 2}, {1, 2}})));
    EXPECT_THROW(is_latin(square({1, 2}, {{1, 3}, {2, 1}})), DomainError);
}

TEST(Designs, IsSudoku) {
    EXPECT_TRUE(is_sudoku(load("sudoku9.txt")[0]));
    EXPECT_FALSE(is_sudoku(load("latin4_cycle_switched.txt")[0]));
    EXPECT_TRUE(is_sudoku(cyclic(5)));
    EXPECT_THROW(is_sudoku(square({1, 2}, {{1, 2}, {1, 2}})), DomainError);
}

TEST(Designs, Orthogonality) {
    const auto pair = load("mosls4_pair.txt");
    EXPECT_TRUE(are_orthogonal(pair[0], pair[1]));
    EXPECT_TRUE(are_orthogonal(pair[1], pair[0]));
    EXPECT_FALSE(are_orthogonal(pair[0], pair[0]));
    EXPECT_FALSE(are_orthogonal(cyclic(4), cyclic(4)));
}

TEST(Designs, Blocks) {
    const Block b = block(load("sudoku9.txt")[0], 0, 0);
    EXPECT_EQ(b.cells, (std::vector<int>{5, 6, 4, 9, 7, 8, 1, 2, 3}));
    const auto row = block(cyclic(4), 0, 0);
    EXPECT_EQ(row.cells, (std::vector<int>{1, 2, 3, 4}));
    const auto col = block(transpose(cyclic(4)), 0, 0);
    EXPECT_EQ(col.rows, 4);
    EXPECT_EQ(col.cells, (std::vector<int>{1, 2, 3, 4}));
    EXPECT_THROW(block(cyclic(4), 0, 1), DomainError);
    EXPECT_THROW(block(cyclic(4), 4, 0), DomainError);
}

TEST(Designs, BlockMapFactorization) {
    const Block M{0, 0, 2, 2, {1, 2, 3, 4}};
    const auto same = block_map_factorization(M, M);
    ASSERT_TRUE(same);
    EXPECT_EQ(same->row_perm, (std::vector<int>{0, 1}));
    EXPECT_EQ(same->col_perm, (std::vector<int>{0, 1}));
    const auto swapped = block_map_factorization(M, Block{0, 0, 2, 2, {2, 1, 4, 3}});
    ASSERT_TRUE(swapped);
    EXPECT_EQ(swapped->row_perm, (std::vector<int>{0, 1}));
    EXPECT_EQ(swapped->col_perm, (std::vector<int>{1, 0}));
    EXPECT_FALSE(block_map_factorization(M, Block{0, 0, 2, 2, {1, 4, 3, 2}}));
}

TEST(Designs, BlockPermutational) {
    EXPECT_TRUE(is_block_permutational(load("sudoku9.txt")[0]));
    EXPECT_TRUE(is_block_permutational(field_mosls({2, 1, 1})[0]));
    EXPECT_TRUE(is_block_permutational(cyclic(6)));
    EXPECT_FALSE(is_block_permutational(load("sudoku9_switched.txt")[0]));
    EXPECT_THROW(is_block_permutational(load("latin4_cycle_switched.txt")[0]), DomainError);
}

// The Kronecker criterion agrees with brute force: every Sudoku square of order <= 4, and a
// randomized sample of order 6 (there are about 2.8e7 squares of type (2,3)).
TEST(Designs, BlockPermutationalAgainstBruteForce) {
    std::mt19937 rng(5);
    const std::vector<std::pair<SudokuShape, std::size_t>> cases{
        {{2, 2}, SIZE_MAX}, {{1, 3}, SIZE_MAX}, {{3, 1}, SIZE_MAX}, {{1, 4}, SIZE_MAX}, {{2, 3}, 400}, {{3, 2}, 400}};
    for (const auto& [sh, cap] : cases) {
        const auto cells_n = static_cast<std::size_t>(sh.order() * sh.order());
        for (int round = 0; round < (cap == SIZE_MAX ? 1 : 5); ++round) {
            std::vector<std::vector<int>> order_of(cells_n);
            for (auto& o : order_of) {
                o.resize(static_cast<std::size_t>(sh.order()));
                std::iota(o.begin(), o.end(), 1);
                if (cap != SIZE_MAX) std::shuffle(o.begin(), o.end(), rng);
            }
            std::vector<LatinSquare> all;
            std::vector<int> cells(cells_n, 0);
            enumerate_sudoku(sh, cells, 0, all, cap == SIZE_MAX ? cap : cap / 5, order_of);
            ASSERT_FALSE(all.empty());
            for (const auto& L : all) {
                ASSERT_TRUE(is_sudoku(L));
                EXPECT_EQ(is_block_permutational(L), block_permutational_oracle(L));
            }
        }
    }
    // both outcomes occur at order 4
    std::vector<LatinSquare> four;
    std::vector<int> cells(16, 0);
    std::vector<std::vector<int>> order_of(16, {1, 2, 3, 4});
    enumerate_sudoku({2, 2}, cells, 0, four, SIZE_MAX, order_of);
    EXPECT_EQ(four.size(), 288u);
    const auto yes = std::count_if(four.begin(), four.end(), [](const LatinSquare& L) { return is_block_permutational(L); });
    EXPECT_GT(yes, 0);
    EXPECT_LT(yes, 288);
}

TEST(Designs, Transpose) {
    const auto L = field_mosls({2, 1, 1})[0];
    const auto six = load("sudoku6.txt")[0];
    const auto T = transpose(six);
    EXPECT_EQ(T.shape(), (SudokuShape{3, 2}));
    EXPECT_TRUE(is_sudoku(T));
    EXPECT_EQ(transpose(T), six);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) EXPECT_EQ(T(i, j), six(j, i));
    EXPECT_EQ(transpose(transpose(L)), L);
}

TEST(Designs, CheckFamily) {
    const auto rep = check_family(load("mosls4_pair.txt"));
    EXPECT_TRUE(rep.all_pass());
    const auto bad = check_family(MoslsFamily({2, 2}, {load("sudoku4.txt")[0], load("sudoku4.txt")[0]}));
    EXPECT_FALSE(bad.all_pass());
    EXPECT_FALSE(bad.orthogonal[0][1]);
}

TEST(Designs, ShapeErrors) {
    EXPECT_THROW(LatinSquare({2, 2}, {1, 2, 3}), DomainError);
    EXPECT_THROW(LatinSquare({0, 2}, {}), DomainError);
    EXPECT_THROW(MoslsFamily({2, 2}, {cyclic(4)}), DomainError);
}
