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

#include <regex>
#include <sstream>

#include <mosls/mosls.hpp>

#include "test_support.hpp"

using namespace mosls;
using mosls::testing::graph_oracle;
using mosls::testing::load;

namespace {

std::vector<LatinSquare> pick(const MoslsFamily& F, std::size_t f) {
    return std::vector<LatinSquare>(F.squares().begin(), F.squares().begin() + static_cast<long>(f));
}

std::vector<std::size_t> first(std::size_t f) {
    std::vector<std::size_t> s(f);
    for (std::size_t k = 0; k < f; ++k) s[k] = k;
    return s;
}

// Reference 16x16 adjacency matrix of the order-4 orthogonal Sudoku pair, block-major order.
const char* const kBlockMajorMatrix[16] = {
    "0111111111111001", "1011111111110110", "1101111111110110", "1110111111111001",
    "1111011110011111", "1111101101101111", "1111110101101111", "1111111010011111",
    "1111100101111111", "1111011010111111", "1111011011011111", "1111100111101111",
    "1001111111110111", "0110111111111011", "0110111111111101", "1001111111111110"};

}  // namespace

TEST(Graph, MatchesDefinitionOnConstructedFamilies) {
    for (const auto& F : {field_mosls({2, 1, 1}), field_mosls({3, 1, 1}), field_mosls({2, 1, 2}),
                          composite_family({{2, 1, 0}, {3, 0, 1}}), plain_mols(5, 1)}) {
        for (std::size_t f = 0; f <= F.size(); ++f) {
            const auto mols = build_mols_graph(F, first(f));
            const auto mosls = build_mosls_graph(F, first(f));
            EXPECT_EQ(mols.adjacency, graph_oracle(pick(F, f), F.shape(), false));
            EXPECT_EQ(mosls.adjacency, graph_oracle(pick(F, f), F.shape(), true));
            EXPECT_TRUE(mosls.adjacency.symmetric());
            EXPECT_EQ(mosls.adjacency.trace(), 0);
            const auto [q, r] = F.shape();
            const long long n = q * r;
            for (std::size_t v = 0; v < mosls.vertex_count(); ++v) {
                EXPECT_EQ(static_cast<long long>(mosls.degree(v)), (static_cast<long long>(f) + 2) * (n - 1) + (q - 1) * (r - 1));
                EXPECT_EQ(static_cast<long long>(mols.degree(v)), (static_cast<long long>(f) + 2) * (n - 1));
            }
        }
    }
}

TEST(Graph, SmallCases) {
    const MoslsFamily two({1, 2}, {LatinSquare({1, 2}, {1, 2, 2, 1})});
    const auto K4 = build_mols_graph(two, {0});
    EXPECT_EQ(K4.adjacency, IntMatrix::from_rows({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));

    const auto rook = build_mols_graph(field_mosls({2, 1, 1}), {});
    for (std::size_t v = 0; v < 16; ++v) EXPECT_EQ(rook.degree(v), 6u);
    EXPECT_EQ(srg_check(rook), (SrgParameters{16, 6, 2, 2}));

    const auto pair = build_mosls_graph(load("mosls4_pair.txt"), {0, 1});
    for (std::size_t v = 0; v < 16; ++v) EXPECT_EQ(pair.degree(v), 13u);
    const auto six = build_mosls_graph(load("sudoku6.txt")[0]);
    for (std::size_t v = 0; v < 36; ++v) EXPECT_EQ(six.degree(v), 17u);
}

TEST(Graph, RowShapeHasNoBlockEdges) {
    const auto F = plain_mols(2, 2);
    EXPECT_EQ(block_edge_matrix(F.shape()), IntMatrix(16, 16));
    EXPECT_EQ(build_mosls_graph(F, {0, 1}).adjacency, build_mols_graph(F, {0, 1}).adjacency);
}

TEST(Graph, Order4MatrixInBlockMajorOrder) {
    const auto G = build_mosls_graph(load("mosls4_pair.txt"), {0, 1});
    // reference vertex index = rb*8 + cb*4 + rw*2 + cw
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v) {
            auto cell = [](int idx) {
                const int rb = idx >> 3 & 1, cb = idx >> 2 & 1, rw = idx >> 1 & 1, cw = idx & 1;
                return static_cast<std::size_t>((rb * 2 + rw) * 4 + cb * 2 + cw);
            };
            EXPECT_EQ(G.adjacency(cell(u), cell(v)), kBlockMajorMatrix[u][v] - '0') << u << "," << v;
        }
}

TEST(Graph, NonOrthogonalFamilyIsReported) {
    const auto L = load("sudoku4.txt")[0];
    const MoslsFamily twice({2, 2}, {L, L});
    try {
        build_mols_graph(twice, {0, 1});
        FAIL() << "expected VerificationError";
    } catch (const VerificationError& e) {
        EXPECT_TRUE(std::regex_search(e.what(), std::regex("square 1 and square 2")));
    }
    EXPECT_THROW(build_mols_graph(twice, {0, 0}), DomainError);
    EXPECT_THROW(build_mols_graph(twice, {2}), DomainError);
}

TEST(Graph, SrgParameters) {
    for (const auto& F : {field_mosls({2, 1, 1}), field_mosls({3, 1, 1}), field_mosls({2, 1, 2})}) {
        const long long n = F.order();
        for (std::size_t f = 0; f <= F.size(); ++f) {
            const long long ff = static_cast<long long>(f);
            const SrgParameters expected{n * n, (ff + 2) * (n - 1), n - 2 + ff * (ff + 1), (ff + 1) * (ff + 2)};
            const auto got = srg_check(build_mols_graph(F, first(f)));
            if (ff + 2 < n + 1) {
                ASSERT_TRUE(got) << "n=" << n << " f=" << f;
                EXPECT_EQ(*got, expected);
            }
        }
    }
    EXPECT_EQ(srg_check(build_mols_graph(field_mosls({2, 1, 1}), {0, 1})), (SrgParameters{16, 12, 8, 12}));
    EXPECT_EQ(srg_check(build_mols_graph(field_mosls({2, 1, 1}), {0})), (SrgParameters{16, 9, 4, 6}));
    EXPECT_FALSE(srg_check(build_mosls_graph(field_mosls({2, 1, 1}), {0})));
    EXPECT_FALSE(srg_check(build_mosls_graph(field_mosls({2, 1, 1}), {0, 1})));
}

TEST(Graph, BlockPartitionIsEquitable) {
    for (const auto& F : {field_mosls({2, 1, 1}), field_mosls({3, 1, 1}), field_mosls({2, 1, 2}),
                          composite_family({{2, 1, 0}, {3, 0, 1}})}) {
        const auto [q, r] = F.shape();
        const auto parts = block_partition(F.shape());
        ASSERT_EQ(parts.size(), static_cast<std::size_t>(q * r));
        for (std::size_t f = 1; f <= F.size(); ++f) {
            const auto G = build_mosls_graph(F, first(f));
            const auto Q = quotient_matrix(G, parts);
            // Row sums equal the degree; counts follow from the definition for one vertex per part.
            for (std::size_t a = 0; a < parts.size(); ++a) {
                long long sum = 0;
                for (std::size_t b = 0; b < parts.size(); ++b) {
                    sum += Q.entries(a, b);
                    long long count = 0;
                    for (auto y : parts[b]) count += G.adjacency(parts[a].back(), y);
                    EXPECT_EQ(Q.entries(a, b), count);
                }
                EXPECT_EQ(sum, static_cast<long long>(G.degree(0)));
            }
        }
    }
}

TEST(Graph, QuotientSpectrum) {
    const auto G = build_mosls_graph(field_mosls({2, 1, 1}), {0, 1});
    const auto Q = quotient_matrix(G, block_partition(G.shape));
    EXPECT_EQ(Q.entries.rows(), 4u);
    EXPECT_EQ(mosls::testing::charpoly_oracle(Q.entries), closed_to_poly(integer_spectrum({{13, 1}, {1, 2}, {-3, 1}})));
    EXPECT_EQ(closed_to_poly(quotient_spectrum(2, 2, 2)), closed_to_poly(integer_spectrum({{13, 1}, {1, 2}, {-3, 1}})));

    const auto row = build_mosls_graph(plain_mols(3, 1), {0, 1});
    const auto Q1 = quotient_matrix(row, block_partition(row.shape));
    ASSERT_EQ(Q1.entries.rows(), 3u);
    // shape (1,n): parts are rows
    const auto Qrow = quotient_matrix(row, {[] {
                                               std::vector<std::size_t> all(9);
                                               for (std::size_t k = 0; k < 9; ++k) all[k] = k;
                                               return all;
                                           }()});
    EXPECT_EQ(Qrow.entries(0, 0), 8);
}

TEST(Graph, QuotientRejectsNonEquitable) {
    const auto G = build_mosls_graph(field_mosls({2, 1, 1}), {0});
    std::vector<std::vector<std::size_t>> parts{{0}, {}};
    for (std::size_t v = 1; v < 16; ++v) parts[1].push_back(v);
    EXPECT_THROW(quotient_matrix(G, parts), VerificationError);
    EXPECT_THROW(quotient_matrix(G, {{0, 1}}), DomainError);
}

TEST(Graph, Commutation) {
    EXPECT_TRUE(commute_check(field_mosls({2, 1, 1}), {0, 1}));
    EXPECT_TRUE(commute_check(field_mosls({3, 1, 1}), {0}));
    EXPECT_TRUE(commute_check(load("sudoku9.txt"), {0}));
    EXPECT_FALSE(commute_check(load("sudoku9_switched.txt"), {0}));
    EXPECT_FALSE(commute_check(load("sudoku4_switched.txt"), {0}));
}

TEST(Graph, Export) {
    const MoslsFamily two({1, 2}, {LatinSquare({1, 2}, {1, 2, 2, 1})});
    const auto G = build_mols_graph(two, {0});
    std::ostringstream edges, dense;
    write_edge_list(edges, G);
    write_dense_matrix(dense, G);
    EXPECT_EQ(edges.str(), "1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    EXPECT_EQ(dense.str(), "0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 0\n");
}
