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

// Cycle switching on two rows of a Latin square, the Sudoku-preserving exchange of two symbols
// inside a row-block or column-block, and the exact spectral change that such an exchange causes.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "designs.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "polynomial.hpp"

namespace mosls {

/// One cycle of the permutation L(row_a, i) -> L(row_b, i).
struct RowCycle {
    int row_a = 0;
    int row_b = 0;
    std::vector<int> columns;  ///< ascending
    std::vector<int> symbols;  ///< in cycle order, starting from the symbol in the first column

    friend bool operator==(const RowCycle&, const RowCycle&) = default;
};

namespace detail {

inline void check_row_is_permutation(const LatinSquare& L, int row) {
    const int n = L.order();
    if (row < 0 || row >= n) throw DomainError("row index " + std::to_string(row + 1) + " out of range");
    std::vector<char> seen(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) {
        const int s = L(row, j);
        if (s < 1 || s > n || std::exchange(seen[s], 1))
            throw DomainError("row " + std::to_string(row + 1) + " is not a permutation of the symbols");
    }
}

}  // namespace detail

/// Disjoint cycles of sigma: L(row_a, i) -> L(row_b, i), ordered by their first column.
inline std::vector<RowCycle> row_cycle_decompose(const LatinSquare& L, int row_a, int row_b) {
    if (row_a == row_b) throw DomainError("row_cycle_decompose: rows must differ");
    detail::check_row_is_permutation(L, row_a);
    detail::check_row_is_permutation(L, row_b);
    const int n = L.order();
    std::vector<int> column_of(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j < n; ++j) column_of[L(row_a, j)] = j;

    std::vector<char> done(static_cast<std::size_t>(n));
    std::vector<RowCycle> out;
    for (int start = 0; start < n; ++start) {
        if (done[start]) continue;
        RowCycle c{row_a, row_b, {}, {}};
        for (int j = start; !done[j]; j = column_of[L(row_b, j)]) {
            done[j] = 1;
            c.columns.push_back(j);
            c.symbols.push_back(L(row_a, j));
        }
        std::sort(c.columns.begin(), c.columns.end());
        out.push_back(std::move(c));
    }
    return out;
}

/// The cycle through the cell (row_a, column of `symbol` in row_a).
inline RowCycle find_row_cycle(const LatinSquare& L, int row_a, int row_b, int symbol) {
    for (auto& c : row_cycle_decompose(L, row_a, row_b))
        if (std::find(c.symbols.begin(), c.symbols.end(), symbol) != c.symbols.end()) return c;
    throw DomainError("symbol " + std::to_string(symbol) + " does not occur in row " + std::to_string(row_a + 1));
}

/// Swaps rows row_a and row_b on the cycle's columns. The result is checked to be Latin; the
/// Sudoku property is not preserved in general.
inline LatinSquare row_cycle_switch(const LatinSquare& L, const RowCycle& cycle) {
    const int n = L.order();
    if (cycle.row_a < 0 || cycle.row_a >= n || cycle.row_b < 0 || cycle.row_b >= n || cycle.row_a == cycle.row_b)
        throw DomainError("row_cycle_switch: invalid rows");
    LatinSquare out = L;
    for (int j : cycle.columns) {
        if (j < 0 || j >= n) throw DomainError("row_cycle_switch: column out of range");
        std::swap(out(cycle.row_a, j), out(cycle.row_b, j));
    }
    if (!is_latin(out)) throw VerificationError("row_cycle_switch: result is not Latin; the columns do not form a cycle");
    return out;
}

enum class LineBlockKind { RowBlock, ColumnBlock };

/// Exchange of symbols k1 and k2 inside one row-block (q consecutive rows) or column-block
/// (r consecutive columns). `index` is 0-based.
struct SwitchSpec {
    LineBlockKind kind = LineBlockKind::ColumnBlock;
    int index = 0;
    int k1 = 1;
    int k2 = 2;
};

/// Exchanges every occurrence of k1 and k2 inside the line-block. Valid when every line crossing
/// the line-block (a column for a row-block, a row for a column-block) has k1 and k2 both inside
/// or both outside it; the error names the first line that violates this.
inline LatinSquare sudoku_symbol_switch(const LatinSquare& L, const SwitchSpec& spec) {
    const int n = L.order();
    const auto [q, r] = L.shape();
    if (spec.k1 == spec.k2) throw DomainError("sudoku_symbol_switch: symbols must be distinct");
    if (spec.k1 < 1 || spec.k1 > n || spec.k2 < 1 || spec.k2 > n)
        throw DomainError("sudoku_symbol_switch: symbols must lie in [1, " + std::to_string(n) + "]");
    if (!is_sudoku(L)) throw DomainError("sudoku_symbol_switch: input is not a Sudoku Latin square");

    const bool rows = spec.kind == LineBlockKind::RowBlock;
    const int bands = rows ? r : q, width = rows ? q : r;
    if (spec.index < 0 || spec.index >= bands)
        throw DomainError(std::string("sudoku_symbol_switch: ") + (rows ? "row" : "column") + "-block index " +
                          std::to_string(spec.index + 1) + " out of range [1, " + std::to_string(bands) + "]");

    // cell (line, offset) of the line-block: line runs across it, offset inside it
    auto cell = [&](LatinSquare& M, int line, int offset) -> int& {
        return rows ? M(spec.index * width + offset, line) : M(line, spec.index * width + offset);
    };
    LatinSquare out = L;
    for (int line = 0; line < n; ++line) {
        int c1 = 0, c2 = 0;
        for (int o = 0; o < width; ++o) {
            c1 += cell(out, line, o) == spec.k1;
            c2 += cell(out, line, o) == spec.k2;
        }
        if (c1 != c2)
            throw DomainError(std::string("sudoku_symbol_switch: ") + (rows ? "column " : "row ") + std::to_string(line + 1) +
                              " has only one of the symbols " + std::to_string(spec.k1) + ", " + std::to_string(spec.k2) +
                              " inside the " + (rows ? "row" : "column") + "-block");
    }
    for (int line = 0; line < n; ++line)
        for (int o = 0; o < width; ++o) {
            int& s = cell(out, line, o);
            if (s == spec.k1) s = spec.k2;
            else if (s == spec.k2) s = spec.k1;
        }
    if (!is_latin(out) || !is_sudoku(out))
        throw VerificationError("sudoku_symbol_switch: internal error, result lost the Sudoku property");
    return out;
}

/// The quartic whose roots replace four eigenvalues after a row-block symbol switch in a
/// block-permutational Sudoku square of type (q, r).
inline IntPolynomial switch_quartic(long long q, long long r) {
    const long long q2 = q * q, r2 = r * r, r3 = r2 * r;
    return IntPolynomial{
        2 * q2 * r3 + 8 * q2 * r2 - 8 * q2 * r + 4 * q2 - 2 * q * r3 - 12 * q * r2 - 16 * q * r + 4 * r2 + 16 * r + 16,
        q2 * r3 + 4 * q2 * r2 - q * r3 - 12 * q * r2 - 24 * q * r + 4 * r2 + 24 * r + 32,
        q2 * r2 - 3 * q * r2 - 12 * q * r + r2 + 12 * r + 24,
        -2 * q * r + 2 * r + 8,
        1,
    };
}

/// (t + 2)(t + r + 2)(t - qr + 2)(t - qr + r + 2): the eigenvalues -2, -r-2, qr-2, qr-r-2 that
/// the switch removes.
inline IntPolynomial switch_removed_factor(long long q, long long r) {
    return IntPolynomial::linear(-2) * IntPolynomial::linear(-r - 2) * IntPolynomial::linear(q * r - 2) *
           IntPolynomial::linear(q * r - r - 2);
}

/// base * f(t) / ((t+2)(t+r+2)(t-qr+2)(t-qr+r+2)) for the characteristic polynomial `base` of
/// A_L + B (single square). VerificationError when base lacks the removed factor.
inline IntPolynomial switched_charpoly_expected(const IntPolynomial& base, long long q, long long r) {
    if (q < 2 || r < 2) throw DomainError("switched_charpoly_expected: need q, r >= 2");
    const auto [quot, rem] = base.divmod(switch_removed_factor(q, r));
    if (!rem.is_zero())
        throw VerificationError("switched_charpoly_expected: base polynomial is not divisible by "
                                "(t+2)(t+r+2)(t-qr+2)(t-qr+r+2); the theorem's hypotheses do not hold");
    return quot * switch_quartic(q, r);
}

/// (q, r) as they enter the spectral-change formula: the shape itself for a row-block switch,
/// the transposed shape for a column-block switch.
inline std::pair<long long, long long> switch_theorem_parameters(const SudokuShape& shape, const SwitchSpec& spec) {
    if (spec.kind == LineBlockKind::RowBlock) return {shape.q, shape.r};
    return {shape.r, shape.q};
}

struct SwitchTheoremCheck {
    bool applicable = false;
    std::string reason;  ///< why the formula does not apply, when !applicable
    IntPolynomial base;
    IntPolynomial actual;
    IntPolynomial expected;
    bool match = false;
};

/// Switches L, rebuilds both single-square MOSLS graphs and compares the exact characteristic
/// polynomial of the switched graph with the predicted one. The prediction is only asserted for
/// q, r >= 2 and a block-permutational L whose MOLS graph commutes with B.
inline SwitchTheoremCheck switching_theorem_check(const LatinSquare& L, const SwitchSpec& spec) {
    SwitchTheoremCheck out;
    const LatinSquare switched = sudoku_symbol_switch(L, spec);
    out.base = charpoly_exact(build_mosls_graph(L).adjacency);
    out.actual = charpoly_exact(build_mosls_graph(switched).adjacency);
    const auto [q, r] = L.shape();
    if (q < 2 || r < 2) {
        out.reason = "type has q or r < 2";
        return out;
    }
    if (!is_block_permutational(L)) {
        out.reason = "square is not block-permutational";
        return out;
    }
    const MoslsFamily single(L.shape(), {L});
    if (!commute_check(single, {0})) {
        out.reason = "MOLS graph does not commute with the block-edge matrix";
        return out;
    }
    out.applicable = true;
    const auto [tq, tr] = switch_theorem_parameters(L.shape(), spec);
    out.expected = switched_charpoly_expected(out.base, tq, tr);
    out.match = out.expected == out.actual;
    return out;
}

enum class CertificateVerdict { NotIsomorphic, Inconclusive };

inline std::string to_string(CertificateVerdict v) {
    return v == CertificateVerdict::NotIsomorphic ? "NOT-ISOMORPHIC" : "INCONCLUSIVE";
}

struct NonisomorphismCertificate {
    CertificateVerdict verdict = CertificateVerdict::Inconclusive;
    IntPolynomial charpoly_a;
    IntPolynomial charpoly_b;
    std::optional<std::size_t> differing_coefficient_index;  ///< lowest power whose coefficients differ
};

/// Differing characteristic polynomials of the single-square MOSLS graphs prove the squares
/// inequivalent; equal polynomials prove nothing.
inline NonisomorphismCertificate nonisomorphism_certificate(const LatinSquare& a, const LatinSquare& b) {
    if (!(a.shape() == b.shape())) throw DomainError("nonisomorphism_certificate: shapes differ");
    NonisomorphismCertificate c;
    c.charpoly_a = charpoly_exact(build_mosls_graph(a).adjacency);
    c.charpoly_b = charpoly_exact(build_mosls_graph(b).adjacency);
    const auto deg = static_cast<std::size_t>(std::max(c.charpoly_a.degree(), c.charpoly_b.degree()) + 1);
    for (std::size_t k = 0; k < deg; ++k)
        if (c.charpoly_a.coeff(k) != c.charpoly_b.coeff(k)) {
            c.differing_coefficient_index = k;
            break;
        }
    c.verdict = c.differing_coefficient_index ? CertificateVerdict::NotIsomorphic : CertificateVerdict::Inconclusive;
    return c;
}

inline nlohmann::json to_json(const NonisomorphismCertificate& c) {
    return {{"verdict", to_string(c.verdict)},
            {"charpoly_a", c.charpoly_a.coefficient_strings()},
            {"charpoly_b", c.charpoly_b.coefficient_strings()},
            {"differing_coefficient_index",
             c.differing_coefficient_index ? nlohmann::json(*c.differing_coefficient_index) : nlohmann::json(nullptr)}};
}

}  // namespace mosls
