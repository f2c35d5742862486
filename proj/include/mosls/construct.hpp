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

// MOSLS families from finite fields (L_a = (x - a*y)), plain MOLS, and the recursive product
// of two families, plus the counting function for the constructive lower bound.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "designs.hpp"
#include "error.hpp"
#include "gf.hpp"

namespace mosls {

inline constexpr int kDefaultOrderCap = 16;

struct FieldConstructionSpec {
    int p = 2;
    int m = 1;
    int n = 1;

    int q() const { return static_cast<int>(detail::checked_pow(p, m)); }
    int r() const { return static_cast<int>(detail::checked_pow(p, n)); }
    int order() const { return q() * r(); }
    SudokuShape shape() const { return {q(), r()}; }
};

/// Rows of a type-(q,r) square are grouped into r cosets X_k of size q, columns into q cosets
/// Y_l of size r. X_k = f_k + <1, t, ..., t^{m-1}> with f_k running over the polynomials supported
/// on degrees [m, m+n-1]; Y_l = g_l + <1, ..., t^{n-1}> with g_l supported on [n, m+n-1].
struct CosetPartition {
    std::vector<std::vector<FieldElement>> row_cosets;
    std::vector<std::vector<FieldElement>> col_cosets;
};

namespace detail {

inline void check_spec(const FieldConstructionSpec& spec, int order_cap) {
    if (!is_prime(spec.p)) throw DomainError("p = " + std::to_string(spec.p) + " is not prime");
    if (spec.m < 0 || spec.n < 0 || spec.m + spec.n < 1) throw DomainError("need m, n >= 0 and m + n >= 1");
    if (checked_pow(spec.p, spec.m + spec.n) > order_cap)
        throw DomainError("order " + std::to_string(spec.p) + "^" + std::to_string(spec.m + spec.n) +
                          " exceeds the order cap " + std::to_string(order_cap));
}

/// Cosets of the span of {t^0..t^{low-1}} inside GF(p^d), translated by polynomials supported on
/// [low, d-1]; both levels in canonical order.
inline std::vector<std::vector<FieldElement>> cosets(const FieldCtx& ctx, int low) {
    const int p = ctx.characteristic(), d = ctx.degree();
    const long long inner = checked_pow(p, low), outer = checked_pow(p, d - low);
    std::vector<std::vector<FieldElement>> out;
    for (long long hi = 0; hi < outer; ++hi) {
        std::vector<FieldElement> coset;
        for (long long lo = 0; lo < inner; ++lo) coset.push_back(ctx.element_at(hi * inner + lo));
        out.push_back(std::move(coset));
    }
    return out;
}

}  // namespace detail

inline CosetPartition coset_partition(const FieldConstructionSpec& spec, const FieldCtx& ctx) {
    if (ctx.characteristic() != spec.p || ctx.degree() != spec.m + spec.n)
        throw DomainError("coset_partition: field context does not match (p, m + n)");
    return CosetPartition{detail::cosets(ctx, spec.m), detail::cosets(ctx, spec.n)};
}

/// L_a with rows ordered X_1, X_2, ... and columns Y_1, Y_2, ...; the symbol of cell (x, y) is
/// 1 + the canonical index of x - a*y. Sudoku of type (q, r) whenever deg(a) = m.
inline LatinSquare field_square(const FieldElement& a, const FieldConstructionSpec& spec, const FieldCtx& ctx,
                                const CosetPartition& part) {
    if (ctx.degree_of(a) < 0) throw DomainError("field_square: a must be nonzero");
    std::vector<FieldElement> rows, cols;
    for (const auto& c : part.row_cosets) rows.insert(rows.end(), c.begin(), c.end());
    for (const auto& c : part.col_cosets) cols.insert(cols.end(), c.begin(), c.end());
    const auto n = static_cast<std::size_t>(ctx.size());
    if (rows.size() != n || cols.size() != n) throw DomainError("field_square: partition does not cover the field");

    std::vector<int> entries;
    entries.reserve(n * n);
    for (const auto& x : rows)
        for (const auto& y : cols) entries.push_back(static_cast<int>(ctx.index_of(ctx.sub(x, ctx.mul(a, y)))) + 1);
    return LatinSquare(spec.shape(), std::move(entries));
}

/// All L_a with deg(a) = m: p^m (p-1) MOSLS of type (q, r). When n > m the (r, q) family is built
/// and transposed, so the size is max{p^m (p-1), p^n (p-1)}.
inline MoslsFamily field_mosls(const FieldConstructionSpec& spec, int order_cap = kDefaultOrderCap) {
    detail::check_spec(spec, order_cap);
    if (spec.m < 1 || spec.n < 1) throw DomainError("field_mosls needs m >= 1 and n >= 1; use plain_mols");
    if (spec.n > spec.m) return transpose(field_mosls(FieldConstructionSpec{spec.p, spec.n, spec.m}, order_cap));

    const FieldCtx ctx(spec.p, spec.m + spec.n);
    const auto part = coset_partition(spec, ctx);
    std::vector<LatinSquare> squares;
    for (const auto& a : ctx.elements())
        if (ctx.degree_of(a) == spec.m) squares.push_back(field_square(a, spec, ctx, part));
    return MoslsFamily(spec.shape(), std::move(squares));
}

/// The p^k - 1 squares L_a, a != 0, of order p^k with shape (1, p^k).
inline MoslsFamily plain_mols(int p, int k, int order_cap = kDefaultOrderCap) {
    const FieldConstructionSpec spec{p, 0, k};
    detail::check_spec(spec, order_cap);
    const FieldCtx ctx(p, k);
    const auto part = coset_partition(spec, ctx);
    std::vector<LatinSquare> squares;
    for (const auto& a : ctx.elements())
        if (ctx.degree_of(a) >= 0) squares.push_back(field_square(a, spec, ctx, part));
    return MoslsFamily(spec.shape(), std::move(squares));
}

/// Pair-composition of the first min(|F1|, |F2|) squares. Row (x1, x2) of the product sits in
/// row band (b1, b2) at offset (w1, w2), both pairs ordered lexicographically, where x1 = b1*q1 + w1
/// and x2 = b2*q2 + w2; columns likewise with bands of width r. Symbol = (s1 - 1) * n2 + s2.
inline MoslsFamily product(const MoslsFamily& F1, const MoslsFamily& F2) {
    if (F1.empty() || F2.empty()) throw DomainError("product: input family is empty");
    const auto [q1, r1] = F1.shape();
    const auto [q2, r2] = F2.shape();
    const int n1 = q1 * r1, n2 = q2 * r2, n = n1 * n2;
    const SudokuShape shape{q1 * q2, r1 * r2};

    auto row_of = [&](int x1, int x2) {
        const int b1 = x1 / q1, w1 = x1 % q1, b2 = x2 / q2, w2 = x2 % q2;
        return (b1 * r2 + b2) * (q1 * q2) + (w1 * q2 + w2);
    };
    auto col_of = [&](int y1, int y2) {
        const int c1 = y1 / r1, v1 = y1 % r1, c2 = y2 / r2, v2 = y2 % r2;
        return (c1 * q2 + c2) * (r1 * r2) + (v1 * r2 + v2);
    };

    std::vector<LatinSquare> squares;
    const std::size_t f = std::min(F1.size(), F2.size());
    for (std::size_t k = 0; k < f; ++k) {
        std::vector<int> e(static_cast<std::size_t>(n) * n);
        for (int x1 = 0; x1 < n1; ++x1)
            for (int x2 = 0; x2 < n2; ++x2)
                for (int y1 = 0; y1 < n1; ++y1)
                    for (int y2 = 0; y2 < n2; ++y2)
                        e[static_cast<std::size_t>(row_of(x1, x2) * n + col_of(y1, y2))] =
                            (F1[k](x1, y1) - 1) * n2 + F2[k](x2, y2);
        squares.emplace_back(shape, std::move(e));
    }
    return MoslsFamily(shape, std::move(squares));
}

/// Family for one prime: field MOSLS when m, n > 0, otherwise plain MOLS of shape (1, p^n) or
/// the transpose, of shape (p^m, 1).
inline MoslsFamily prime_family(const FieldConstructionSpec& spec, int order_cap = kDefaultOrderCap) {
    detail::check_spec(spec, order_cap);
    if (spec.m > 0 && spec.n > 0) return field_mosls(spec, order_cap);
    if (spec.m == 0) return plain_mols(spec.p, spec.n, order_cap);
    return transpose(plain_mols(spec.p, spec.m, order_cap));
}

/// Iterated product over per-prime families.
inline MoslsFamily composite_family(const std::vector<FieldConstructionSpec>& factors,
                                    int order_cap = kDefaultOrderCap) {
    if (factors.empty()) throw DomainError("composite_family: empty factorization");
    std::set<int> primes;
    long long order = 1;
    for (const auto& s : factors) {
        detail::check_spec(s, order_cap);
        if (!primes.insert(s.p).second) throw DomainError("composite_family: repeated prime " + std::to_string(s.p));
        order *= s.order();
    }
    if (order > order_cap)
        throw DomainError("order " + std::to_string(order) + " exceeds the order cap " + std::to_string(order_cap));
    MoslsFamily F = prime_family(factors.front(), order_cap);
    for (std::size_t i = 1; i < factors.size(); ++i) F = product(F, prime_family(factors[i], order_cap));
    return F;
}

/// Number of squares this construction realises for one prime: max{p^m(p-1), p^n(p-1)} when
/// m, n > 0 and p^{m+n} - 1 otherwise.
inline long long mosls_count(int p, int m, int n) {
    if (!detail::is_prime(p)) throw DomainError("mosls_count: p is not prime");
    if (m < 0 || n < 0 || m + n < 1) throw DomainError("mosls_count: need m + n >= 1");
    if (m > 0 && n > 0) return detail::checked_pow(p, std::max(m, n)) * (p - 1);
    return detail::checked_pow(p, m + n) - 1;
}

inline long long composite_count(const std::vector<FieldConstructionSpec>& factors) {
    if (factors.empty()) throw DomainError("composite_count: empty factorization");
    std::set<int> primes;
    long long f = -1;
    for (const auto& s : factors) {
        if (!primes.insert(s.p).second) throw DomainError("composite_count: repeated prime " + std::to_string(s.p));
        const long long c = mosls_count(s.p, s.m, s.n);
        f = f < 0 ? c : std::min(f, c);
    }
    return f;
}

}  // namespace mosls
