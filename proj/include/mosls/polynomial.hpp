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

// Polynomials with arbitrary-precision integer coefficients, plus the division-free
// (Berkowitz) characteristic polynomial of an integer matrix.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "matrix.hpp"

namespace mosls {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients in ascending powers; never carries a zero leading coefficient, so the zero
/// polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPolynomial(std::initializer_list<long long> coeffs) {
        for (auto v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial monomial(std::size_t degree) {
        std::vector<BigInt> c(degree + 1);
        c[degree] = 1;
        return IntPolynomial(std::move(c));
    }

    /// t - root
    static IntPolynomial linear(long long root) { return IntPolynomial{-root, 1}; }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPolynomial(std::move(c));
    }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial result{1}, base = *this;
        for (; e; e >>= 1) {
            if (e & 1u) result *= base;
            if (e > 1) base *= base;
        }
        return result;
    }

    /// Quotient and remainder by a monic divisor; exact over the integers.
    std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& divisor) const {
        if (!divisor.is_monic()) throw DomainError("polynomial division needs a monic divisor");
        if (degree() < divisor.degree()) return {IntPolynomial{}, *this};
        std::vector<BigInt> rem = c_;
        const std::size_t dd = divisor.c_.size() - 1;
        std::vector<BigInt> quot(rem.size() - dd);
        for (std::size_t k = quot.size(); k-- > 0;) {
            const BigInt lead = rem[k + dd];
            quot[k] = lead;
            if (lead == 0) continue;
            for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= lead * divisor.c_[i];
        }
        rem.resize(dd);
        return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
    }

    bool divisible_by(const IntPolynomial& divisor) const { return divmod(divisor).second.is_zero(); }

    /// Quotient of an exact division; VerificationError when the remainder is nonzero.
    IntPolynomial exact_div(const IntPolynomial& divisor) const {
        auto [q, r] = divmod(divisor);
        if (!r.is_zero()) throw VerificationError("exact polynomial division left a nonzero remainder");
        return q;
    }

    /// Horner evaluation in long double.
    long double evaluate(long double x) const {
        long double v = 0;
        for (std::size_t k = c_.size(); k-- > 0;) v = v * x + c_[k].convert_to<long double>();
        return v;
    }

    /// sum |c_k| |x|^k, the natural scale for judging |p(x)|.
    long double evaluation_scale(long double x) const {
        long double v = 0;
        const long double ax = std::fabs(x);
        for (std::size_t k = c_.size(); k-- > 0;) v = v * ax + boost::multiprecision::abs(c_[k]).convert_to<long double>();
        return v;
    }

    std::vector<std::string> coefficient_strings() const {
        std::vector<std::string> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(c.str());
        return out;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const BigInt& c = c_[k];
            if (c == 0) continue;
            const bool neg = c < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            if (k == 0 || mag != 1) s += mag.str();
            if (k > 0) s += k == 1 ? "t" : "t^" + std::to_string(k);
        }
        return s;
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// det(tI - M) by Berkowitz's division-free algorithm: O(N^4) additions with small matrix
/// entries plus O(N^3) big-integer products.
inline IntPolynomial charpoly_exact(const IntMatrix& M) {
    if (!M.square()) throw DomainError("charpoly_exact: matrix is not square");
    const std::size_t N = M.rows();
    if (N == 0) return IntPolynomial{1};

    // Nonzero entries of each row, sorted by column, so products with the leading k x k block only
    // visit columns < k.
    std::vector<std::vector<std::pair<std::size_t, long long>>> sparse(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (M(i, j) != 0) sparse[i].emplace_back(j, M(i, j));

    // p holds det(tI - M_k) in descending powers.
    std::vector<BigInt> p{BigInt(1), BigInt(-M(0, 0))};
    std::vector<BigInt> col, next, toeplitz;
    for (std::size_t k = 1; k < N; ++k) {
        // M_{k+1} = [[M_k, C], [R, a]] with C = M[0..k-1][k], R = M[k][0..k-1].
        toeplitz.assign(k + 2, BigInt(0));
        toeplitz[0] = 1;
        toeplitz[1] = -M(k, k);
        col.assign(k, BigInt(0));
        for (std::size_t i = 0; i < k; ++i) col[i] = M(i, k);
        for (std::size_t e = 0; e + 2 <= k + 1; ++e) {
            // toeplitz[e + 2] = -R * M_k^e * C
            BigInt dot = 0;
            for (const auto& [j, v] : sparse[k]) {
                if (j >= k) break;
                if (v == 1) dot += col[j];
                else dot += col[j] * v;
            }
            toeplitz[e + 2] = -dot;
            if (e + 3 > k + 1) break;
            next.assign(k, BigInt(0));
            for (std::size_t i = 0; i < k; ++i) {
                BigInt& acc = next[i];
                for (const auto& [j, v] : sparse[i]) {
                    if (j >= k) break;
                    if (v == 1) acc += col[j];
                    else acc += col[j] * v;
                }
            }
            col.swap(next);
        }
        // p_{k+1} = T * p_k, T lower-triangular Toeplitz of size (k+2) x (k+1)
        next.assign(k + 2, BigInt(0));
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, k); ++j)
                if (toeplitz[i - j] != 0 && p[j] != 0) next[i] += toeplitz[i - j] * p[j];
        p.swap(next);
    }
    std::reverse(p.begin(), p.end());
    return IntPolynomial(std::move(p));
}

/// Same characteristic polynomial.
inline bool cospectral(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) throw DomainError("cospectral: polynomials have different degrees");
    return a == b;
}

}  // namespace mosls
