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

// Finite fields GF(p^d) realised as Z_p[t]/(f(t)) for a canonically chosen
// irreducible f. Elements are coefficient vectors in ascending powers of t.

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace mosls {

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long k = 2; k * k <= p; ++k)
        if (p % k == 0) return false;
    return true;
}

/// p^e with an overflow guard at 2^31.
inline long long checked_pow(long long p, int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) {
        v *= p;
        if (v > (1LL << 31)) throw DomainError("p^d exceeds the supported field size");
    }
    return v;
}

/// Remainder of a modulo a monic b, both over Z_p in ascending powers.
inline std::vector<int> poly_mod_p(std::vector<int> a, const std::vector<int>& b, int p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const int lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i)
                a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
        }
        a.pop_back();
    }
    return a;
}

}  // namespace detail

/// True iff the monic polynomial `poly` (ascending coefficients) has no monic factor of degree
/// 1..deg/2 over Z_p. Exhaustive trial division.
inline bool is_irreducible(int p, const std::vector<int>& poly) {
    if (!detail::is_prime(p)) throw DomainError("is_irreducible: p must be prime");
    if (poly.size() < 2) throw DomainError("is_irreducible: degree must be at least 1");
    if (poly.back() != 1) throw DomainError("is_irreducible: polynomial must be monic");
    for (int c : poly)
        if (c < 0 || c >= p) throw DomainError("is_irreducible: coefficient out of range");

    const int deg = static_cast<int>(poly.size()) - 1;
    for (int k = 1; k <= deg / 2; ++k) {
        const long long count = detail::checked_pow(p, k);
        std::vector<int> divisor(k + 1, 0);
        divisor[k] = 1;
        for (long long v = 0; v < count; ++v) {
            long long x = v;
            for (int i = 0; i < k; ++i, x /= p) divisor[i] = static_cast<int>(x % p);
            const auto rem = detail::poly_mod_p(poly, divisor, p);
            bool zero = true;
            for (int c : rem) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

/// An element of a FieldCtx: `coeffs[i]` is the coefficient of t^i, all in [0, p).
struct FieldElement {
    std::vector<int> coeffs;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FieldCtx {
public:
    /// Builds GF(p^d) with the lexicographically smallest monic irreducible modulus, ordering
    /// candidates by the base-p value of (c_{d-1}, ..., c_0).
    FieldCtx(int p, int d) : p_(p), d_(d) {
        if (!detail::is_prime(p)) throw DomainError("make_field: p = " + std::to_string(p) + " is not prime");
        if (d < 1) throw DomainError("make_field: degree must be at least 1");
        size_ = detail::checked_pow(p, d);
        modulus_.assign(d + 1, 0);
        modulus_[d] = 1;
        for (long long v = 0; v < size_; ++v) {
            long long x = v;
            for (int i = 0; i < d; ++i, x /= p) modulus_[i] = static_cast<int>(x % p);
            if (is_irreducible(p, modulus_)) return;
        }
        throw VerificationError("make_field: no irreducible polynomial found");  // unreachable
    }

    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return d_; }
    long long size() const noexcept { return size_; }
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    FieldElement zero() const { return FieldElement{std::vector<int>(d_, 0)}; }
    FieldElement one() const {
        auto e = zero();
        e.coeffs[0] = 1;
        return e;
    }

    /// Element with canonical index v, i.e. coefficient digits of v in base p.
    FieldElement element_at(long long v) const {
        if (v < 0 || v >= size_) throw DomainError("element index out of range");
        FieldElement e = zero();
        for (int i = 0; i < d_; ++i, v /= p_) e.coeffs[i] = static_cast<int>(v % p_);
        return e;
    }

    /// Canonical index: base-p value of (c_{d-1}, ..., c_0).
    long long index_of(const FieldElement& a) const {
        check(a);
        long long v = 0;
        for (int i = d_ - 1; i >= 0; --i) v = v * p_ + a.coeffs[i];
        return v;
    }

    /// Polynomial degree of the representative; -1 for zero.
    int degree_of(const FieldElement& a) const {
        check(a);
        for (int i = d_ - 1; i >= 0; --i)
            if (a.coeffs[i] != 0) return i;
        return -1;
    }

    bool contains(const FieldElement& a) const noexcept {
        if (static_cast<int>(a.coeffs.size()) != d_) return false;
        for (int c : a.coeffs)
            if (c < 0 || c >= p_) return false;
        return true;
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        FieldElement c = zero();
        for (int i = 0; i < d_; ++i) c.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
        return c;
    }

    FieldElement neg(const FieldElement& a) const {
        check(a);
        FieldElement c = zero();
        for (int i = 0; i < d_; ++i) c.coeffs[i] = (p_ - a.coeffs[i]) % p_;
        return c;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        std::vector<int> prod(2 * d_ - 1, 0);
        for (int i = 0; i < d_; ++i) {
            if (a.coeffs[i] == 0) continue;
            for (int j = 0; j < d_; ++j)
                prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p_;
        }
        auto rem = detail::poly_mod_p(std::move(prod), modulus_, p_);
        rem.resize(d_, 0);
        return FieldElement{std::move(rem)};
    }

    /// All p^d elements in canonical order.
    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (long long v = 0; v < size_; ++v) out.push_back(element_at(v));
        return out;
    }

    std::string to_string(const FieldElement& a) const {
        check(a);
        std::string s;
        for (int i = d_ - 1; i >= 0; --i) {
            const int c = a.coeffs[i];
            if (c == 0) continue;
            if (!s.empty()) s += '+';
            if (i == 0) {
                s += std::to_string(c);
            } else {
                if (c != 1) s += std::to_string(c);
                s += 't';
                if (i > 1) s += '^' + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.p_ == b.p_ && a.d_ == b.d_ && a.modulus_ == b.modulus_;
    }

private:
    void check(const FieldElement& a) const {
        if (!contains(a)) throw DomainError("field element does not belong to GF(" + std::to_string(p_) + "^" +
                                            std::to_string(d_) + ")");
    }

    int p_;
    int d_;
    long long size_ = 0;
    std::vector<int> modulus_;
};

inline FieldCtx make_field(int p, int d) { return FieldCtx(p, d); }

inline std::vector<FieldElement> enumerate_elements(const FieldCtx& ctx) { return ctx.elements(); }

}  // namespace mosls
