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

#include <random>
#include <set>

#include <mosls/gf.hpp>

using namespace mosls;

namespace {

FieldElement power(const FieldCtx& F, FieldElement a, long long e) {
    FieldElement r = F.one();
    for (; e > 0; e >>= 1, a = F.mul(a, a))
        if (e & 1) r = F.mul(r, a);
    return r;
}

// Root test over Z_p, used as an independent oracle for cubics.
bool has_root(int p, const std::vector<int>& poly) {
    for (int x = 0; x < p; ++x) {
        long long v = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = (v * x + *it) % p;
        if (v == 0) return true;
    }
    return false;
}

const std::vector<std::pair<int, int>> kSmallFields = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 1},
                                                       {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 1}, {7, 2},
                                                       {11, 1}, {13, 1}};

}  // namespace

TEST(Field, LexSmallestModulus) {
    EXPECT_EQ(make_field(2, 2).modulus(), (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(make_field(3, 2).modulus(), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(make_field(2, 1).modulus(), (std::vector<int>{0, 1}));
    EXPECT_EQ(make_field(2, 3).modulus(), (std::vector<int>{1, 1, 0, 1}));
}

TEST(Field, ModulusIsMinimalAmongIrreducibles) {
    for (auto [p, d] : kSmallFields) {
        const FieldCtx F(p, d);
        long long chosen = 0;
        for (int i = d - 1; i >= 0; --i) chosen = chosen * p + F.modulus()[static_cast<std::size_t>(i)];
        for (long long v = 0; v < chosen; ++v) {
            std::vector<int> c(static_cast<std::size_t>(d + 1), 0);
            c[static_cast<std::size_t>(d)] = 1;
            long long x = v;
            for (int i = 0; i < d; ++i, x /= p) c[static_cast<std::size_t>(i)] = static_cast<int>(x % p);
            EXPECT_FALSE(is_irreducible(p, c)) << "p=" << p << " d=" << d << " v=" << v;
        }
    }
}

TEST(Field, Irreducibility) {
    EXPECT_FALSE(is_irreducible(2, {1, 0, 1}));
    EXPECT_TRUE(is_irreducible(2, {1, 1, 1}));
    const std::vector<int> cubic{1, 2, 0, 1};
    EXPECT_EQ(is_irreducible(3, cubic), !has_root(3, cubic));
    EXPECT_TRUE(is_irreducible(3, cubic));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) {
                const std::vector<int> poly{c, b, a, 1};
                EXPECT_EQ(is_irreducible(5, poly), !has_root(5, poly));
            }
}

TEST(Field, Arithmetic) {
    const auto gf4 = make_field(2, 2);
    const auto t = gf4.element_at(2);
    EXPECT_EQ(gf4.add(t, gf4.element_at(3)), gf4.one());
    EXPECT_EQ(gf4.mul(t, t), gf4.element_at(3));
    const auto gf9 = make_field(3, 2);
    EXPECT_EQ(gf9.mul(gf9.element_at(3), gf9.element_at(3)), gf9.element_at(2));
    EXPECT_EQ(gf4.to_string(gf4.element_at(3)), "t+1");
}

TEST(Field, Enumeration) {
    const auto gf2 = enumerate_elements(make_field(2, 1));
    ASSERT_EQ(gf2.size(), 2u);
    EXPECT_EQ(gf2[0].coeffs, std::vector<int>{0});
    EXPECT_EQ(gf2[1].coeffs, std::vector<int>{1});
    const auto gf4 = enumerate_elements(make_field(2, 2));
    ASSERT_EQ(gf4.size(), 4u);
    EXPECT_EQ(gf4[2].coeffs, (std::vector<int>{0, 1}));
    EXPECT_EQ(gf4[3].coeffs, (std::vector<int>{1, 1}));
    const auto F9 = make_field(3, 2);
    const auto gf9 = enumerate_elements(F9);
    ASSERT_EQ(gf9.size(), 9u);
    for (int k = 0; k < 3; ++k) EXPECT_EQ(gf9[static_cast<std::size_t>(k)], F9.element_at(k));
    for (std::size_t k = 0; k < gf9.size(); ++k) EXPECT_EQ(F9.index_of(gf9[k]), static_cast<long long>(k));
}

TEST(Field, Errors) {
    EXPECT_THROW(make_field(4, 1), DomainError);
    EXPECT_THROW(make_field(2, 0), DomainError);
    EXPECT_THROW(make_field(2, 40), DomainError);
    const auto F = make_field(3, 2);
    EXPECT_THROW(F.add(FieldElement{{1, 2, 0}}, F.one()), DomainError);
    EXPECT_THROW(F.mul(FieldElement{{3, 0}}, F.one()), DomainError);
}

TEST(Field, DeterministicConstruction) {
    for (auto [p, d] : kSmallFields) {
        const FieldCtx a(p, d), b(p, d);
        EXPECT_EQ(a.modulus(), b.modulus());
        EXPECT_EQ(a.elements(), b.elements());
    }
}

TEST(FieldProperty, AxiomsRandomized) {
    std::mt19937 rng(20261016);
    for (auto [p, d] : kSmallFields) {
        const FieldCtx F(p, d);
        std::uniform_int_distribution<long long> pick(0, F.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = F.element_at(pick(rng)), b = F.element_at(pick(rng)), c = F.element_at(pick(rng));
            EXPECT_EQ(F.add(a, b), F.add(b, a));
            EXPECT_EQ(F.mul(a, b), F.mul(b, a));
            EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
            EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
            EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            EXPECT_EQ(F.add(a, F.zero()), a);
            EXPECT_EQ(F.mul(a, F.one()), a);
            EXPECT_EQ(F.add(a, F.neg(a)), F.zero());
            EXPECT_EQ(F.sub(F.add(a, b), b), a);
            if (a != F.zero()) {
                EXPECT_EQ(F.mul(a, power(F, a, F.size() - 2)), F.one());
            }
        }
    }
}

TEST(FieldProperty, MultiplicativeGroupIsCyclic) {
    for (auto [p, d] : kSmallFields) {
        const FieldCtx F(p, d);
        if (F.size() > 81) continue;
        const long long g = F.size() - 1;
        bool has_generator = false;
        std::set<long long> seen;
        for (long long v = 1; v < F.size(); ++v) {
            const auto a = F.element_at(v);
            EXPECT_EQ(power(F, a, g), F.one());
            long long order = 1;
            for (auto x = a; x != F.one(); x = F.mul(x, a)) ++order;
            EXPECT_EQ(g % order, 0);
            has_generator = has_generator || order == g;
            seen.insert(F.index_of(F.mul(a, F.element_at(1 + (v % g)))));
        }
        EXPECT_TRUE(has_generator) << "GF(" << p << "^" << d << ")";
        EXPECT_EQ(seen.count(0), 0u);
    }
}

TEST(FieldProperty, FrobeniusIsAdditive) {
    for (auto [p, d] : kSmallFields) {
        const FieldCtx F(p, d);
        if (F.size() > 81) continue;
        for (long long u = 0; u < F.size(); ++u)
            for (long long v = 0; v < F.size(); v += 3) {
                const auto a = F.element_at(u), b = F.element_at(v);
                EXPECT_EQ(power(F, F.add(a, b), p), F.add(power(F, a, p), power(F, b, p)));
            }
    }
}
