/*
   Copyright 2026 The eulerlab Authors

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

#include <eulerlab/euler.hpp>
#include <eulerlab/json.hpp>

#include "oracles.hpp"

using namespace eulerlab;

namespace
{

RationalPolynomial poly(std::initializer_list<Rational> c)
{
    return RationalPolynomial(std::vector<Rational>(c));
}

Rational pow2(long k)
{
    return Rational(2).pow(k);
}

} // namespace

TEST(EulerPolynomial, Examples)
{
    EXPECT_EQ(euler_polynomial(0), poly({1}));
    EXPECT_EQ(euler_polynomial(1), poly({Rational(-1, 2), 1}));
    EXPECT_EQ(euler_polynomial(3), poly({Rational(1, 4), 0, Rational(-3, 2), 1}));
    EXPECT_EQ(euler_polynomial(3).degree(), 3);
}

TEST(EulerPolynomial, MatchesGeneratingFunctionDivision)
{
    const auto reference = oracle::euler_by_series(26);
    for (std::size_t n = 0; n < reference.size(); ++n) {
        ASSERT_EQ(euler_polynomial(n), reference[n]) << "n = " << n;
    }
}

TEST(BernoulliPolynomial, Examples)
{
    EXPECT_EQ(bernoulli_polynomial(0), poly({1}));
    EXPECT_EQ(bernoulli_polynomial(1), poly({Rational(-1, 2), 1}));
    EXPECT_EQ(bernoulli_polynomial(2), poly({Rational(1, 6), -1, 1}));
}

TEST(BernoulliPolynomial, MatchesGeneratingFunctionDivision)
{
    const auto reference = oracle::bernoulli_by_series(26);
    for (std::size_t n = 0; n < reference.size(); ++n) {
        ASSERT_EQ(bernoulli_polynomial(n), reference[n]) << "n = " << n;
        ASSERT_EQ(bernoulli_polynomial(n).degree(), static_cast<std::int64_t>(n));
    }
}

TEST(EulerPolynomial, Reflection)
{
    for (std::size_t n = 0; n <= 20; ++n) {
        const auto e = euler_polynomial(n);
        const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
        ASSERT_EQ(e.compose_affine(-1, 1), e * sign) << "n = " << n;
    }
}

TEST(EulerPolynomial, BernoulliBridge)
{
    for (std::size_t n = 0; n <= 15; ++n) {
        const auto b = bernoulli_polynomial(n + 1);
        const auto half = Rational(1, 2);
        const auto bridge = (b.compose_affine(half, half) - b.compose_affine(half, 0)) *
                            (pow2(static_cast<long>(n) + 1) / Rational(static_cast<long>(n) + 1));
        ASSERT_EQ(euler_polynomial(n), bridge) << "n = " << n;
    }
}

TEST(EulerPolynomial, JsonCoefficientsAscend)
{
    const auto j = json::encode(euler_polynomial(3));
    ASSERT_EQ(j.size(), 4u);
    EXPECT_EQ(j[0], "1/4");
    EXPECT_EQ(j[1], "0/1");
    EXPECT_EQ(j[2], "-3/2");
    EXPECT_EQ(j[3], "1/1");
}

TEST(GeneralizedEuler, Examples)
{
    EXPECT_EQ(as_rational(generalized_euler_number(0, DirichletCharacter(3, 1, 1))), Rational(-2));
    EXPECT_TRUE(generalized_euler_number(0, DirichletCharacter(3, 2, 2)).is_zero());
    EXPECT_EQ(as_rational(generalized_euler_number(0, DirichletCharacter(3, 2, 0))), Rational(-1));
}

TEST(GeneralizedEuler, QuadraticCharacterMod3)
{
    // f = 3: 3^n (-E_n(1/3) + E_n(2/3)), hand-evaluated for n = 0..4
    const DirichletCharacter chi(3, 1, 1);
    const std::vector<Rational> expected{-2, 0, 4, 0, -44};
    for (std::size_t n = 0; n < expected.size(); ++n) {
        EXPECT_EQ(as_rational(generalized_euler_number(n, chi)), expected[n]) << "n = " << n;
    }
}

TEST(GeneralizedEuler, FiniteSumAgainstSeriesOracle)
{
    // independent evaluation: series-division polynomials, level-e character values restricted to a = 1..f
    const auto reference = oracle::euler_by_series(6);
    for (std::int64_t p : {3, 5}) {
        for (const auto &chi : character_table(p, 2)) {
            const auto f = conductor(chi);
            const auto m = chi.value_order();
            for (std::size_t n = 0; n < reference.size(); ++n) {
                auto expected = CycElement(m);
                for (std::int64_t a = 1; a <= f; ++a) {
                    if (a % p == 0 && f > 1) {
                        continue;
                    }
                    const Rational value = reference[n](Rational(a, f)) * Rational(f).pow(static_cast<long>(n)) *
                                           Rational(a % 2 == 1 ? -1 : 1);
                    // for a unit a, the level-e value equals the value of the primitive character
                    const auto chi_a = f == 1 ? CycElement::from_rational(m, 1) : chi_eval(chi, a);
                    expected = expected + ring_scale(chi_a, value);
                }
                ASSERT_EQ(generalized_euler_number(n, chi), expected)
                    << "p=" << p << " j=" << chi.index() << " n=" << n;
            }
        }
    }
}

TEST(GeneralizedEuler, ZeroExactlyForEvenNontrivial)
{
    for (std::int64_t p : {3, 5, 7}) {
        for (int e = 1; e <= 3; ++e) {
            for (const auto &chi : character_table(p, e)) {
                if (chi.is_trivial()) {
                    continue;
                }
                const bool zero = generalized_euler_number(0, chi).is_zero();
                ASSERT_EQ(zero, parity(chi) == Parity::even) << "p=" << p << " e=" << e << " j=" << chi.index();
            }
        }
    }
}

TEST(GeneralizedEuler, TrivialCharacterValue)
{
    // f = 1 gives the single term (-1)^1 E_0(1); the trivial character is even yet E_0 is nonzero
    for (std::int64_t p : {3, 5, 7}) {
        const DirichletCharacter trivial(p, 2, 0);
        EXPECT_EQ(as_rational(generalized_euler_number(0, trivial)), Rational(-1));
        EXPECT_EQ(parity(trivial), Parity::even);
    }
}

TEST(GeneralizedEuler, ConjugateCharacterGivesConjugateValue)
{
    for (std::int64_t p : {3, 5, 7}) {
        for (int e = 1; e <= 2; ++e) {
            const auto table = character_table(p, e);
            const auto m = static_cast<std::int64_t>(table.size());
            for (std::int64_t j = 1; j < m; ++j) {
                for (std::size_t n : {0u, 1u, 3u}) {
                    ASSERT_EQ(generalized_euler_number(n, table[static_cast<std::size_t>(m - j)]),
                              galois_apply(generalized_euler_number(n, table[static_cast<std::size_t>(j)]), m - 1));
                }
            }
        }
    }
}
