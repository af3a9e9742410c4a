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

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include <eulerlab/cache.hpp>
#include <eulerlab/classnumber.hpp>
#include <eulerlab/json.hpp>

#include "oracles.hpp"

using namespace eulerlab;

namespace
{

// (-1)^{phi/2} 2^{1-phi} prod_{chi odd} sum_{a<=f} (-1)^a chi(a), in floating point from raw discrete logs.
double formula_by_floating_point(std::int64_t p, int n)
{
    std::complex<double> product = 1.0;
    for (const auto &chi : character_table(p, n + 1)) {
        if (chi.index() % 2 == 0) {
            continue;
        }
        const auto f = oracle::conductor_by_definition(chi);
        std::complex<double> e0 = 0.0;
        for (std::int64_t a = 1; a <= f; ++a) {
            e0 += (a % 2 == 1 ? -1.0 : 1.0) * oracle::chi_direct(chi, a);
        }
        product *= e0;
    }
    const auto phi = static_cast<double>(character_table(p, n + 1).size());
    const double sign = static_cast<long>(phi / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::pow(2.0, 1.0 - phi) * product.real();
}

int parity_of_primes_above_two(std::int64_t p, int n)
{
    // count orbits of <2> on (Z/p^{n+1})^* and on (Z/p^{n+1})^* / {+-1} directly
    const auto modulus = ipow(p, n + 1);
    std::vector<bool> seen(static_cast<std::size_t>(modulus), false);
    std::vector<bool> seen_plus(static_cast<std::size_t>(modulus), false);
    int orbits = 0;
    int orbits_plus = 0;
    for (std::int64_t a = 1; a < modulus; ++a) {
        if (a % p == 0) {
            continue;
        }
        if (!seen[static_cast<std::size_t>(a)]) {
            ++orbits;
            for (std::int64_t b = a; !seen[static_cast<std::size_t>(b)]; b = 2 * b % modulus) {
                seen[static_cast<std::size_t>(b)] = true;
            }
        }
        if (!seen_plus[static_cast<std::size_t>(a)]) {
            ++orbits_plus;
            for (std::int64_t b = a; !seen_plus[static_cast<std::size_t>(b)]; b = 2 * b % modulus) {
                seen_plus[static_cast<std::size_t>(b)] = true;
                seen_plus[static_cast<std::size_t>(modulus - b)] = true;
            }
        }
    }
    return (orbits - orbits_plus) % 2;
}

} // namespace

TEST(OddProduct, Examples)
{
    EXPECT_EQ(odd_product_by_conductor(3, 0, 1), Rational(-2));
    EXPECT_EQ(odd_product_by_conductor(5, 0, 1), Rational(8));
    EXPECT_EQ(odd_product_by_conductor(3, 1, 2), Rational(16));
}

TEST(OddProduct, Errors)
{
    EXPECT_THROW(odd_product_by_conductor(3, 1, 0), input_error);
    EXPECT_THROW(odd_product_by_conductor(3, 1, 3), input_error);
    EXPECT_THROW(odd_product_by_conductor(2, 1, 1), input_error);
}

TEST(HMinus, Examples)
{
    EXPECT_EQ(h_minus(3, 0).value, Rational(1));
    EXPECT_EQ(h_minus(5, 0).value, Rational(1));
    EXPECT_EQ(h_minus(3, 1).value, Rational(1));
}

TEST(HMinus, LargerValues)
{
    EXPECT_EQ(h_minus(3, 2).value, Rational(19));
    EXPECT_EQ(h_minus(3, 3).value, Rational(mpz_class("4296624337")));
    EXPECT_EQ(h_minus(5, 1).value, Rational(41));
    EXPECT_EQ(h_minus(7, 0).value, Rational(1));
    EXPECT_EQ(h_minus(7, 1).value, Rational(1840357));
    EXPECT_EQ(h_minus(11, 0).value, Rational(3));
    EXPECT_EQ(h_minus(13, 0).value, Rational(5));
}

TEST(HMinus, FormulaMatchesFloatingPointOracle)
{
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{3, 0}, {3, 1}, {3, 2}, {3, 3}, {5, 0}, {5, 1},
                                                                  {7, 0}, {7, 1}, {11, 0}, {13, 0}}) {
        const auto r = h_minus(p, n);
        const double expected = formula_by_floating_point(p, n);
        EXPECT_NEAR(r.formula_value.to_double(), expected, 1e-6 * std::max(1.0, std::abs(expected)))
            << "p=" << p << " n=" << n;
    }
}

TEST(HMinus, SignCorrectionCountsPrimesAboveTwo)
{
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{3, 0}, {3, 2}, {5, 1}, {7, 0}, {7, 1}, {11, 0},
                                                                  {13, 0}, {17, 0}, {31, 0}}) {
        const auto [t_full, t_plus] = primes_above_two(p, n);
        EXPECT_EQ((t_full - t_plus) % 2, parity_of_primes_above_two(p, n)) << "p=" << p << " n=" << n;
    }
    EXPECT_EQ(h_minus(7, 0).sign_correction, -1);
    EXPECT_EQ(h_minus(7, 0).formula_value, Rational(-1));
    EXPECT_EQ(h_minus(3, 2).sign_correction, 1);
}

TEST(HMinus, IntegralPositiveWithIncrementsSummingToOrdp)
{
    for (auto [p, n_max] : std::vector<std::pair<std::int64_t, int>>{{3, 4}, {5, 2}, {7, 1}}) {
        for (int n = 0; n <= n_max; ++n) {
            const auto r = h_minus(p, n);
            ASSERT_TRUE(r.value.is_integer());
            ASSERT_GT(r.value.sign(), 0);
            ASSERT_EQ(r.ordp, ordp_rational(r.value, p));
            ASSERT_EQ(static_cast<int>(r.conductor_increments.size()), n + 1);
            int total = 0;
            for (const auto &[t, delta] : r.conductor_increments) {
                total += delta;
            }
            ASSERT_EQ(total, r.ordp);
            ASSERT_EQ(r.character_count, ipow(p, n) * (p - 1) / 2);
            // the 2-power prefactor is a p-adic unit, so the ord_p of the raw product agrees
            Rational product = 1;
            for (int t = 1; t <= n + 1; ++t) {
                product = product * odd_product_by_conductor(p, n, t);
            }
            ASSERT_EQ(ordp_rational(product, p), r.ordp);
        }
    }
}

TEST(HMinus, Telescoping)
{
    for (auto [p, n_max] : std::vector<std::pair<std::int64_t, int>>{{3, 4}, {5, 2}, {7, 1}}) {
        const auto seq = ordp_h_minus_sequence(p, n_max);
        for (int n = 1; n <= n_max; ++n) {
            const auto slice = odd_product_by_conductor(p, n, n + 1);
            ASSERT_EQ(seq[static_cast<std::size_t>(n)] - seq[static_cast<std::size_t>(n - 1)],
                      ordp_rational(slice, p))
                << "p=" << p << " n=" << n;
        }
    }
}

TEST(HMinus, SequenceExamples)
{
    EXPECT_EQ(ordp_h_minus_sequence(3, 1), (std::vector<int>{0, 0}));
    EXPECT_EQ(ordp_h_minus_sequence(5, 0), (std::vector<int>{0}));
}

TEST(HMinus, ThreadCountDoesNotChangeTheResult)
{
    ClassNumberOptions serial;
    serial.threads = 1;
    ClassNumberOptions parallel;
    parallel.threads = 4;
    EXPECT_EQ(h_minus(3, 3, serial), h_minus(3, 3, parallel));
    EXPECT_EQ(h_minus(7, 1, serial), h_minus(7, 1, parallel));
}

TEST(HMinus, Errors)
{
    EXPECT_THROW(h_minus(2, 1), input_error);
    EXPECT_THROW(h_minus(9, 0), input_error);
    EXPECT_THROW(h_minus(3, -1), input_error);
    EXPECT_THROW(h_minus(3, 6), resource_error);
    ClassNumberOptions tight;
    tight.max_group_order = 10;
    EXPECT_THROW(h_minus(5, 1, tight), resource_error);
}

TEST(HMinus, JsonRoundTrip)
{
    const auto r = h_minus(3, 2);
    const auto j = json::encode(r);
    EXPECT_EQ(j.at("h_minus"), "19/1");
    EXPECT_EQ(j.at("characters"), 9);
    EXPECT_EQ(json::decode_h_minus(j), r);
}

TEST(HMinusCache, ReplayEqualsFreshComputation)
{
    const auto dir = std::filesystem::temp_directory_path() / ("eulerlab-cache-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const HMinusCache cache(dir);
    EXPECT_FALSE(cache.load(5, 1).has_value());
    const auto first = cache.get_or_compute(5, 1);
    ASSERT_TRUE(std::filesystem::exists(cache.path_for(5, 1)));
    const auto replay = cache.load(5, 1);
    ASSERT_TRUE(replay.has_value());
    EXPECT_EQ(*replay, h_minus(5, 1));
    EXPECT_EQ(*replay, first);

    std::ofstream(cache.path_for(3, 1)) << "{ not json";
    EXPECT_FALSE(cache.load(3, 1).has_value());
    EXPECT_EQ(cache.get_or_compute(3, 1), h_minus(3, 1));
    EXPECT_TRUE(cache.load(3, 1).has_value());
    std::filesystem::remove_all(dir);
}
