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

#include <random>

#include <gtest/gtest.h>

#include <eulerlab/classnumber.hpp>
#include <eulerlab/iwasawa.hpp>
#include <eulerlab/json.hpp>

#include "oracles.hpp"

using namespace eulerlab;

namespace
{

std::vector<Rational> synthesize(std::int64_t p, long m, long lambda, long c, int first_n, int count)
{
    std::vector<Rational> out;
    for (int n = first_n; n < first_n + count; ++n) {
        out.emplace_back(m * ipow(p, n) + lambda * n + c);
    }
    return out;
}

} // namespace

TEST(Fit, Examples)
{
    const auto a = fit_affine_model(std::vector<int>{4, 5, 6}, 3, 2);
    EXPECT_EQ(a.m, Rational(0));
    EXPECT_EQ(a.lambda, Rational(1));
    EXPECT_EQ(a.c, Rational(2));
    EXPECT_EQ(a.n0, 2);
    // three points leave nothing to hold out
    EXPECT_FALSE(a.stable);
    EXPECT_EQ(a.verdict, kVerdictInsufficient);

    const auto b = fit_affine_model(std::vector<int>{0, 0, 0, 0}, 3);
    EXPECT_EQ(b.m, Rational(0));
    EXPECT_EQ(b.lambda, Rational(0));
    EXPECT_EQ(b.c, Rational(0));
    EXPECT_TRUE(b.stable);
    EXPECT_EQ(b.verdict, kVerdictStable);
    EXPECT_EQ(b.residuals, std::vector<Rational>{Rational(0)});

    const auto c = fit_affine_model(std::vector<int>{0, 0, 1}, 3);
    EXPECT_EQ(c.m, Rational(1, 4));
    EXPECT_EQ(c.lambda, Rational(-1, 2));
    EXPECT_EQ(c.c, Rational(-1, 4));
    EXPECT_FALSE(c.integral());
    EXPECT_FALSE(c.stable);
    EXPECT_EQ(c.verdict, kVerdictInsufficient);
}

TEST(Fit, SolvedTripleInterpolatesItsWindow)
{
    const auto c = fit_affine_model(std::vector<int>{0, 0, 1}, 3);
    EXPECT_EQ(c.predict(3, 0), Rational(0));
    EXPECT_EQ(c.predict(3, 1), Rational(0));
    EXPECT_EQ(c.predict(3, 2), Rational(1));
}

TEST(Fit, SlidesToFirstStableWindow)
{
    // a burst at n = 0 and then exact growth n + 1 from n = 1 on
    const auto fit = fit_affine_model(std::vector<int>{7, 2, 3, 4, 5, 6}, 3);
    EXPECT_TRUE(fit.stable);
    EXPECT_EQ(fit.n0, 1);
    EXPECT_EQ(fit.m, Rational(0));
    EXPECT_EQ(fit.lambda, Rational(1));
    EXPECT_EQ(fit.c, Rational(1));
    EXPECT_EQ(fit.residuals.size(), 2u);
}

TEST(Fit, ReportsNotReachedWithoutStableWindow)
{
    const auto fit = fit_affine_model(std::vector<int>{0, 5, 1, 9, 2}, 3);
    EXPECT_FALSE(fit.stable);
    EXPECT_EQ(fit.verdict, kVerdictNotReached);
    EXPECT_EQ(fit.n0, 0);
}

TEST(Fit, Errors)
{
    EXPECT_THROW(fit_affine_model(std::vector<int>{1, 2}, 3), input_error);
    EXPECT_THROW(fit_affine_model(std::vector<int>{}, 3), input_error);
    EXPECT_THROW(fit_affine_model(std::vector<int>{1, 2, 3}, 1), input_error);
}

TEST(Fit, ExactRecoveryOfRandomTriples)
{
    std::uniform_int_distribution<long> dm(0, 3);
    std::uniform_int_distribution<long> dl(0, 5);
    std::uniform_int_distribution<long> dc(-5, 5);
    std::uniform_int_distribution<int> dp(0, 2);
    const std::int64_t primes[] = {3, 5, 7};
    for (int trial = 0; trial < 50; ++trial) {
        const long m = dm(oracle::rng());
        const long lambda = dl(oracle::rng());
        const long c = dc(oracle::rng());
        const auto p = primes[dp(oracle::rng())];
        const auto fit = fit_affine_model(synthesize(p, m, lambda, c, 0, 5), p);
        ASSERT_TRUE(fit.stable) << m << " " << lambda << " " << c << " p=" << p;
        ASSERT_EQ(fit.n0, 0);
        ASSERT_EQ(fit.m, Rational(m));
        ASSERT_EQ(fit.lambda, Rational(lambda));
        ASSERT_EQ(fit.c, Rational(c));
    }
}

TEST(Fit, RealDataNeverGivesNonIntegerStableTriple)
{
    for (auto [p, n_max] : std::vector<std::pair<std::int64_t, int>>{{3, 4}, {5, 2}, {7, 1}}) {
        const auto seq = ordp_h_minus_sequence(p, n_max);
        if (seq.size() < 3) {
            EXPECT_THROW(fit_affine_model(seq, p), input_error);
            continue;
        }
        const auto fit = fit_affine_model(seq, p);
        if (fit.stable) {
            EXPECT_TRUE(fit.integral());
            EXPECT_EQ(fit.predict(p, n_max), Rational(seq.back()));
        } else {
            EXPECT_TRUE(fit.verdict == kVerdictNotReached || fit.verdict == kVerdictInsufficient);
        }
    }
}

TEST(Fit, JsonShape)
{
    const auto j = json::encode(fit_affine_model(std::vector<int>{0, 0, 0, 0}, 3));
    EXPECT_EQ(j.at("m"), "0/1");
    EXPECT_EQ(j.at("lambda"), "0/1");
    EXPECT_EQ(j.at("c"), "0/1");
    EXPECT_EQ(j.at("n0"), 0);
    EXPECT_EQ(j.at("stable"), true);
    EXPECT_EQ(j.at("residuals").size(), 1u);
}

TEST(PowerSeries, Examples)
{
    const auto a = power_series_invariants({2, 1, 1, 0, 0, 0});
    EXPECT_EQ(a.m, 0);
    EXPECT_EQ(a.lambda, 3);
    EXPECT_FALSE(a.precision_insufficient);
    const auto b = power_series_invariants({1, 2, 2});
    EXPECT_EQ(b.m, 1);
    EXPECT_EQ(b.lambda, 0);
    EXPECT_THROW(power_series_invariants({std::nullopt, std::nullopt}), domain_error);
    EXPECT_THROW(power_series_invariants({}), domain_error);
}

TEST(PowerSeries, PrecisionWarning)
{
    const auto r = power_series_invariants({3, 2, 1});
    EXPECT_EQ(r.m, 1);
    EXPECT_EQ(r.lambda, 2);
    EXPECT_TRUE(r.precision_insufficient);
    const auto z = power_series_invariants({std::nullopt, 4, std::nullopt});
    EXPECT_EQ(z.m, 4);
    EXPECT_EQ(z.lambda, 1);
    EXPECT_FALSE(z.precision_insufficient);
}

TEST(PowerSeries, UnitAndPMultiplication)
{
    // coefficients of a series, of the same series times a p-adic unit, and times p
    const std::int64_t p = 3;
    const std::vector<Rational> f{9, 6, Rational(3, 2), 5, 7, 1};
    std::vector<Rational> unit_times;
    for (const auto &c : f) {
        unit_times.push_back(c * Rational(2, 5));
    }
    std::vector<Rational> p_times;
    for (const auto &c : f) {
        p_times.push_back(c * Rational(p));
    }
    const auto base = power_series_invariants(coefficient_valuations(f, p));
    const auto u = power_series_invariants(coefficient_valuations(unit_times, p));
    const auto s = power_series_invariants(coefficient_valuations(p_times, p));
    EXPECT_EQ(base.m, 0);
    EXPECT_EQ(base.lambda, 3);
    EXPECT_EQ(u.m, base.m);
    EXPECT_EQ(u.lambda, base.lambda);
    EXPECT_EQ(s.m, base.m + 1);
    EXPECT_EQ(s.lambda, base.lambda);
}

TEST(TwoPart, Examples)
{
    EXPECT_EQ(two_part_valuation(3, 0), 1);
    EXPECT_EQ(two_part_valuation(3, 1), 2);
    EXPECT_EQ(two_part_valuation(5, 0), 1);
    const auto d = two_part_detail(7, 0);
    EXPECT_EQ(d.residue_degree, 3);
    EXPECT_EQ(d.splitting, 2);
    EXPECT_EQ(d.valuation, 2);
    EXPECT_THROW(two_part_valuation(4, 0), input_error);
    EXPECT_THROW(two_part_valuation(3, -1), input_error);
}

TEST(TwoPart, LiftingTheExponentForThree)
{
    for (int n = 0; n <= 4; ++n) {
        const auto d = two_part_detail(3, n);
        // 2 generates (Z/3^{n+1})^*, so f = phi and r = 1
        EXPECT_EQ(d.residue_degree, 2 * ipow(3, n));
        EXPECT_EQ(d.splitting, 1);
        mpz_class mersenne;
        mpz_ui_pow_ui(mersenne.get_mpz_t(), 2, static_cast<unsigned long>(d.residue_degree));
        mersenne -= 1;
        EXPECT_EQ(ordp_integer(mersenne, 3), n + 1);
        EXPECT_EQ(d.valuation, n + 1);
    }
}
