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

#ifndef EULERLAB_IWASAWA_HPP
#define EULERLAB_IWASAWA_HPP

// Growth law ord_p h^-_{n,2} = m p^n + lambda n + c, fitted exactly on sliding windows,
// plus the (m, lambda) invariants of a power series read off its coefficient valuations.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <eulerlab/errors.hpp>
#include <eulerlab/number_theory.hpp>
#include <eulerlab/rational.hpp>

namespace eulerlab
{

inline constexpr const char *kVerdictStable = "stable";
inline constexpr const char *kVerdictNotReached = "n0 not reached within computed range";
inline constexpr const char *kVerdictInsufficient = "insufficient data";

struct IwasawaFit {
    Rational m;
    Rational lambda;
    Rational c;
    /// First n of the window the triple was solved on.
    int n0 = 0;
    /// Model minus observation at every n after the window.
    std::vector<Rational> residuals;
    bool stable = false;
    std::string verdict;

    bool integral() const
    {
        return m.is_integer() && lambda.is_integer() && c.is_integer();
    }
    Rational predict(std::int64_t p, int n) const
    {
        return m * Rational(p).pow(n) + lambda * Rational(n) + c;
    }
};

namespace detail
{

// Exact solve of m p^n + lambda n + c = y_n on three consecutive n.
inline std::array<Rational, 3> solve_window(std::int64_t p, int n, const std::array<Rational, 3> &y)
{
    std::array<std::array<Rational, 4>, 3> a;
    for (int i = 0; i < 3; ++i) {
        a[i] = {Rational(p).pow(n + i), Rational(n + i), Rational(1), y[static_cast<std::size_t>(i)]};
    }
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t pivot = col;
        while (pivot < 3 && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == 3) {
            throw consistency_error("fit_affine_model: singular system");
        }
        std::swap(a[col], a[pivot]);
        for (std::size_t row = 0; row < 3; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < 4; ++k) {
                a[row][k] -= factor * a[col][k];
            }
        }
    }
    return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

inline IwasawaFit fit_window(const std::vector<Rational> &values, std::int64_t p, int first_n, std::size_t w)
{
    const int n = first_n + static_cast<int>(w);
    const auto triple = solve_window(p, n, {values[w], values[w + 1], values[w + 2]});
    IwasawaFit fit;
    fit.m = triple[0];
    fit.lambda = triple[1];
    fit.c = triple[2];
    fit.n0 = n;
    for (std::size_t i = w + 3; i < values.size(); ++i) {
        fit.residuals.push_back(fit.predict(p, first_n + static_cast<int>(i)) - values[i]);
    }
    return fit;
}

} // namespace detail

/// values[i] is the observation at n = first_n + i. Slides the three-point window forward
/// until the model reproduces every later point; a window with no later point cannot be stable.
inline IwasawaFit fit_affine_model(const std::vector<Rational> &values, std::int64_t p, int first_n = 0)
{
    if (values.size() < 3) {
        throw input_error("fit_affine_model needs at least 3 points");
    }
    if (p < 2) {
        throw input_error("fit_affine_model: p must be >= 2");
    }
    for (std::size_t w = 0; w + 3 < values.size(); ++w) {
        auto fit = detail::fit_window(values, p, first_n, w);
        bool all_zero = true;
        for (const auto &r : fit.residuals) {
            all_zero = all_zero && r.is_zero();
        }
        if (all_zero) {
            fit.stable = true;
            fit.verdict = kVerdictStable;
            return fit;
        }
    }
    auto fit = detail::fit_window(values, p, first_n, 0);
    fit.verdict = values.size() == 3 ? kVerdictInsufficient : kVerdictNotReached;
    return fit;
}

inline IwasawaFit fit_affine_model(const std::vector<int> &values, std::int64_t p, int first_n = 0)
{
    std::vector<Rational> q(values.begin(), values.end());
    return fit_affine_model(q, p, first_n);
}

struct SeriesInvariants {
    int m = 0;
    int lambda = 0;
    /// The minimum first occurs at the last known coefficient, so lambda may be an artefact of truncation.
    bool precision_insufficient = false;
};

/// m = least coefficient valuation, lambda = first index attaining it. nullopt marks a zero coefficient.
inline SeriesInvariants power_series_invariants(const std::vector<std::optional<int>> &ords)
{
    std::optional<int> best;
    std::size_t at = 0;
    for (std::size_t i = 0; i < ords.size(); ++i) {
        if (ords[i] && (!best || *ords[i] < *best)) {
            best = ords[i];
            at = i;
        }
    }
    if (!best) {
        throw domain_error("zero series");
    }
    return {*best, static_cast<int>(at), at + 1 == ords.size()};
}

/// ord_p of each coefficient, nullopt for zero coefficients.
inline std::vector<std::optional<int>> coefficient_valuations(const std::vector<Rational> &coeffs, std::int64_t p)
{
    std::vector<std::optional<int>> out;
    out.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        out.push_back(c.is_zero() ? std::nullopt : std::optional<int>(ordp_rational(c, p)));
    }
    return out;
}

struct TwoPartValuation {
    std::int64_t residue_degree = 0; // f: order of 2 mod p^{n+1}
    std::int64_t splitting = 0;      // r = phi(p^{n+1}) / f
    int valuation = 0;               // ord_p((2^f - 1)^r)
};

inline TwoPartValuation two_part_detail(std::int64_t p, int n)
{
    require_odd_prime(p);
    if (n < 0) {
        throw input_error("n must be >= 0");
    }
    const auto modulus = ipow(p, n + 1);
    const auto phi = modulus / p * (p - 1);
    TwoPartValuation out;
    out.residue_degree = multiplicative_order(2, modulus, phi);
    out.splitting = phi / out.residue_degree;
    mpz_class mersenne;
    mpz_ui_pow_ui(mersenne.get_mpz_t(), 2, static_cast<unsigned long>(out.residue_degree));
    mersenne -= 1;
    out.valuation = static_cast<int>(out.splitting) * ordp_integer(mersenne, p);
    return out;
}

/// ord_p of the p-part of prod_{P | 2} F_P^*, i.e. ord_p((2^f - 1)^r).
inline int two_part_valuation(std::int64_t p, int n)
{
    return two_part_detail(p, n).valuation;
}

} // namespace eulerlab

#endif
