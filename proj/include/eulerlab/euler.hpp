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

#ifndef EULERLAB_EULER_HPP
#define EULERLAB_EULER_HPP

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <eulerlab/characters.hpp>
#include <eulerlab/cyclotomic.hpp>
#include <eulerlab/rational.hpp>

namespace eulerlab
{

/// Dense polynomial over Q, coefficient index = degree, trailing zeros trimmed.
class RationalPolynomial
{
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    static RationalPolynomial monomial(std::size_t degree, const Rational &c = Rational(1))
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return RationalPolynomial(std::move(v));
    }

    const std::vector<Rational> &coeffs() const noexcept
    {
        return coeffs_;
    }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept
    {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    Rational coeff(std::size_t i) const
    {
        return i < coeffs_.size() ? coeffs_[i] : Rational();
    }

    Rational operator()(const Rational &x) const
    {
        Rational acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x + coeffs_[i];
        }
        return acc;
    }

    RationalPolynomial &operator+=(const RationalPolynomial &o)
    {
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
            coeffs_[i] += o.coeffs_[i];
        }
        trim();
        return *this;
    }
    RationalPolynomial &operator-=(const RationalPolynomial &o)
    {
        return *this += o * Rational(-1);
    }

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial &b)
    {
        return a += b;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial &b)
    {
        return a -= b;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational &c)
    {
        for (auto &x : a.coeffs_) {
            x *= c;
        }
        a.trim();
        return a;
    }
    friend RationalPolynomial operator*(const RationalPolynomial &a, const RationalPolynomial &b)
    {
        if (a.coeffs_.empty() || b.coeffs_.empty()) {
            return {};
        }
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return RationalPolynomial(std::move(c));
    }

    friend bool operator==(const RationalPolynomial &, const RationalPolynomial &) = default;

    /// x -> scale * x + shift, i.e. returns P(scale x + shift).
    RationalPolynomial compose_affine(const Rational &scale, const Rational &shift) const
    {
        const RationalPolynomial inner(std::vector<Rational>{shift, scale});
        RationalPolynomial acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * inner + RationalPolynomial(std::vector<Rational>{coeffs_[i]});
        }
        return acc;
    }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            out.push_back(c.to_string());
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<Rational> coeffs_;
};

inline mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace detail
{

// Grows `memo` up to index n using `next(k, memo)` for each missing k.
template <typename Next>
RationalPolynomial memoized(std::vector<RationalPolynomial> &memo, std::mutex &mutex, std::size_t n, Next next)
{
    std::lock_guard lock(mutex);
    while (memo.size() <= n) {
        memo.push_back(next(memo.size(), memo));
    }
    return memo[n];
}

} // namespace detail

/// E_n(x), from 2 x^n = sum_{k<=n} C(n,k) E_k(x) + E_n(x).
inline RationalPolynomial euler_polynomial(std::size_t n)
{
    static std::mutex mutex;
    static std::vector<RationalPolynomial> memo;
    return detail::memoized(memo, mutex, n, [](std::size_t k, const std::vector<RationalPolynomial> &prev) {
        auto result = RationalPolynomial::monomial(k);
        for (std::size_t i = 0; i < k; ++i) {
            result -= prev[i] * Rational(binomial(k, i), mpz_class(2));
        }
        return result;
    });
}

/// B_n(x), from sum_{k<=n} C(n+1,k) B_k(x) = (n+1) x^n.
inline RationalPolynomial bernoulli_polynomial(std::size_t n)
{
    static std::mutex mutex;
    static std::vector<RationalPolynomial> memo;
    return detail::memoized(memo, mutex, n, [](std::size_t k, const std::vector<RationalPolynomial> &prev) {
        auto result = RationalPolynomial::monomial(k);
        const mpz_class kp1(static_cast<unsigned long>(k + 1));
        for (std::size_t i = 0; i < k; ++i) {
            result -= prev[i] * Rational(binomial(k + 1, i), kp1);
        }
        return result;
    });
}

/// E_{n,chi} = f^n sum_{a=1}^{f} (-1)^a chi(a) E_n(a/f), f the conductor, chi read primitively.
/// The value lies in Q(zeta_m), m = phi(p^e).
inline CycElement generalized_euler_number(std::size_t n, const DirichletCharacter &chi)
{
    const auto f = conductor(chi);
    const auto poly = euler_polynomial(n);
    const auto m = chi.value_order();
    std::vector<Rational> weights(static_cast<std::size_t>(m));
    for (std::int64_t a = 1; a <= f; ++a) {
        const auto k = chi_exponent(chi, a, true);
        if (!k) {
            continue;
        }
        const auto term = n == 0 ? Rational(1) : poly(Rational(a, f));
        auto &w = weights[static_cast<std::size_t>(*k)];
        if (a % 2 == 0) {
            w += term;
        } else {
            w -= term;
        }
    }
    auto z = CycElement::from_exponent_weights(m, weights);
    if (n > 0) {
        z = ring_scale(z, Rational(f).pow(static_cast<long>(n)));
    }
    return z;
}

} // namespace eulerlab

#endif
