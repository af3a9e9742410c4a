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

#ifndef EULERLAB_CYCLOTOMIC_HPP
#define EULERLAB_CYCLOTOMIC_HPP

// Exact arithmetic in Q(zeta_m) = Q[x]/(Phi_m(x)) on the power basis 1, x, ..., x^{phi(m)-1}.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <eulerlab/errors.hpp>
#include <eulerlab/number_theory.hpp>
#include <eulerlab/rational.hpp>

namespace eulerlab
{

/// Dense integer polynomial, ascending coefficients, no trailing zeros (the zero polynomial is empty).
class IntPolynomial
{
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
    {
        trim();
    }

    /// x^n - 1
    static IntPolynomial x_pow_minus_one(std::int64_t n)
    {
        std::vector<mpz_class> c(static_cast<std::size_t>(n + 1));
        c.front() = -1;
        c.back() = 1;
        return IntPolynomial(std::move(c));
    }

    const std::vector<mpz_class> &coeffs() const noexcept
    {
        return coeffs_;
    }
    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    std::int64_t degree() const noexcept
    {
        return static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    bool is_monic() const
    {
        return !coeffs_.empty() && coeffs_.back() == 1;
    }

    friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

    /// Quotient and remainder on division by a monic polynomial.
    std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial &divisor) const
    {
        if (!divisor.is_monic()) {
            throw input_error("divmod_monic: divisor must be monic");
        }
        auto rem = coeffs_;
        const auto dd = static_cast<std::size_t>(divisor.degree());
        if (rem.size() <= dd) {
            return {IntPolynomial{}, *this};
        }
        std::vector<mpz_class> quot(rem.size() - dd);
        for (std::size_t i = rem.size(); i-- > dd;) {
            const mpz_class c = rem[i];
            if (c == 0) {
                continue;
            }
            quot[i - dd] = c;
            for (std::size_t k = 0; k <= dd; ++k) {
                rem[i - dd + k] -= c * divisor.coeffs_[k];
            }
        }
        rem.resize(dd);
        return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
    }

    std::string to_string() const
    {
        if (coeffs_.empty()) {
            return "0";
        }
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const auto &c = coeffs_[i];
            if (c == 0) {
                continue;
            }
            if (!out.empty()) {
                out += c < 0 ? " - " : " + ";
            } else if (c < 0) {
                out += "-";
            }
            const mpz_class a = abs(c);
            if (a != 1 || i == 0) {
                out += a.get_str();
            }
            if (i >= 1) {
                out += "x";
            }
            if (i >= 2) {
                out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<mpz_class> coeffs_;
};

namespace detail
{

inline IntPolynomial compute_cyclotomic(std::int64_t m, const std::map<std::int64_t, IntPolynomial> &known)
{
    IntPolynomial divisor({mpz_class(1)});
    for (std::int64_t d = 1; d < m; ++d) {
        if (m % d == 0) {
            divisor = divisor * known.at(d);
        }
    }
    auto [quot, rem] = IntPolynomial::x_pow_minus_one(m).divmod_monic(divisor);
    if (!rem.is_zero()) {
        throw consistency_error("cyclotomic_polynomial: inexact division for m = " + std::to_string(m));
    }
    return quot;
}

} // namespace detail

/// Phi_m, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d and memoized process-wide.
inline IntPolynomial cyclotomic_polynomial(std::int64_t m)
{
    if (m < 1) {
        throw input_error("cyclotomic_polynomial: m must be >= 1");
    }
    static std::mutex mutex;
    static std::map<std::int64_t, IntPolynomial> table;
    std::lock_guard lock(mutex);
    if (auto it = table.find(m); it != table.end()) {
        return it->second;
    }
    for (std::int64_t d = 1; d <= m; ++d) {
        if (m % d == 0 && !table.contains(d)) {
            table.emplace(d, detail::compute_cyclotomic(d, table));
        }
    }
    return table.at(m);
}

/// Reduction data for Q[x]/(Phi_m): the degree and the sparse non-leading terms of Phi_m.
struct RingContext {
    std::int64_t order = 1;
    std::size_t degree = 1;
    std::vector<std::pair<std::size_t, mpz_class>> lower_terms;

    /// In-place reduction of a polynomial of any length; the result has exactly `degree` entries.
    template <typename T>
    void reduce(std::vector<T> &v) const
    {
        for (std::size_t i = v.size(); i-- > degree;) {
            if (v[i] == 0) {
                continue;
            }
            const T c = v[i];
            for (const auto &[k, phik] : lower_terms) {
                v[i - degree + k] -= c * T(phik);
            }
        }
        v.resize(degree);
    }
};

inline std::shared_ptr<const RingContext> ring_context(std::int64_t m)
{
    static std::mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const RingContext>> table;
    {
        std::lock_guard lock(mutex);
        if (auto it = table.find(m); it != table.end()) {
            return it->second;
        }
    }
    const auto phi = cyclotomic_polynomial(m);
    auto ctx = std::make_shared<RingContext>();
    ctx->order = m;
    ctx->degree = static_cast<std::size_t>(phi.degree());
    for (std::size_t k = 0; k < ctx->degree; ++k) {
        if (phi.coeffs()[k] != 0) {
            ctx->lower_terms.emplace_back(k, phi.coeffs()[k]);
        }
    }
    std::lock_guard lock(mutex);
    return table.emplace(m, std::move(ctx)).first->second;
}

/// Element of Q(zeta_m), coefficient i multiplying zeta_m^i for i < phi(m).
class CycElement
{
public:
    /// The zero element of Q(zeta_m).
    explicit CycElement(std::int64_t m) : ctx_(ring_context(m)), coeffs_(ctx_->degree) {}

    static CycElement from_rational(std::int64_t m, const Rational &q)
    {
        CycElement z(m);
        z.coeffs_[0] = q;
        return z;
    }

    /// Reduces an arbitrary-length coefficient list modulo Phi_m.
    static CycElement from_polynomial(std::int64_t m, std::vector<Rational> poly)
    {
        CycElement z(m);
        if (poly.size() < z.coeffs_.size()) {
            poly.resize(z.coeffs_.size());
        }
        z.ctx_->reduce(poly);
        z.coeffs_ = std::move(poly);
        return z;
    }

    /// sum_k weights[k] * zeta_m^k, with k read modulo m.
    static CycElement from_exponent_weights(std::int64_t m, const std::vector<Rational> &weights)
    {
        std::vector<Rational> poly(static_cast<std::size_t>(m));
        for (std::size_t k = 0; k < weights.size(); ++k) {
            if (!weights[k].is_zero()) {
                poly[k % static_cast<std::size_t>(m)] += weights[k];
            }
        }
        return from_polynomial(m, std::move(poly));
    }

    static CycElement from_exponent_weights(std::int64_t m, const std::vector<mpz_class> &weights)
    {
        std::vector<mpz_class> poly(static_cast<std::size_t>(m));
        for (std::size_t k = 0; k < weights.size(); ++k) {
            poly[k % static_cast<std::size_t>(m)] += weights[k];
        }
        CycElement z(m);
        if (poly.size() < z.coeffs_.size()) {
            poly.resize(z.coeffs_.size());
        }
        z.ctx_->reduce(poly);
        for (std::size_t i = 0; i < z.coeffs_.size(); ++i) {
            z.coeffs_[i] = Rational(poly[i]);
        }
        return z;
    }

    std::int64_t order() const noexcept
    {
        return ctx_->order;
    }
    std::size_t degree() const noexcept
    {
        return ctx_->degree;
    }
    const std::vector<Rational> &coeffs() const noexcept
    {
        return coeffs_;
    }

    bool is_zero() const
    {
        for (const auto &c : coeffs_) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const CycElement &a, const CycElement &b)
    {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }

private:
    std::shared_ptr<const RingContext> ctx_;
    std::vector<Rational> coeffs_;

    friend CycElement ring_add(const CycElement &, const CycElement &);
    friend CycElement ring_negate(const CycElement &);
    friend CycElement ring_multiply(const CycElement &, const CycElement &);
    friend CycElement ring_scale(const CycElement &, const Rational &);
};

namespace detail
{

inline void require_same_order(const CycElement &a, const CycElement &b, const char *op)
{
    if (a.order() != b.order()) {
        throw input_error(std::string(op) + ": mismatched cyclotomic orders " + std::to_string(a.order()) + " and " +
                          std::to_string(b.order()));
    }
}

// Clears denominators: coeffs = ints / den.
inline std::pair<std::vector<mpz_class>, mpz_class> integer_form(const std::vector<Rational> &coeffs)
{
    mpz_class den = 1;
    for (const auto &c : coeffs) {
        if (c.den() != 1) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        }
    }
    std::vector<mpz_class> ints(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (den == 1) {
            ints[i] = coeffs[i].num();
        } else {
            ints[i] = coeffs[i].num() * (den / coeffs[i].den());
        }
    }
    return {std::move(ints), std::move(den)};
}

} // namespace detail

inline CycElement ring_add(const CycElement &a, const CycElement &b)
{
    detail::require_same_order(a, b, "ring_add");
    CycElement r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] += b.coeffs_[i];
    }
    return r;
}

inline CycElement ring_negate(const CycElement &a)
{
    CycElement r = a;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

inline CycElement ring_subtract(const CycElement &a, const CycElement &b)
{
    return ring_add(a, ring_negate(b));
}

inline CycElement ring_scale(const CycElement &a, const Rational &q)
{
    CycElement r = a;
    for (auto &c : r.coeffs_) {
        c *= q;
    }
    return r;
}

/// Product modulo Phi_m. Works on cleared-denominator integer vectors.
inline CycElement ring_multiply(const CycElement &a, const CycElement &b)
{
    detail::require_same_order(a, b, "ring_multiply");
    auto [ia, da] = detail::integer_form(a.coeffs_);
    auto [ib, db] = detail::integer_form(b.coeffs_);
    const std::size_t d = a.coeffs_.size();
    std::vector<mpz_class> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (ia[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            mpz_addmul(prod[i + j].get_mpz_t(), ia[i].get_mpz_t(), ib[j].get_mpz_t());
        }
    }
    a.ctx_->reduce(prod);
    const mpz_class den = da * db;
    CycElement r(a.order());
    for (std::size_t i = 0; i < d; ++i) {
        r.coeffs_[i] = den == 1 ? Rational(prod[i]) : Rational(prod[i], den);
    }
    return r;
}

inline CycElement operator+(const CycElement &a, const CycElement &b)
{
    return ring_add(a, b);
}
inline CycElement operator-(const CycElement &a, const CycElement &b)
{
    return ring_subtract(a, b);
}
inline CycElement operator-(const CycElement &a)
{
    return ring_negate(a);
}
inline CycElement operator*(const CycElement &a, const CycElement &b)
{
    return ring_multiply(a, b);
}

/// zeta_m^k, i.e. x^{k mod m} reduced modulo Phi_m.
inline CycElement root_of_unity_power(std::int64_t m, std::int64_t k)
{
    if (m < 1) {
        throw input_error("root_of_unity_power: m must be >= 1");
    }
    std::vector<Rational> poly(static_cast<std::size_t>(mod(k, m)) + 1);
    poly.back() = 1;
    return CycElement::from_polynomial(m, std::move(poly));
}

inline CycElement ring_pow(const CycElement &z, std::int64_t n)
{
    if (n < 0) {
        throw input_error("ring_pow: negative exponent");
    }
    auto result = CycElement::from_rational(z.order(), 1);
    auto base = z;
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

/// Rationality certificate: the constant coefficient, provided every other coefficient is exactly zero.
inline Rational as_rational(const CycElement &z)
{
    const auto &c = z.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (!c[i].is_zero()) {
            throw not_rational_error(i);
        }
    }
    return c.front();
}

/// Image under the automorphism zeta_m -> zeta_m^k.
inline CycElement galois_apply(const CycElement &z, std::int64_t k)
{
    const auto m = z.order();
    if (std::gcd(mod(k, m), m) != 1) {
        throw input_error("galois_apply: k must be coprime to m");
    }
    std::vector<Rational> weights(static_cast<std::size_t>(m));
    const auto &c = z.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        weights[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * k, m))] += c[i];
    }
    return CycElement::from_exponent_weights(m, weights);
}

/// Complex conjugation, zeta_m -> zeta_m^{-1}.
inline CycElement conjugate(const CycElement &z)
{
    return galois_apply(z, -1);
}

/// Embeds Q(zeta_m) into Q(zeta_M) for m | M via zeta_m = zeta_M^{M/m}.
inline CycElement embed_to_order(const CycElement &z, std::int64_t big_m)
{
    const auto m = z.order();
    if (big_m % m != 0) {
        throw input_error("embed_to_order: target order must be a multiple of " + std::to_string(m));
    }
    const auto step = static_cast<std::size_t>(big_m / m);
    std::vector<Rational> poly(z.degree() == 0 ? 1 : (z.degree() - 1) * step + 1);
    for (std::size_t i = 0; i < z.degree(); ++i) {
        poly[i * step] = z.coeffs()[i];
    }
    return CycElement::from_polynomial(big_m, std::move(poly));
}

/// Value under zeta_m -> exp(2 pi i / m), by Horner's rule.
inline std::complex<double> embed_complex(const CycElement &z)
{
    const auto root = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(z.order()));
    std::complex<double> acc = 0.0;
    const auto &c = z.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * root + c[i].to_double();
    }
    return acc;
}

} // namespace eulerlab

#endif
