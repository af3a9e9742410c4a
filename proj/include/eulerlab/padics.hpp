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

#ifndef EULERLAB_PADICS_HPP
#define EULERLAB_PADICS_HPP

// Riemann sums for the Volkenborn integral, p^{-N} sum_{a<p^N} f(a), and the fermionic
// integral, sum_{a<p^N} (-1)^a f(a). Both are exact; convergence is measured in ord_p.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include <eulerlab/characters.hpp>
#include <eulerlab/cyclotomic.hpp>
#include <eulerlab/errors.hpp>
#include <eulerlab/rational.hpp>

namespace eulerlab
{

/// a -> (x + a)^n
struct MonomialShift {
    std::size_t n = 0;
    Rational x;
};

/// a -> chi(a), chi read at its own modulus (zero on multiples of p)
struct CharacterIntegrand {
    DirichletCharacter chi;
};

/// a -> chi(a) a^n
struct CharacterPower {
    DirichletCharacter chi;
    std::size_t n = 0;
};

struct Constant {
    Rational c;
};

using IntegrandSpec = std::variant<MonomialShift, CharacterIntegrand, CharacterPower, Constant>;

/// Rational for monomial and constant integrands, Q(zeta_m) for character integrands.
using IntegralValue = std::variant<Rational, CycElement>;

enum class SumKind { volkenborn, fermionic };

inline constexpr int kExactZeroSentinel = std::numeric_limits<int>::max();

/// Upper bound on the number of summands p^N.
inline constexpr std::int64_t kMaxSummands = 200'000'000;

namespace detail
{

inline std::int64_t summand_count(std::int64_t p, int depth)
{
    require_odd_prime(p);
    if (depth < 1) {
        throw input_error("depth N must be >= 1");
    }
    std::int64_t count = 1;
    for (int i = 0; i < depth; ++i) {
        count *= p;
        if (count > kMaxSummands) {
            throw resource_error("p^N exceeds the summand bound");
        }
    }
    return count;
}

inline void require_matching_prime(const DirichletCharacter &chi, std::int64_t p)
{
    if (chi.p() != p) {
        throw input_error("character modulus is not a power of p");
    }
}

// sum over a < count of w(a) g(a), w = 1 or (-1)^a, for the integer-valued g(a) = (u + a v)^n.
inline mpz_class weighted_power_sum(SumKind kind, std::int64_t count, const mpz_class &u, const mpz_class &v,
                                    std::size_t n)
{
    mpz_class total = 0;
    mpz_class term;
    for (std::int64_t a = 0; a < count; ++a) {
        term = u + v * a;
        mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), n);
        if (kind == SumKind::fermionic && (a & 1)) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

inline IntegralValue riemann_sum(const IntegrandSpec &f, SumKind kind, std::int64_t p, int depth)
{
    const auto count = summand_count(p, depth);
    const Rational scale = kind == SumKind::volkenborn ? Rational(mpz_class(1), mpz_class(count)) : Rational(1);

    return std::visit(
        [&](const auto &spec) -> IntegralValue {
            using T = std::decay_t<decltype(spec)>;
            if constexpr (std::is_same_v<T, Constant>) {
                // sum of (-1)^a over an odd-length range is 1
                const Rational total = kind == SumKind::volkenborn ? Rational(count) : Rational(1);
                return spec.c * total * scale;
            } else if constexpr (std::is_same_v<T, MonomialShift>) {
                const auto sum = weighted_power_sum(kind, count, spec.x.num(), spec.x.den(), spec.n);
                mpz_class den;
                mpz_pow_ui(den.get_mpz_t(), spec.x.den().get_mpz_t(), spec.n);
                return Rational(sum, den) * scale;
            } else {
                const DirichletCharacter &chi = spec.chi;
                require_matching_prime(chi, p);
                std::size_t n = 0;
                if constexpr (std::is_same_v<T, CharacterPower>) {
                    n = spec.n;
                }
                std::vector<mpz_class> weights(static_cast<std::size_t>(chi.value_order()));
                mpz_class term;
                for (std::int64_t a = 0; a < count; ++a) {
                    const auto k = chi_exponent(chi, a);
                    if (!k) {
                        continue;
                    }
                    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(a), n);
                    auto &w = weights[static_cast<std::size_t>(*k)];
                    if (kind == SumKind::fermionic && (a & 1)) {
                        w -= term;
                    } else {
                        w += term;
                    }
                }
                auto z = CycElement::from_exponent_weights(chi.value_order(), weights);
                return kind == SumKind::volkenborn ? ring_scale(z, scale) : z;
            }
        },
        f);
}

} // namespace detail

/// (1/p^N) sum_{a=0}^{p^N-1} f(a)
inline IntegralValue volkenborn_sum(const IntegrandSpec &f, std::int64_t p, int depth)
{
    return detail::riemann_sum(f, SumKind::volkenborn, p, depth);
}

/// sum_{a=0}^{p^N-1} (-1)^a f(a)
inline IntegralValue fermionic_sum(const IntegrandSpec &f, std::int64_t p, int depth)
{
    return detail::riemann_sum(f, SumKind::fermionic, p, depth);
}

inline IntegralValue riemann_sum(const IntegrandSpec &f, SumKind kind, std::int64_t p, int depth)
{
    return detail::riemann_sum(f, kind, p, depth);
}

/// Rational value of a sum; character sums must pass the rationality certificate.
inline Rational rational_value(const IntegralValue &v)
{
    if (const auto *q = std::get_if<Rational>(&v)) {
        return *q;
    }
    try {
        return as_rational(std::get<CycElement>(v));
    } catch (const not_rational_error &) {
        throw input_error("convergence profile needs a rational-valued integrand");
    }
}

/// [ord_p(S_{N+1} - S_N)] for N = 1 .. max_depth-1; exact-zero differences give kExactZeroSentinel.
inline std::vector<int> convergence_profile(const IntegrandSpec &f, SumKind kind, std::int64_t p, int max_depth)
{
    std::vector<int> profile;
    if (max_depth < 2) {
        return profile;
    }
    Rational previous = rational_value(riemann_sum(f, kind, p, 1));
    for (int depth = 2; depth <= max_depth; ++depth) {
        Rational current = rational_value(riemann_sum(f, kind, p, depth));
        const auto diff = current - previous;
        profile.push_back(diff.is_zero() ? kExactZeroSentinel : ordp_rational(diff, p));
        previous = std::move(current);
    }
    return profile;
}

/// Default depths keeping p^N around 10^4 or less.
inline int default_max_depth(std::int64_t p)
{
    switch (p) {
    case 3:
        return 8;
    case 5:
        return 6;
    case 7:
        return 5;
    default:
        return 4;
    }
}

} // namespace eulerlab

#endif
