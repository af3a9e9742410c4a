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

#ifndef EULERLAB_CLASSNUMBER_HPP
#define EULERLAB_CLASSNUMBER_HPP

// (S,{2})-refined relative class numbers of Q(mu_{p^{n+1}}) from generalized Euler numbers:
//   h^-_{n,2} = eps * (-1)^{phi/2} 2^{1-phi} prod_{chi odd} E_{0,chi},  phi = phi(p^{n+1}),
// where eps = (-1)^{#T(K) - #T(K+)} counts the primes above 2 in K and K+. The factor eps comes
// from the sign of prod_{P | 2}(1 - NP) in the leading term of the T-modified zeta functions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <type_traits>
#include <thread>
#include <utility>
#include <vector>

#include <eulerlab/characters.hpp>
#include <eulerlab/cyclotomic.hpp>
#include <eulerlab/errors.hpp>
#include <eulerlab/euler.hpp>
#include <eulerlab/number_theory.hpp>
#include <eulerlab/rational.hpp>

namespace eulerlab
{

struct HMinusResult {
    std::int64_t p = 0;
    int n = 0;
    Rational value;
    /// The bare product formula, before multiplying by sign_correction.
    Rational formula_value;
    int sign_correction = 1;
    int ordp = 0;
    /// (t, ord_p of the product of E_{0,chi} over odd chi of conductor p^t), t = 1..n+1
    std::vector<std::pair<int, int>> conductor_increments;
    std::int64_t character_count = 0;

    friend bool operator==(const HMinusResult &, const HMinusResult &) = default;
};

struct ClassNumberOptions {
    /// Largest admissible phi(p^{n+1}).
    std::int64_t max_group_order = 1000;
    unsigned threads = 0; // 0: hardware concurrency
};

namespace detail
{

inline unsigned worker_count(unsigned requested, std::size_t jobs)
{
    unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Results land in input order regardless of the thread count.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In> &inputs, Fn fn, unsigned threads)
{
    using Out = std::invoke_result_t<Fn, const In &>;
    std::vector<std::optional<Out>> slots(inputs.size());
    const unsigned workers = worker_count(threads, inputs.size());
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < inputs.size(); i += workers) {
                slots[i].emplace(fn(inputs[i]));
            }
        }));
    }
    for (auto &t : tasks) {
        t.get();
    }
    std::vector<Out> out;
    out.reserve(slots.size());
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

// Balanced product tree; exact, so the grouping does not change the value.
inline CycElement product_tree(std::vector<CycElement> factors, std::int64_t order)
{
    if (factors.empty()) {
        return CycElement::from_rational(order, 1);
    }
    while (factors.size() > 1) {
        std::vector<CycElement> next;
        next.reserve((factors.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < factors.size(); i += 2) {
            next.push_back(factors[i] * factors[i + 1]);
        }
        if (factors.size() % 2 == 1) {
            next.push_back(factors.back());
        }
        factors = std::move(next);
    }
    return factors.front();
}

inline std::int64_t checked_group_order(std::int64_t p, int n, const ClassNumberOptions &options)
{
    require_odd_prime(p);
    if (n < 0) {
        throw input_error("n must be >= 0");
    }
    std::int64_t order = p - 1;
    for (int i = 0; i < n; ++i) {
        order *= p;
        if (order > options.max_group_order) {
            break;
        }
    }
    if (order > options.max_group_order) {
        throw resource_error("phi(p^{n+1}) exceeds the configured bound " + std::to_string(options.max_group_order));
    }
    return order;
}

inline std::vector<DirichletCharacter> odd_characters(std::int64_t p, int n, int conductor_exp = -1)
{
    std::vector<DirichletCharacter> out;
    for (const auto &chi : character_table(p, n + 1)) {
        if (parity(chi) != Parity::odd) {
            continue;
        }
        const int t = conductor_exponent(chi);
        if (t == 0) {
            throw consistency_error("odd character with conductor 1");
        }
        if (conductor_exp < 0 || t == conductor_exp) {
            out.push_back(chi);
        }
    }
    return out;
}

inline std::vector<CycElement> euler_zero_values(const std::vector<DirichletCharacter> &chars, unsigned threads)
{
    if (chars.empty()) {
        return {};
    }
    return parallel_map(chars, [](const DirichletCharacter &chi) { return generalized_euler_number(0, chi); },
                        threads);
}

inline Rational certified_product(const std::vector<CycElement> &values, std::int64_t order)
{
    try {
        return as_rational(product_tree(values, order));
    } catch (const not_rational_error &e) {
        throw consistency_error(std::string("Galois-stable product failed the rationality certificate: ") + e.what());
    }
}

} // namespace detail

/// Number of primes above 2 in Q(mu_{p^{n+1}}) and in its maximal real subfield.
inline std::pair<std::int64_t, std::int64_t> primes_above_two(std::int64_t p, int n)
{
    require_odd_prime(p);
    const auto modulus = ipow(p, n + 1);
    const auto phi = modulus / p * (p - 1);
    const auto f = multiplicative_order(2, modulus, phi);
    // -1 lies in <2> iff f is even (the unit group is cyclic).
    const auto f_plus = f % 2 == 0 ? f / 2 : f;
    return {phi / f, (phi / 2) / f_plus};
}

/// prod E_{0,chi} over odd chi mod p^{n+1} with conductor exactly p^t, certified rational.
inline Rational odd_product_by_conductor(std::int64_t p, int n, int t, const ClassNumberOptions &options = {})
{
    const auto order = detail::checked_group_order(p, n, options);
    if (t < 1 || t > n + 1) {
        throw input_error("conductor exponent t must satisfy 1 <= t <= n+1");
    }
    const auto chars = detail::odd_characters(p, n, t);
    const auto product = detail::certified_product(detail::euler_zero_values(chars, options.threads), order);
    if (product.is_zero()) {
        throw consistency_error("vanishing generalized Euler number for an odd character");
    }
    return product;
}

inline HMinusResult h_minus(std::int64_t p, int n, const ClassNumberOptions &options = {})
{
    const auto order = detail::checked_group_order(p, n, options);
    const auto chars = detail::odd_characters(p, n);
    const auto values = detail::euler_zero_values(chars, options.threads);

    HMinusResult r;
    r.p = p;
    r.n = n;
    r.character_count = static_cast<std::int64_t>(chars.size());

    const auto product = detail::certified_product(values, order);
    const Rational sign = (order / 2) % 2 == 0 ? Rational(1) : Rational(-1);
    r.formula_value = sign * Rational(2).pow(1 - order) * product;
    const auto [t_full, t_plus] = primes_above_two(p, n);
    r.sign_correction = (t_full - t_plus) % 2 == 0 ? 1 : -1;
    r.value = r.formula_value * Rational(r.sign_correction);
    if (!r.value.is_integer() || r.value.sign() <= 0) {
        throw consistency_error("h^-_{n,2} = " + r.value.to_string() + " is not a positive integer for p = " +
                                std::to_string(p) + ", n = " + std::to_string(n));
    }
    r.ordp = ordp_rational(r.value, p);

    int total = 0;
    for (int t = 1; t <= n + 1; ++t) {
        std::vector<CycElement> slice;
        for (std::size_t i = 0; i < chars.size(); ++i) {
            if (conductor_exponent(chars[i]) == t) {
                slice.push_back(values[i]);
            }
        }
        const auto piece = detail::certified_product(slice, order);
        const int delta = ordp_rational(piece, p);
        r.conductor_increments.emplace_back(t, delta);
        total += delta;
    }
    if (total != r.ordp) {
        throw consistency_error("sum of conductor increments differs from ord_p h^-");
    }
    return r;
}

/// [ord_p h^-_{n,2}] for n = 0..n_max.
inline std::vector<int> ordp_h_minus_sequence(std::int64_t p, int n_max, const ClassNumberOptions &options = {})
{
    std::vector<int> out;
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(h_minus(p, n, options).ordp);
    }
    return out;
}

} // namespace eulerlab

#endif
