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

#ifndef EULERLAB_CHARACTERS_HPP
#define EULERLAB_CHARACTERS_HPP

// Dirichlet characters modulo p^e for odd primes p. The unit group is cyclic with
// generator g, and chi_j(g^t) = zeta_m^{j t} where m = phi(p^e).

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <eulerlab/cyclotomic.hpp>
#include <eulerlab/errors.hpp>
#include <eulerlab/number_theory.hpp>

namespace eulerlab
{

/// Smallest g >= 2 generating (Z/p^e)^*.
inline std::int64_t primitive_root(std::int64_t p, int e)
{
    require_odd_prime(p);
    if (e < 1) {
        throw input_error("primitive_root: level must be >= 1");
    }
    const auto modulus = ipow(p, e);
    const auto m = modulus / p * (p - 1);
    const auto qs = prime_divisors(m);
    for (std::int64_t g = 2; g < modulus; ++g) {
        if (g % p == 0) {
            continue;
        }
        bool generates = true;
        for (auto q : qs) {
            if (powmod(g, m / q, modulus) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) {
            return g;
        }
    }
    throw consistency_error("primitive_root: no generator found");
}

/// Discrete-log data for (Z/p^e)^*, shared by every character of that modulus.
struct CharacterGroup {
    std::int64_t p = 3;
    int level = 1;
    std::int64_t modulus = 3;
    std::int64_t order = 2;
    std::int64_t generator = 2;
    std::vector<std::int64_t> log; // log[a] for units a < modulus, -1 on multiples of p
};

inline std::shared_ptr<const CharacterGroup> character_group(std::int64_t p, int e)
{
    static std::mutex mutex;
    static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const CharacterGroup>> table;
    {
        std::lock_guard lock(mutex);
        if (auto it = table.find({p, e}); it != table.end()) {
            return it->second;
        }
    }
    auto g = std::make_shared<CharacterGroup>();
    g->p = p;
    g->level = e;
    g->generator = primitive_root(p, e);
    g->modulus = ipow(p, e);
    g->order = g->modulus / p * (p - 1);
    g->log.assign(static_cast<std::size_t>(g->modulus), -1);
    std::int64_t x = 1;
    for (std::int64_t t = 0; t < g->order; ++t) {
        g->log[static_cast<std::size_t>(x)] = t;
        x = x * g->generator % g->modulus;
    }
    std::lock_guard lock(mutex);
    return table.emplace(std::pair{p, e}, std::move(g)).first->second;
}

enum class Parity { even, odd };

inline std::string_view to_string(Parity parity)
{
    return parity == Parity::even ? "even" : "odd";
}

/// chi_j modulo p^e.
class DirichletCharacter
{
public:
    DirichletCharacter(std::shared_ptr<const CharacterGroup> group, std::int64_t index)
        : group_(std::move(group)), index_(index)
    {
        if (index_ < 0 || index_ >= group_->order) {
            throw input_error("character index out of range [0, phi(p^e))");
        }
    }

    DirichletCharacter(std::int64_t p, int e, std::int64_t index) : DirichletCharacter(character_group(p, e), index) {}

    const CharacterGroup &group() const noexcept
    {
        return *group_;
    }
    std::int64_t p() const noexcept
    {
        return group_->p;
    }
    int level() const noexcept
    {
        return group_->level;
    }
    std::int64_t modulus() const noexcept
    {
        return group_->modulus;
    }
    /// Order of the ring Q(zeta_m) holding the values, m = phi(p^e).
    std::int64_t value_order() const noexcept
    {
        return group_->order;
    }
    std::int64_t index() const noexcept
    {
        return index_;
    }
    bool is_trivial() const noexcept
    {
        return index_ == 0;
    }
    /// Order of chi as a group element.
    std::int64_t order() const noexcept
    {
        return group_->order / std::gcd(index_, group_->order);
    }

    friend bool operator==(const DirichletCharacter &a, const DirichletCharacter &b)
    {
        return a.p() == b.p() && a.level() == b.level() && a.index_ == b.index_;
    }

private:
    std::shared_ptr<const CharacterGroup> group_;
    std::int64_t index_;
};

/// All phi(p^e) characters, index 0 first (the trivial character).
inline std::vector<DirichletCharacter> character_table(std::int64_t p, int e)
{
    const auto group = character_group(p, e);
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(group->order));
    for (std::int64_t j = 0; j < group->order; ++j) {
        out.emplace_back(group, j);
    }
    return out;
}

/// Conductor exponent t with conductor p^t (t = 0 for the trivial character).
inline int conductor_exponent(const DirichletCharacter &chi)
{
    if (chi.is_trivial()) {
        return 0;
    }
    const int e = chi.level();
    return e - std::min(ordp_int(chi.index(), chi.p()), e - 1);
}

inline std::int64_t conductor(const DirichletCharacter &chi)
{
    return ipow(chi.p(), conductor_exponent(chi));
}

/// Exponent k with chi(a) = zeta_m^k, or nullopt when chi(a) = 0.
/// With `primitive`, chi is read as the primitive character modulo its conductor
/// (so the trivial character is 1 everywhere).
inline std::optional<std::int64_t> chi_exponent(const DirichletCharacter &chi, std::int64_t a, bool primitive = false)
{
    const auto &g = chi.group();
    if (primitive && chi.is_trivial()) {
        return 0;
    }
    if (mod(a, g.p) == 0) {
        return std::nullopt;
    }
    if (!primitive) {
        const auto ind = g.log[static_cast<std::size_t>(mod(a, g.modulus))];
        return chi.index() * ind % g.order;
    }
    // The generator of (Z/p^e)^* also generates (Z/p^t)^*, so the level-t log is the
    // level-e log of any lift, taken modulo phi(p^t).
    const int t = conductor_exponent(chi);
    const auto small_modulus = ipow(g.p, t);
    const auto small_order = small_modulus / g.p * (g.p - 1);
    const auto ind = g.log[static_cast<std::size_t>(mod(a, small_modulus))] % small_order;
    return static_cast<std::int64_t>(static_cast<__int128>(chi.index()) * ind % g.order);
}

/// chi(a) in Q(zeta_m), m = phi(p^e).
inline CycElement chi_eval(const DirichletCharacter &chi, std::int64_t a, bool primitive = false)
{
    const auto k = chi_exponent(chi, a, primitive);
    if (!k) {
        return CycElement(chi.value_order());
    }
    return root_of_unity_power(chi.value_order(), *k);
}

/// Odd iff chi(-1) = -1. Checked against (-1)^j from the cyclic construction.
inline Parity parity(const DirichletCharacter &chi)
{
    const auto minus_one = chi_eval(chi, -1);
    const auto expected = chi.index() % 2 == 0 ? Parity::even : Parity::odd;
    const auto observed_sign = as_rational(minus_one);
    const auto observed = observed_sign == Rational(1) ? Parity::even : Parity::odd;
    if (observed != expected || (observed == Parity::odd && observed_sign != Rational(-1))) {
        throw consistency_error("parity: chi_j(-1) disagrees with (-1)^j");
    }
    return observed;
}

} // namespace eulerlab

#endif
