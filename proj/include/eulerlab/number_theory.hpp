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

#ifndef EULERLAB_NUMBER_THEORY_HPP
#define EULERLAB_NUMBER_THEORY_HPP

// Machine-word number theory helpers: primality, modular powers, orders.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <eulerlab/errors.hpp>

namespace eulerlab
{

inline bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline void require_odd_prime(std::int64_t p)
{
    if (p == 2 || !is_prime(p)) {
        throw input_error("p must be an odd prime (got " + std::to_string(p) + ")");
    }
}

inline std::int64_t ipow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
    }
    return r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const auto r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m)
{
    __int128 result = 1 % m;
    __int128 b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

inline std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t r = n;
    for (auto q : prime_divisors(n)) {
        r = r / q * (q - 1);
    }
    return r;
}

/// Order of a in (Z/modulus)^*, given a multiple `group_order` of it. Requires gcd(a, modulus) = 1.
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t modulus, std::int64_t group_order)
{
    if (std::gcd(mod(a, modulus), modulus) != 1) {
        throw input_error("multiplicative_order: a is not a unit");
    }
    auto order = group_order;
    for (auto q : prime_divisors(group_order)) {
        while (order % q == 0 && powmod(a, order / q, modulus) == 1) {
            order /= q;
        }
    }
    return order;
}

inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t modulus)
{
    return multiplicative_order(a, modulus, euler_phi(modulus));
}

/// v_p(n) for a machine integer n != 0.
inline int ordp_int(std::int64_t n, std::int64_t p)
{
    int v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// Sieve of Eratosthenes, primes <= limit in ascending order.
inline std::vector<std::int64_t> primes_up_to(std::int64_t limit)
{
    std::vector<std::int64_t> primes;
    if (limit < 2) {
        return primes;
    }
    std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return primes;
}

} // namespace eulerlab

#endif
