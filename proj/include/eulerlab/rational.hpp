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

#ifndef EULERLAB_RATIONAL_HPP
#define EULERLAB_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include <eulerlab/errors.hpp>
#include <eulerlab/number_theory.hpp>

namespace eulerlab
{

/// Exact rational number, always stored in lowest terms with a positive denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(const mpz_class &v) : v_(v) {}
    explicit Rational(const mpq_class &v) : v_(v)
    {
        v_.canonicalize();
    }

    Rational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw domain_error("rational with zero denominator");
        }
        v_.get_num() = num;
        v_.get_den() = den;
        v_.canonicalize();
    }

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "num/den" or a bare integer; surrounding whitespace is not accepted.
    static Rational parse(std::string_view text)
    {
        const auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rational(mpz_class(std::string(text), 10));
            }
            return Rational(mpz_class(std::string(text.substr(0, slash)), 10),
                            mpz_class(std::string(text.substr(slash + 1)), 10));
        } catch (const std::invalid_argument &) {
            throw input_error("malformed rational: '" + std::string(text) + "'");
        }
    }

    const mpz_class &num() const noexcept
    {
        return v_.get_num();
    }
    const mpz_class &den() const noexcept
    {
        return v_.get_den();
    }
    const mpq_class &gmp() const noexcept
    {
        return v_;
    }

    bool is_zero() const noexcept
    {
        return sgn(v_) == 0;
    }
    bool is_integer() const noexcept
    {
        return v_.get_den() == 1;
    }
    int sign() const noexcept
    {
        return sgn(v_);
    }
    double to_double() const
    {
        return v_.get_d();
    }

    std::string to_string() const
    {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw domain_error("division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return cmp(a.v_, b.v_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q)
    {
        return os << q.to_string();
    }

    /// Integer power; negative exponents invert (zero base then throws).
    Rational pow(long exp) const
    {
        if (exp < 0) {
            return Rational(1) / pow(-exp);
        }
        Rational r;
        mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exp));
        mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exp));
        return r;
    }

private:
    mpq_class v_;
};

inline int ordp_integer(mpz_class n, std::int64_t p)
{
    if (n == 0) {
        throw domain_error("valuation of zero undefined");
    }
    const mpz_class pz(static_cast<long>(p));
    return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

/// p-adic valuation of a nonzero rational: q = p^v * (unit prime to p).
inline int ordp_rational(const Rational &q, std::int64_t p)
{
    require_odd_prime(p);
    if (q.is_zero()) {
        throw domain_error("valuation of zero undefined");
    }
    int v = ordp_integer(q.num(), p);
    if (q.den() != 1) {
        v -= ordp_integer(q.den(), p);
    }
    return v;
}

} // namespace eulerlab

#endif
