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

#ifndef EULERLAB_JSON_HPP
#define EULERLAB_JSON_HPP

// JSON encodings shared by the CLI and the result cache. Rationals are "num/den" strings,
// cyclotomic values are {"m": m, "coeffs": ["num/den", ...]}.

#include <cmath>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include <eulerlab/analytic.hpp>
#include <eulerlab/characters.hpp>
#include <eulerlab/classnumber.hpp>
#include <eulerlab/cyclotomic.hpp>
#include <eulerlab/errors.hpp>
#include <eulerlab/euler.hpp>
#include <eulerlab/iwasawa.hpp>
#include <eulerlab/padics.hpp>
#include <eulerlab/rational.hpp>

namespace eulerlab::json
{

using nlohmann::json;

inline json encode(const Rational &q)
{
    return q.to_string();
}

inline Rational decode_rational(const json &j)
{
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    if (!j.is_string()) {
        throw input_error("expected a rational string");
    }
    return Rational::parse(j.get<std::string>());
}

inline json encode(const CycElement &z)
{
    json coeffs = json::array();
    for (const auto &c : z.coeffs()) {
        coeffs.push_back(c.to_string());
    }
    return {{"m", z.order()}, {"coeffs", std::move(coeffs)}};
}

inline CycElement decode_cyc(const json &j)
{
    std::vector<Rational> coeffs;
    for (const auto &c : j.at("coeffs")) {
        coeffs.push_back(decode_rational(c));
    }
    const auto m = j.at("m").get<std::int64_t>();
    const auto expected = CycElement(m).degree();
    if (coeffs.size() != expected) {
        throw input_error("CycElement record must carry phi(m) coefficients");
    }
    return CycElement::from_polynomial(m, std::move(coeffs));
}

inline json encode(const IntegralValue &v)
{
    return std::visit([](const auto &x) { return encode(x); }, v);
}

inline json encode(const RationalPolynomial &poly)
{
    return poly.to_strings();
}

inline json encode(const DirichletCharacter &chi)
{
    return {{"j", chi.index()},
            {"order", chi.order()},
            {"conductor", conductor(chi)},
            {"parity", std::string(to_string(parity(chi)))}};
}

inline json encode(const HMinusResult &r)
{
    json increments = json::array();
    for (const auto &[t, delta] : r.conductor_increments) {
        increments.push_back({t, delta});
    }
    return {{"p", r.p},
            {"n", r.n},
            {"h_minus", encode(r.value)},
            {"ordp", r.ordp},
            {"increments", std::move(increments)},
            {"characters", r.character_count},
            {"formula_value", encode(r.formula_value)},
            {"sign_correction", r.sign_correction}};
}

inline HMinusResult decode_h_minus(const json &j)
{
    HMinusResult r;
    r.p = j.at("p").get<std::int64_t>();
    r.n = j.at("n").get<int>();
    r.value = decode_rational(j.at("h_minus"));
    r.ordp = j.at("ordp").get<int>();
    for (const auto &inc : j.at("increments")) {
        r.conductor_increments.emplace_back(inc.at(0).get<int>(), inc.at(1).get<int>());
    }
    r.character_count = j.at("characters").get<std::int64_t>();
    r.formula_value = decode_rational(j.at("formula_value"));
    r.sign_correction = j.at("sign_correction").get<int>();
    return r;
}

inline json encode_rationals(const std::vector<Rational> &v)
{
    json out = json::array();
    for (const auto &q : v) {
        out.push_back(encode(q));
    }
    return out;
}

inline json encode(const IwasawaFit &fit)
{
    return {{"m", encode(fit.m)},
            {"lambda", encode(fit.lambda)},
            {"c", encode(fit.c)},
            {"n0", fit.n0},
            {"stable", fit.stable},
            {"integral", fit.integral()},
            {"verdict", fit.verdict},
            {"residuals", encode_rationals(fit.residuals)}};
}

inline json encode_double(double v)
{
    if (std::isnan(v) || std::isinf(v)) {
        return nullptr;
    }
    return v;
}

inline json encode(complex z)
{
    return {{"re", encode_double(z.real())}, {"im", encode_double(z.imag())}};
}

inline json encode(const VerificationReport &r)
{
    json parts = json::array();
    for (const auto &part : r.parts) {
        parts.push_back(encode(part));
    }
    return {{"name", r.name},
            {"lhs", encode(r.lhs)},
            {"rhs", encode(r.rhs)},
            {"abs_error", encode_double(r.abs_error)},
            {"rel_error", encode_double(r.rel_error)},
            {"tolerance", encode_double(r.tolerance)},
            {"pass", r.pass},
            {"parameters", r.parameters},
            {"parts", std::move(parts)}};
}

} // namespace eulerlab::json

#endif
