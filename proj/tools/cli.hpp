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

#ifndef EULERLAB_TOOLS_CLI_HPP
#define EULERLAB_TOOLS_CLI_HPP

// Command-line front end. Every command writes one JSON (or CSV) artifact to `out`; diagnostics
// go to `err`. Exit codes: 0 success, 1 verification failed (report still written), 2 caller
// error, 3 internal consistency failure.

#include <complex>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <eulerlab/eulerlab.hpp>

#include "acceptance.hpp"

namespace eulerlab::cli
{

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitConsistencyError = 3;

/// Accepts "2", "-0.5", "2+1i", "2-i", "1e-3+2.5i".
inline complex parse_complex(const std::string &text)
{
    static const std::regex pattern(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) {
        throw input_error("cannot parse complex number '" + text + "'");
    }
    const double re = std::stod(m[1].str());
    double im = 0.0;
    if (m[2].matched) {
        im = m[3].matched ? std::stod(m[3].str()) : 1.0;
        if (m[2].str() == "-") {
            im = -im;
        }
    }
    return {re, im};
}

namespace detail
{

using Json = nlohmann::json;
namespace codec = eulerlab::json;

inline void emit(std::ostream &out, const Json &j)
{
    out << j.dump(2) << '\n';
}

inline void require_level(int level)
{
    if (level < 1) {
        throw input_error("level e must be >= 1");
    }
}

inline void require_nonnegative(long value, const char *name)
{
    if (value < 0) {
        throw input_error(std::string(name) + " must be >= 0");
    }
}

inline void require_positive(long value, const char *name)
{
    if (value < 1) {
        throw input_error(std::string(name) + " must be >= 1");
    }
}

inline int report_exit(std::ostream &out, const VerificationReport &report)
{
    emit(out, codec::encode(report));
    return report.pass ? kExitOk : kExitVerificationFailed;
}

/// A sequence file holds either [v0, v1, ...] or {"first_n": k, "values": [...]}; entries are
/// integers or "num/den" strings.
inline std::pair<std::vector<Rational>, int> read_sequence(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open sequence file " + path);
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw input_error("sequence file is not valid JSON: " + std::string(e.what()));
    }
    int first_n = 0;
    const Json *values = &doc;
    if (doc.is_object()) {
        first_n = doc.value("first_n", 0);
        if (!doc.contains("values")) {
            throw input_error("sequence file object needs a \"values\" array");
        }
        values = &doc.at("values");
    }
    if (!values->is_array()) {
        throw input_error("sequence file must hold an array of values");
    }
    std::vector<Rational> seq;
    for (const auto &v : *values) {
        seq.push_back(codec::decode_rational(v));
    }
    return {seq, first_n};
}

} // namespace detail

inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    using detail::emit;
    using Json = nlohmann::json;
    namespace codec = eulerlab::json;

    CLI::App app{"Exact generalized Euler numbers, refined relative class numbers and Iwasawa fits", "eulerlab-cli"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::int64_t p = 0;
    int level = 1;
    std::int64_t index = 0;
    int n = 0;
    int nmax = 0;
    std::string format = "json";
    std::string s_text = "2";
    double tol = 1e-10;

    auto *characters = app.add_subcommand("characters", "List the characters modulo p^e");
    characters->add_option("--p", p, "odd prime")->required();
    characters->add_option("--level", level, "level e (modulus p^e)")->required();
    characters->add_option("--format", format, "Json or csv")->check(CLI::IsMember({"json", "csv"}));

    bool bernoulli = false;
    auto *euler_poly = app.add_subcommand("euler-poly", "Coefficients of E_n(x), ascending degree");
    euler_poly->add_option("--n", n, "degree")->required();
    euler_poly->add_flag("--bernoulli", bernoulli, "emit B_n(x) instead");

    auto *gen_euler = app.add_subcommand("gen-euler", "Generalized Euler number E_{n,chi}");
    gen_euler->add_option("--p", p, "odd prime")->required();
    gen_euler->add_option("--level", level, "level e")->required();
    gen_euler->add_option("--index", index, "character index j")->required();
    gen_euler->add_option("--n", n, "order n")->required();

    std::string kind = "fermionic";
    std::string integrand = "monomial";
    std::string x_text = "0";
    std::string c_text = "1";
    int depth = 1;
    auto *integrate = app.add_subcommand("integrate", "Volkenborn / fermionic Riemann sums and their ord_p profile");
    integrate->add_option("--kind", kind, "volkenborn or fermionic")->check(CLI::IsMember({"volkenborn", "fermionic"}));
    integrate->add_option("--integrand", integrand, "monomial, character, character-power or constant")
        ->check(CLI::IsMember({"monomial", "character", "character-power", "constant"}));
    integrate->add_option("--p", p, "odd prime")->required();
    integrate->add_option("--n", n, "exponent n");
    integrate->add_option("--x", x_text, "shift x (rational)");
    integrate->add_option("--c", c_text, "constant value (rational)");
    integrate->add_option("--level", level, "character level e");
    integrate->add_option("--index", index, "character index j");
    integrate->add_option("--depth", depth, "depth N (p^N summands)")->required();

    std::optional<std::string> json_path;
    std::optional<std::string> cache_dir;
    unsigned threads = 0;
    std::int64_t max_order = ClassNumberOptions{}.max_group_order;
    auto *hminus = app.add_subcommand("h-minus", "Refined relative class numbers h^-_{n,2}, n = 0..nmax");
    hminus->add_option("--p", p, "odd prime")->required();
    hminus->add_option("--nmax", nmax, "largest n")->required();
    hminus->add_option("--json", json_path, "also write the JSON artifact to this path");
    hminus->add_option("--format", format, "Json or csv")->check(CLI::IsMember({"json", "csv"}));
    hminus->add_option("--cache-dir", cache_dir, std::string("result cache (default $") + kCacheDirEnv + ")");
    hminus->add_option("--threads", threads, "worker threads (0 = hardware)");
    hminus->add_option("--max-order", max_order, "bound on phi(p^{n+1})");

    std::optional<std::string> from_file;
    int first_n = 0;
    auto *fit = app.add_subcommand("fit", "Fit ord_p h^- = m p^n + lambda n + c");
    fit->add_option("--p", p, "odd prime")->required();
    auto *fit_nmax = fit->add_option("--nmax", nmax, "fit ord_p h^-_{n,2} for n = 0..nmax");
    auto *fit_file = fit->add_option("--from-file", from_file, "JSON sequence file");
    fit_nmax->excludes(fit_file);
    fit_file->excludes(fit_nmax);
    fit->add_option("--first-n", first_n, "n of the first value read from a file without first_n");

    auto *two_part = app.add_subcommand("two-part", "ord_p((2^f - 1)^r) for n = 0..nmax");
    two_part->add_option("--p", p, "odd prime")->required();
    two_part->add_option("--nmax", nmax, "largest n")->required();
    two_part->add_option("--format", format, "Json or csv")->check(CLI::IsMember({"json", "csv"}));

    std::int64_t cutoff = 100000;
    bool inject_fault = false;
    auto *decomposition = app.add_subcommand("verify-decomposition", "Euler product against prod (1/2) L_E(s, chi)");
    decomposition->add_option("--p", p, "odd prime")->required();
    decomposition->add_option("--level", level, "level e = n + 1")->required();
    decomposition->add_option("--s", s_text, "complex s with Re(s) > 1")->required();
    decomposition->add_option("--prime-cutoff", cutoff, "largest prime in the Euler product");
    decomposition->add_option("--tol", tol, "relative tolerance");
    decomposition->add_flag("--inject-fault", inject_fault, "negative control: flip the T-factor");

    double t = 0.1;
    int order = 10;
    auto *special = app.add_subcommand("verify-special-values", "Generating function against sum E_{j,chi} (-t)^j / j!");
    special->add_option("--p", p, "odd prime")->required();
    special->add_option("--level", level, "level e")->required();
    special->add_option("--index", index, "character index j")->required();
    special->add_option("--t", t, "0 < t <= 0.2");
    special->add_option("--order", order, "truncation order J <= 12");

    auto *eta = app.add_subcommand("verify-eta", "Alternating zeta against (1 - 2^{1-s}) zeta(s)");
    eta->add_option("--s", s_text, "complex s with Re(s) > 1")->required();
    eta->add_option("--tol", tol, "tolerance");

    auto *selftest = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return kExitOk;
        }
        err << app.help();
        return kExitInputError;
    }

    try {
        if (*characters) {
            require_odd_prime(p);
            detail::require_level(level);
            const auto table = character_table(p, level);
            if (format == "csv") {
                out << "j,order,conductor,parity\n";
                for (const auto &chi : table) {
                    out << chi.index() << ',' << chi.order() << ',' << conductor(chi) << ','
                        << to_string(parity(chi)) << '\n';
                }
            } else {
                Json list = Json::array();
                for (const auto &chi : table) {
                    list.push_back(codec::encode(chi));
                }
                emit(out, {{"p", p}, {"level", level}, {"modulus", ipow(p, level)}, {"characters", list}});
            }
            return kExitOk;
        }
        if (*euler_poly) {
            detail::require_nonnegative(n, "n");
            const auto poly = bernoulli ? bernoulli_polynomial(static_cast<std::size_t>(n))
                                        : euler_polynomial(static_cast<std::size_t>(n));
            emit(out, {{"n", n}, {"kind", bernoulli ? "bernoulli" : "euler"}, {"coeffs", codec::encode(poly)}});
            return kExitOk;
        }
        if (*gen_euler) {
            require_odd_prime(p);
            detail::require_level(level);
            detail::require_nonnegative(n, "n");
            const DirichletCharacter chi(p, level, index);
            const auto value = generalized_euler_number(static_cast<std::size_t>(n), chi);
            Json rational = nullptr;
            try {
                rational = codec::encode(as_rational(value));
            } catch (const not_rational_error &) {
            }
            emit(out, {{"p", p},
                       {"level", level},
                       {"index", index},
                       {"n", n},
                       {"conductor", conductor(chi)},
                       {"parity", std::string(to_string(parity(chi)))},
                       {"value", codec::encode(value)},
                       {"rational", rational}});
            return kExitOk;
        }
        if (*integrate) {
            require_odd_prime(p);
            detail::require_positive(depth, "depth");
            detail::require_nonnegative(n, "n");
            IntegrandSpec spec = Constant{Rational::parse(c_text)};
            if (integrand == "monomial") {
                spec = MonomialShift{static_cast<std::size_t>(n), Rational::parse(x_text)};
            } else if (integrand == "character") {
                detail::require_level(level);
                spec = CharacterIntegrand{DirichletCharacter(p, level, index)};
            } else if (integrand == "character-power") {
                detail::require_level(level);
                spec = CharacterPower{DirichletCharacter(p, level, index), static_cast<std::size_t>(n)};
            }
            const auto sum_kind = kind == "volkenborn" ? SumKind::volkenborn : SumKind::fermionic;
            const auto value = riemann_sum(spec, sum_kind, p, depth);
            Json profile = nullptr;
            bool rational_valued = std::holds_alternative<Rational>(value);
            if (!rational_valued) {
                try {
                    as_rational(std::get<CycElement>(value));
                    rational_valued = true;
                } catch (const not_rational_error &) {
                }
            }
            if (rational_valued) {
                profile = Json::array();
                for (int v : convergence_profile(spec, sum_kind, p, depth)) {
                    profile.push_back(v == kExactZeroSentinel ? Json("exact") : Json(v));
                }
            }
            emit(out, {{"kind", kind},
                       {"integrand", integrand},
                       {"p", p},
                       {"depth", depth},
                       {"value", codec::encode(value)},
                       {"profile", profile}});
            return kExitOk;
        }
        if (*hminus) {
            require_odd_prime(p);
            detail::require_nonnegative(nmax, "nmax");
            ClassNumberOptions options;
            options.threads = threads;
            options.max_group_order = max_order;
            std::optional<HMinusCache> cache =
                cache_dir ? std::optional<HMinusCache>(HMinusCache(*cache_dir)) : HMinusCache::from_environment();
            Json results = Json::array();
            std::vector<HMinusResult> rows;
            for (int k = 0; k <= nmax; ++k) {
                rows.push_back(cache ? cache->get_or_compute(p, k, options) : h_minus(p, k, options));
                results.push_back(codec::encode(rows.back()));
            }
            const Json doc{{"p", p}, {"nmax", nmax}, {"results", results}};
            if (json_path) {
                std::ofstream file(*json_path);
                if (!file) {
                    throw input_error("cannot write " + *json_path);
                }
                file << doc.dump(2) << '\n';
            }
            if (format == "csv") {
                out << "n,h_minus,ordp,characters\n";
                for (const auto &r : rows) {
                    out << r.n << ',' << r.value.to_string() << ',' << r.ordp << ',' << r.character_count << '\n';
                }
            } else {
                emit(out, doc);
            }
            return kExitOk;
        }
        if (*fit) {
            require_odd_prime(p);
            std::vector<Rational> seq;
            int start = first_n;
            if (from_file) {
                auto [values, file_first] = detail::read_sequence(*from_file);
                seq = std::move(values);
                if (file_first != 0) {
                    start = file_first;
                }
            } else if (*fit_nmax) {
                detail::require_nonnegative(nmax, "nmax");
                for (int v : ordp_h_minus_sequence(p, nmax)) {
                    seq.emplace_back(v);
                }
                start = 0;
            } else {
                throw input_error("fit needs --nmax or --from-file");
            }
            auto doc = codec::encode(fit_affine_model(seq, p, start));
            doc["p"] = p;
            doc["first_n"] = start;
            doc["sequence"] = codec::encode_rationals(seq);
            emit(out, doc);
            return kExitOk;
        }
        if (*two_part) {
            require_odd_prime(p);
            detail::require_nonnegative(nmax, "nmax");
            Json valuations = Json::array();
            Json details = Json::array();
            if (format == "csv") {
                out << "n,f,r,valuation\n";
            }
            for (int k = 0; k <= nmax; ++k) {
                const auto d = two_part_detail(p, k);
                valuations.push_back(d.valuation);
                details.push_back({{"n", k}, {"f", d.residue_degree}, {"r", d.splitting}, {"valuation", d.valuation}});
                if (format == "csv") {
                    out << k << ',' << d.residue_degree << ',' << d.splitting << ',' << d.valuation << '\n';
                }
            }
            if (format != "csv") {
                emit(out, {{"p", p}, {"valuations", valuations}, {"details", details}});
            }
            return kExitOk;
        }
        if (*decomposition) {
            require_odd_prime(p);
            detail::require_level(level);
            detail::require_positive(static_cast<long>(cutoff), "prime-cutoff");
            return detail::report_exit(
                out, verify_decomposition(parse_complex(s_text), p, level - 1, cutoff, tol, inject_fault));
        }
        if (*special) {
            require_odd_prime(p);
            detail::require_level(level);
            return detail::report_exit(out, special_value_consistency(DirichletCharacter(p, level, index), t, order));
        }
        if (*eta) {
            return detail::report_exit(out, verify_eta_relation(parse_complex(s_text), tol));
        }
        if (*selftest) {
            const auto results = acceptance::run_acceptance(out);
            return acceptance::all_passed(results) ? kExitOk : kExitVerificationFailed;
        }
    } catch (const consistency_error &e) {
        err << "consistency error: " << e.what() << '\n';
        return kExitConsistencyError;
    } catch (const input_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const resource_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitConsistencyError;
    }
    err << app.help();
    return kExitInputError;
}

} // namespace eulerlab::cli

#endif
