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

#ifndef EULERLAB_TOOLS_ACCEPTANCE_HPP
#define EULERLAB_TOOLS_ACCEPTANCE_HPP

// End-to-end acceptance checks: one [PASS]/[FAIL] line per criterion, with wall time and a short
// account of what was measured. Nothing here is loosened to force a green line.

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <eulerlab/eulerlab.hpp>

namespace eulerlab::acceptance
{

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

namespace detail
{

inline const std::vector<std::pair<std::int64_t, int>> &class_number_range()
{
    // every (p, n) with phi(p^{n+1}) <= 1000 for p in {3, 5, 7}
    static const std::vector<std::pair<std::int64_t, int>> range{{3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5},
                                                                 {5, 0}, {5, 1}, {5, 2}, {5, 3}, {7, 0}, {7, 1},
                                                                 {7, 2}};
    return range;
}

/// h^- results shared between criteria, computed once per run.
class HMinusTable
{
public:
    const HMinusResult &get(std::int64_t p, int n)
    {
        const auto key = std::make_pair(p, n);
        auto it = results_.find(key);
        if (it == results_.end()) {
            it = results_.emplace(key, h_minus(p, n)).first;
        }
        return it->second;
    }

private:
    std::map<std::pair<std::int64_t, int>, HMinusResult> results_;
};

inline std::string join(const std::vector<std::string> &parts, std::size_t limit = 8)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size() && i < limit; ++i) {
        os << (i ? ", " : "") << parts[i];
    }
    if (parts.size() > limit) {
        os << ", ... (" << parts.size() << " total)";
    }
    return os.str();
}

inline std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

template <typename Fn>
Outcome guarded(Fn &&fn)
{
    try {
        return fn();
    } catch (const consistency_error &e) {
        return {false, std::string("consistency error (exit 3): ") + e.what()};
    } catch (const std::exception &e) {
        return {false, std::string("exception: ") + e.what()};
    }
}

} // namespace detail

inline Outcome exact_class_numbers(detail::HMinusTable &table)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> wrong;
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{3, 0}, {3, 1}, {5, 0}}) {
        const auto &r = table.get(p, n);
        if (r.value != Rational(1)) {
            wrong.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) + " gave " + r.value.to_string());
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!wrong.empty()) {
        return {false, detail::join(wrong)};
    }
    return {seconds < 5.0, "h(3,0) = h(3,1) = h(5,0) = 1 in " + detail::sci(seconds) + " s (limit 5 s)"};
}

inline Outcome integrality_gate(detail::HMinusTable &table)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> largest;
    for (auto [p, n] : detail::class_number_range()) {
        const auto &r = table.get(p, n);
        if (!r.value.is_integer() || r.value.sign() <= 0) {
            return {false, "p=" + std::to_string(p) + " n=" + std::to_string(n) + " gave " + r.value.to_string()};
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << detail::class_number_range().size() << " values positive integers (p=3 n<=5, p=5 n<=3, p=7 n<=2) in "
       << detail::sci(seconds) << " s (limit 600 s)";
    return {seconds < 600.0, os.str()};
}

inline Outcome oracle_equivalence()
{
    std::vector<std::string> mismatches;
    std::size_t checked = 0;
    for (std::int64_t p : {3, 5, 7}) {
        for (int e = 1; e <= 3; ++e) {
            for (const auto &chi : character_table(p, e)) {
                ++checked;
                const auto sum = std::get<CycElement>(fermionic_sum(CharacterIntegrand{chi}, p, e));
                if (!(sum == generalized_euler_number(0, chi))) {
                    mismatches.push_back("p=" + std::to_string(p) + " e=" + std::to_string(e) +
                                         " j=" + std::to_string(chi.index()) +
                                         (chi.is_trivial() ? " (trivial)" : ""));
                }
            }
        }
    }
    if (mismatches.empty()) {
        return {true, std::to_string(checked) + " characters, exact equality"};
    }
    return {false, std::to_string(mismatches.size()) + " of " + std::to_string(checked) +
                       " characters differ: " + detail::join(mismatches)};
}

inline Outcome parity_law()
{
    std::vector<std::string> bad;
    std::size_t checked = 0;
    for (std::int64_t p : {3, 5, 7}) {
        for (int e = 1; e <= 3; ++e) {
            for (const auto &chi : character_table(p, e)) {
                if (chi.is_trivial()) {
                    continue;
                }
                ++checked;
                const bool zero = generalized_euler_number(0, chi).is_zero();
                if (zero != (parity(chi) == Parity::even)) {
                    bad.push_back("p=" + std::to_string(p) + " e=" + std::to_string(e) + " j=" +
                                  std::to_string(chi.index()));
                }
            }
        }
    }
    if (!bad.empty()) {
        return {false, detail::join(bad)};
    }
    return {true, std::to_string(checked) + " nontrivial characters: even -> 0, odd -> nonzero"};
}

inline Outcome telescoping(detail::HMinusTable &table)
{
    std::size_t checked = 0;
    for (auto [p, n] : detail::class_number_range()) {
        if (n == 0) {
            continue;
        }
        const int lhs = table.get(p, n).ordp - table.get(p, n - 1).ordp;
        const int rhs = ordp_rational(odd_product_by_conductor(p, n, n + 1), p);
        if (lhs != rhs) {
            return {false, "p=" + std::to_string(p) + " n=" + std::to_string(n) + ": " + std::to_string(lhs) +
                               " vs " + std::to_string(rhs)};
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " steps, ord_p differences equal the new-conductor slice"};
}

inline Outcome iwasawa_fit(detail::HMinusTable &table)
{
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 gen(20260416);
    std::uniform_int_distribution<long> dm(0, 3);
    std::uniform_int_distribution<long> dl(0, 5);
    std::uniform_int_distribution<long> dc(-5, 5);
    std::uniform_int_distribution<int> dp(0, 2);
    const std::int64_t primes[] = {3, 5, 7};
    for (int trial = 0; trial < 50; ++trial) {
        const long m = dm(gen);
        const long lambda = dl(gen);
        const long c = dc(gen);
        const auto p = primes[dp(gen)];
        std::vector<Rational> seq;
        for (int n = 0; n < 5; ++n) {
            seq.emplace_back(m * ipow(p, n) + lambda * n + c);
        }
        const auto fit = fit_affine_model(seq, p);
        if (!fit.stable || fit.m != Rational(m) || fit.lambda != Rational(lambda) || fit.c != Rational(c)) {
            return {false, "synthetic triple (" + std::to_string(m) + ", " + std::to_string(lambda) + ", " +
                               std::to_string(c) + ") at p=" + std::to_string(p) + " not recovered"};
        }
    }
    std::vector<int> seq;
    for (int n = 0; n <= 4; ++n) {
        seq.push_back(table.get(3, n).ordp);
    }
    const auto fit = fit_affine_model(seq, 3);
    std::ostringstream os;
    os << "50 synthetic triples recovered; p=3 ord sequence [";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        os << (i ? "," : "") << seq[i];
    }
    os << "] -> ";
    bool ok = true;
    if (fit.stable) {
        ok = fit.integral() && fit.predict(3, 4) == Rational(seq.back());
        os << "stable (m, lambda, c) = (" << fit.m.to_string() << ", " << fit.lambda.to_string() << ", "
           << fit.c.to_string() << ") from n0=" << fit.n0;
    } else {
        ok = fit.verdict == kVerdictNotReached;
        os << "'" << fit.verdict << "'";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    os << " in " << detail::sci(seconds) << " s";
    return {ok && seconds < 900.0, os.str()};
}

inline Outcome decomposition()
{
    std::ostringstream os;
    bool ok = true;
    double slowest = 0.0;
    for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{3, 0}, {3, 1}, {5, 0}}) {
        for (auto [s, cutoff, tol] : std::vector<std::tuple<double, std::int64_t, double>>{{2.0, 1000000, 1e-4},
                                                                                            {3.0, 100000, 1e-6}}) {
            const auto start = std::chrono::steady_clock::now();
            const auto report = verify_decomposition(s, p, n, cutoff, tol);
            const auto fault = verify_decomposition(s, p, n, cutoff, tol, true);
            const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            slowest = std::max(slowest, seconds);
            const bool good = report.pass && report.rel_error < tol && !fault.pass && seconds < 60.0;
            if (!good) {
                os << "p=" << p << " n=" << n << " s=" << s << " rel " << detail::sci(report.rel_error)
                   << (fault.pass ? " fault control passed; " : "; ");
            }
            ok = ok && good;
        }
    }
    if (ok) {
        os << "6 cases within tolerance, 6 injected faults rejected, slowest " << detail::sci(slowest) << " s";
    }
    return {ok, os.str()};
}

inline Outcome special_values()
{
    std::vector<std::string> failing;
    double worst = 0.0;
    for (const auto &chi : character_table(3, 2)) {
        const auto report = special_value_consistency(chi, 0.1, 10);
        worst = std::max(worst, report.abs_error);
        if (!(report.abs_error < 1e-8)) {
            failing.push_back("j=" + std::to_string(chi.index()) + " (f=" + std::to_string(conductor(chi)) +
                              ") |lhs-rhs|=" + detail::sci(report.abs_error));
        }
    }
    if (failing.empty()) {
        return {true, "6 characters mod 9, max |lhs-rhs| = " + detail::sci(worst)};
    }
    return {false, std::to_string(failing.size()) + " of 6 characters exceed 1e-8: " + detail::join(failing)};
}

inline Outcome polynomial_identities()
{
    for (std::size_t n = 0; n <= 20; ++n) {
        const auto e = euler_polynomial(n);
        if (!(e.compose_affine(-1, 1) == e * Rational(n % 2 == 0 ? 1 : -1))) {
            return {false, "reflection fails at n=" + std::to_string(n)};
        }
    }
    const Rational half(1, 2);
    for (std::size_t n = 0; n <= 15; ++n) {
        const auto b = bernoulli_polynomial(n + 1);
        const auto bridge = (b.compose_affine(half, half) - b.compose_affine(half, 0)) *
                            (Rational(2).pow(static_cast<long>(n) + 1) / Rational(static_cast<long>(n) + 1));
        if (!(bridge == euler_polynomial(n))) {
            return {false, "Bernoulli bridge fails at n=" + std::to_string(n)};
        }
    }
    return {true, "reflection n<=20 and Bernoulli bridge n<=15, exact"};
}

inline Outcome integral_convergence()
{
    for (std::size_t n = 0; n <= 6; ++n) {
        const auto target = bernoulli_polynomial(n)(0);
        int floor_log = 0;
        for (std::int64_t q = 3; q <= static_cast<std::int64_t>(n) + 1; q *= 3) {
            ++floor_log;
        }
        for (int depth = 1; depth <= 8; ++depth) {
            const auto diff = rational_value(volkenborn_sum(MonomialShift{n, 0}, 3, depth)) - target;
            if (!diff.is_zero() && ordp_rational(diff, 3) < depth - 1 - floor_log) {
                return {false, "Volkenborn floor fails at n=" + std::to_string(n) + " N=" + std::to_string(depth)};
            }
        }
    }
    const auto profile = convergence_profile(MonomialShift{1, 0}, SumKind::fermionic, 3, 8);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] != static_cast<int>(i) + 1) {
            return {false, "fermionic profile entry N=" + std::to_string(i + 1) + " is " + std::to_string(profile[i])};
        }
    }
    return {true, "Volkenborn floor n<=6 N<=8 holds; fermionic profile [1..7] matches"};
}

inline Outcome eta_relation()
{
    const auto a = verify_eta_relation(2.0, 1e-10);
    const auto b = verify_eta_relation(3.0, 1e-10);
    const auto c = verify_eta_relation({2.0, 1.0}, 1e-8);
    return {a.pass && b.pass && c.pass, "errors s=2: " + detail::sci(a.abs_error) + ", s=3: " +
                                            detail::sci(b.abs_error) + ", s=2+i: " + detail::sci(c.abs_error)};
}

/// Runs every criterion, printing one line each, and returns the individual results.
inline std::vector<CriterionResult> run_acceptance(std::ostream &out)
{
    detail::HMinusTable table;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"exact refined class numbers", [&] { return exact_class_numbers(table); }},
        {"integrality gate", [&] { return integrality_gate(table); }},
        {"oracle equivalence (fermionic sum = E_0)", oracle_equivalence},
        {"parity law", parity_law},
        {"telescoping valuations", [&] { return telescoping(table); }},
        {"Iwasawa fit", [&] { return iwasawa_fit(table); }},
        {"decomposition", decomposition},
        {"special values", special_values},
        {"polynomial identities", polynomial_identities},
        {"integral convergence", integral_convergence},
        {"eta relation", eta_relation},
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const auto outcome = detail::guarded(criteria[i].second);
        CriterionResult r;
        r.id = static_cast<int>(i) + 1;
        r.title = criteria[i].first;
        r.pass = outcome.pass;
        r.detail = outcome.detail;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.title << " -- " << r.detail
            << " [" << detail::sci(r.seconds) << " s]" << std::endl;
        results.push_back(std::move(r));
    }
    std::size_t passed = 0;
    for (const auto &r : results) {
        passed += r.pass ? 1 : 0;
    }
    out << "acceptance: " << passed << "/" << results.size() << " criteria passed" << std::endl;
    return results;
}

inline bool all_passed(const std::vector<CriterionResult> &results)
{
    for (const auto &r : results) {
        if (!r.pass) {
            return false;
        }
    }
    return true;
}

} // namespace eulerlab::acceptance

#endif
