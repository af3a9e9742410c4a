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

#ifndef EULERLAB_CACHE_HPP
#define EULERLAB_CACHE_HPP

// On-disk cache of h^-_{n,2} results, one JSON file per (p, n). Files are written to a
// temporary name and renamed into place, so readers never observe a partial record.

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <eulerlab/classnumber.hpp>
#include <eulerlab/json.hpp>

namespace eulerlab
{

inline constexpr const char *kCacheDirEnv = "EULERLAB_CACHE_DIR";

class HMinusCache
{
public:
    explicit HMinusCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// Cache rooted at $EULERLAB_CACHE_DIR, if set and non-empty.
    static std::optional<HMinusCache> from_environment()
    {
        const char *dir = std::getenv(kCacheDirEnv);
        if (dir == nullptr || *dir == '\0') {
            return std::nullopt;
        }
        return HMinusCache(dir);
    }

    const std::filesystem::path &directory() const noexcept
    {
        return dir_;
    }

    std::filesystem::path path_for(std::int64_t p, int n) const
    {
        return dir_ / ("h_minus_p" + std::to_string(p) + "_n" + std::to_string(n) + ".json");
    }

    std::optional<HMinusResult> load(std::int64_t p, int n) const
    {
        std::ifstream in(path_for(p, n));
        if (!in) {
            return std::nullopt;
        }
        HMinusResult record;
        try {
            record = json::decode_h_minus(nlohmann::json::parse(in));
        } catch (const std::exception &) {
            // unreadable entries are recomputed and overwritten
            return std::nullopt;
        }
        if (record.p != p || record.n != n) {
            return std::nullopt;
        }
        check_invariants(record);
        return record;
    }

    void store(const HMinusResult &r) const
    {
        std::filesystem::create_directories(dir_);
        static std::atomic<unsigned> counter{0};
        const auto target = path_for(r.p, r.n);
        auto tmp = target;
        tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << json::encode(r).dump(2) << '\n';
            if (!out) {
                throw std::runtime_error("cannot write cache file " + tmp.string());
            }
        }
        std::filesystem::rename(tmp, target);
    }

    HMinusResult get_or_compute(std::int64_t p, int n, const ClassNumberOptions &options = {}) const
    {
        if (auto hit = load(p, n)) {
            return *hit;
        }
        auto fresh = h_minus(p, n, options);
        store(fresh);
        return fresh;
    }

private:
    // A well-formed record that breaks the h^- invariants means the cache was not written by
    // this code path; replaying it silently would hide the problem.
    static void check_invariants(const HMinusResult &r)
    {
        int total = 0;
        for (const auto &[t, delta] : r.conductor_increments) {
            total += delta;
        }
        const bool ok = r.value.is_integer() && r.value.sign() > 0 && ordp_rational(r.value, r.p) == r.ordp &&
                        total == r.ordp && r.value == r.formula_value * Rational(r.sign_correction);
        if (!ok) {
            throw consistency_error("cached h^- record for p = " + std::to_string(r.p) + ", n = " +
                                    std::to_string(r.n) + " violates the h^- invariants");
        }
    }

    std::filesystem::path dir_;
};

} // namespace eulerlab

#endif
