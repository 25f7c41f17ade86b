// Deterministic reductions over indexed tuple spaces.
//
// Every exhaustive search in the toolkit is a loop over an index range
// [0, count) where each index decodes to a tuple of field elements. The
// kernels below compute the lexicographically-least argmax of a score over
// that range. The OpenMP kernel and the serial reference must agree on every
// input; the result never depends on thread count or scheduling.
#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "blowup/gf.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blowup {

class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Exec { parallel, serial };

struct SearchConfig {
    /// Largest tuple count an exhaustive search may enumerate.
    std::uint64_t cap = std::uint64_t{1} << 24;
    /// Number of samples for randomized searches.
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;
    /// 0 = all available hardware threads.
    int threads = 0;
    Exec exec = Exec::parallel;
};

struct ArgMax {
    std::int64_t score = -1;
    std::uint64_t index = 0;
    /// Logical number of tuples covered: count, or (hit index + 1) when the
    /// ceiling was reached.
    std::uint64_t checked = 0;
    bool found() const { return score >= 0; }
};

/// q^exponent, or nullopt on overflow past 2^63.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t q, std::uint64_t exponent) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (q != 0 && out > (std::numeric_limits<std::uint64_t>::max() >> 1) / q) return std::nullopt;
        out *= q;
    }
    return out;
}

/// Decodes `index` as an odometer over q symbols; the first entry is the
/// least significant digit.
inline void decode_tuple(std::uint64_t index, std::uint32_t q, std::span<FieldElement> out) {
    for (auto& e : out) {
        e = FieldElement{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
}

/// Counter-based generator: the value for (seed, counter) is fixed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform tuple for random sample `sample` of the stream keyed by `seed`.
inline void random_tuple(std::uint64_t seed, std::uint64_t sample, std::uint32_t q,
                         std::span<FieldElement> out) {
    std::uint64_t state = splitmix64(seed ^ splitmix64(sample));
    for (std::size_t j = 0; j < out.size(); ++j) {
        std::uint64_t x = splitmix64(state + j);
        out[j] = FieldElement{static_cast<std::uint32_t>(x % q)};
    }
}

/// Serial reference. `make_eval()` returns a callable `int64(uint64 index)`.
template <class MakeEval>
ArgMax argmax_serial(std::uint64_t count, MakeEval&& make_eval,
                     std::optional<std::int64_t> ceiling = std::nullopt) {
    auto eval = make_eval();
    ArgMax best;
    best.checked = count;
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::int64_t s = eval(i);
        if (s > best.score) {
            best.score = s;
            best.index = i;
        }
        if (ceiling && s >= *ceiling) {
            best.checked = i + 1;
            break;
        }
    }
    return best;
}

/// OpenMP kernel. Each thread keeps a private best; the merge takes the max
/// score, then the least index. Once some index reaches the ceiling, larger
/// indices are skipped; all smaller ones are still evaluated, so the result
/// equals the serial reference.
template <class MakeEval>
ArgMax argmax_parallel(std::uint64_t count, MakeEval&& make_eval,
                       std::optional<std::int64_t> ceiling = std::nullopt, int threads = 0) {
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
    std::atomic<std::uint64_t> cutoff{count};
    ArgMax best;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(threads)
    {
        auto eval = make_eval();
        ArgMax local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t si = 0; si < n; ++si) {
            const auto i = static_cast<std::uint64_t>(si);
            if (i >= cutoff.load(std::memory_order_relaxed)) continue;
            const std::int64_t s = eval(i);
            if (s > local.score || (s == local.score && i < local.index)) {
                local.score = s;
                local.index = i;
            }
            if (ceiling && s >= *ceiling) {
                std::uint64_t cur = cutoff.load(std::memory_order_relaxed);
                while (i + 1 < cur && !cutoff.compare_exchange_weak(cur, i + 1)) {
                }
            }
        }
#pragma omp critical(blowup_argmax_merge)
        {
            if (local.score > best.score ||
                (local.score == best.score && local.found() && local.index < best.index)) {
                best.score = local.score;
                best.index = local.index;
            }
        }
    }
    best.checked = cutoff.load();
    return best;
#else
    (void)threads;
    return argmax_serial(count, std::forward<MakeEval>(make_eval), ceiling);
#endif
}

template <class MakeEval>
ArgMax run_argmax(const SearchConfig& cfg, std::uint64_t count, MakeEval&& make_eval,
                  std::optional<std::int64_t> ceiling = std::nullopt) {
    if (cfg.exec == Exec::serial) return argmax_serial(count, make_eval, ceiling);
    return argmax_parallel(count, make_eval, ceiling, cfg.threads);
}

/// Least index whose predicate holds; `make_pred()` returns `bool(uint64)`.
template <class MakePred>
std::optional<std::uint64_t> find_first(const SearchConfig& cfg, std::uint64_t count,
                                        MakePred&& make_pred, std::uint64_t* checked = nullptr) {
    auto make_eval = [&] {
        return [pred = make_pred()](std::uint64_t i) mutable -> std::int64_t {
            return pred(i) ? 1 : 0;
        };
    };
    ArgMax r = run_argmax(cfg, count, make_eval, std::int64_t{1});
    if (checked) *checked = r.checked;
    if (r.score == 1) return r.index;
    return std::nullopt;
}

/// Throws SearchError when q^exponent exceeds the cap.
inline std::uint64_t require_within_cap(std::uint64_t q, std::uint64_t exponent,
                                        std::uint64_t cap, const std::string& what) {
    auto n = checked_pow(q, exponent);
    if (!n || *n > cap)
        throw SearchError(what + ": " + std::to_string(q) + "^" + std::to_string(exponent) +
                          " tuples exceeds the exhaustive cap of " + std::to_string(cap));
    return *n;
}

}  // namespace blowup
