#pragma once

#include <cstdint>
#include <random>
#include <vector>

#ifdef ULTRASTAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace ultrastab {

/// Per-sample RNG stream: derived from (seed, index) alone, so serial and
/// parallel execution see identical randomness and any schedule produces the
/// same aggregate.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z = z ^ (z >> 31);
    return std::mt19937_64(z);
}

struct SweepResult {
    std::size_t samples = 0;
    std::size_t failures = 0;
    std::size_t first_failure = 0;  // == samples when none

    bool all_passed() const { return failures == 0; }

    void absorb_failure(std::size_t index) {
        ++failures;
        if (index < first_failure) first_failure = index;
    }

    SweepResult& merge(const SweepResult& o) {
        failures += o.failures;
        if (o.first_failure < first_failure) first_failure = o.first_failure;
        return *this;
    }
};

/// Serial reference. fn(index, rng) -> pass/fail.
template <class Fn>
SweepResult sweep_serial(std::size_t n, std::uint64_t seed, Fn&& fn) {
    SweepResult r;
    r.samples = n;
    r.first_failure = n;
    for (std::size_t i = 0; i < n; ++i) {
        auto rng = sample_rng(seed, i);
        if (!fn(i, rng)) r.absorb_failure(i);
    }
    return r;
}

/// Data-parallel twin of sweep_serial; same counts, same first failure,
/// because streams are per-sample and the reduction is order-independent.
template <class Fn>
SweepResult sweep_parallel(std::size_t n, std::uint64_t seed, Fn&& fn) {
#ifdef ULTRASTAB_HAVE_OPENMP
    SweepResult total;
    total.samples = n;
    total.first_failure = n;
#pragma omp parallel
    {
        SweepResult local;
        local.samples = 0;
        local.first_failure = n;
#pragma omp for schedule(dynamic, 8) nowait
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
            if (!fn(static_cast<std::size_t>(i), rng)) {
                local.absorb_failure(static_cast<std::size_t>(i));
            }
        }
#pragma omp critical
        total.merge(local);
    }
    return total;
#else
    return sweep_serial(n, seed, std::forward<Fn>(fn));
#endif
}

/// Generic order-independent reduction over per-sample values.
/// fn(index, rng) -> T; combine(T, T) -> T must be associative/commutative.
template <class T, class Fn, class Combine>
T sweep_reduce_serial(std::size_t n, std::uint64_t seed, T init, Fn&& fn, Combine&& combine) {
    T acc = init;
    for (std::size_t i = 0; i < n; ++i) {
        auto rng = sample_rng(seed, i);
        acc = combine(acc, fn(i, rng));
    }
    return acc;
}

template <class T, class Fn, class Combine>
T sweep_reduce_parallel(std::size_t n, std::uint64_t seed, T init, Fn&& fn, Combine&& combine) {
#ifdef ULTRASTAB_HAVE_OPENMP
    T total = init;
#pragma omp parallel
    {
        T local = init;
#pragma omp for schedule(dynamic, 8) nowait
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
            local = combine(local, fn(static_cast<std::size_t>(i), rng));
        }
#pragma omp critical
        total = combine(total, local);
    }
    return total;
#else
    return sweep_reduce_serial(n, seed, std::move(init), std::forward<Fn>(fn),
                               std::forward<Combine>(combine));
#endif
}

}  // namespace ultrastab
