#pragma once

// Data-parallel reduction kernels.
//
// Every hot loop in the library (quadrature terms, Coulomb sample sums,
// per-source force contributions) reduces through blocked_sum /
// blocked_sum_vec3. Terms are accumulated serially inside fixed-size blocks
// and block totals are folded serially in block order, so the floating-point
// association is fixed by the block size alone: results are bit-identical
// for any thread count, including 1. blocked_sum_serial is the reference
// implementation with the same association and no OpenMP; tests assert exact
// equality between the two, and the benchmark compares their throughput.

#include <cstdint>
#include <vector>

#include "acdual/vec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace acdual {

struct ExecPolicy {
    /// 0 = resolve from ACD_THREADS (which itself defaults to all cores).
    int threads{0};
};

/// Number of OpenMP threads a policy resolves to. Honors ACD_THREADS
/// (0 = auto) when the policy does not pin a count.
int resolve_threads(const ExecPolicy& policy);

inline constexpr std::int64_t kBlockSize = 512;

namespace detail {
inline std::int64_t block_count(std::int64_t n) {
    return (n + kBlockSize - 1) / kBlockSize;
}
}  // namespace detail

template <typename Term>
double blocked_sum_serial(std::int64_t n, Term&& term) {
    const std::int64_t nblocks = detail::block_count(n);
    double total = 0.0;
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t lo = b * kBlockSize;
        const std::int64_t hi = (lo + kBlockSize < n) ? lo + kBlockSize : n;
        double partial = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) partial += term(i);
        total += partial;
    }
    return total;
}

template <typename Term>
Vec3 blocked_sum_vec3_serial(std::int64_t n, Term&& term) {
    const std::int64_t nblocks = detail::block_count(n);
    Vec3 total{};
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t lo = b * kBlockSize;
        const std::int64_t hi = (lo + kBlockSize < n) ? lo + kBlockSize : n;
        Vec3 partial{};
        for (std::int64_t i = lo; i < hi; ++i) partial += term(i);
        total += partial;
    }
    return total;
}

template <typename Term>
double blocked_sum(std::int64_t n, Term&& term, const ExecPolicy& policy = {}) {
    const std::int64_t nblocks = detail::block_count(n);
    if (nblocks <= 1) return blocked_sum_serial(n, term);
    std::vector<double> partials(static_cast<std::size_t>(nblocks), 0.0);
#ifdef _OPENMP
    const int nthreads = resolve_threads(policy);
#pragma omp parallel for schedule(static) num_threads(nthreads)
#else
    (void)policy;
#endif
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t lo = b * kBlockSize;
        const std::int64_t hi = (lo + kBlockSize < n) ? lo + kBlockSize : n;
        double partial = 0.0;
        for (std::int64_t i = lo; i < hi; ++i) partial += term(i);
        partials[static_cast<std::size_t>(b)] = partial;
    }
    double total = 0.0;
    for (double p : partials) total += p;
    return total;
}

template <typename Term>
Vec3 blocked_sum_vec3(std::int64_t n, Term&& term, const ExecPolicy& policy = {}) {
    const std::int64_t nblocks = detail::block_count(n);
    if (nblocks <= 1) return blocked_sum_vec3_serial(n, term);
    std::vector<Vec3> partials(static_cast<std::size_t>(nblocks));
#ifdef _OPENMP
    const int nthreads = resolve_threads(policy);
#pragma omp parallel for schedule(static) num_threads(nthreads)
#else
    (void)policy;
#endif
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t lo = b * kBlockSize;
        const std::int64_t hi = (lo + kBlockSize < n) ? lo + kBlockSize : n;
        Vec3 partial{};
        for (std::int64_t i = lo; i < hi; ++i) partial += term(i);
        partials[static_cast<std::size_t>(b)] = partial;
    }
    Vec3 total{};
    for (const Vec3& p : partials) total += p;
    return total;
}

}  // namespace acdual
