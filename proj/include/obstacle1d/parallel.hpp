#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace obstacle1d {

// Reductions accumulate per fixed-size chunk, then sum the chunk partials in
// index order. The association is identical for the serial reference and for
// any OpenMP thread count, so results are bit-identical across all of them.
inline constexpr std::size_t reduce_chunk_size = 1024;

// Below this size the OpenMP variants fall back to the serial loop; the
// chunked association keeps the result unchanged.
inline constexpr std::size_t parallel_threshold = 1u << 15;

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

template <class Term>
double chunked_sum(std::size_t n, Term&& term) {
    double total = 0.0;
    for (std::size_t base = 0; base < n; base += reduce_chunk_size) {
        const std::size_t end = std::min(n, base + reduce_chunk_size);
        double partial = 0.0;
        for (std::size_t i = base; i < end; ++i) partial += term(i);
        total += partial;
    }
    return total;
}

template <class Fn>
void for_each_index(std::size_t n, Fn&& fn) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace serial

template <class Term>
double chunked_sum(std::size_t n, Term&& term) {
#ifdef _OPENMP
    if (n >= parallel_threshold) {
        const std::size_t n_chunks = (n + reduce_chunk_size - 1) / reduce_chunk_size;
        std::vector<double> partials(n_chunks, 0.0);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n_chunks); ++c) {
            const std::size_t base = static_cast<std::size_t>(c) * reduce_chunk_size;
            const std::size_t end = std::min(n, base + reduce_chunk_size);
            double partial = 0.0;
            for (std::size_t i = base; i < end; ++i) partial += term(i);
            partials[static_cast<std::size_t>(c)] = partial;
        }
        double total = 0.0;
        for (double p : partials) total += p;
        return total;
    }
#endif
    return serial::chunked_sum(n, term);
}

// Elementwise map; no reduction, so ordering never affects the values.
template <class Fn>
void for_each_index(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
    if (n >= parallel_threshold) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    serial::for_each_index(n, fn);
}

// Max of (φ - v)+ style scans; max is exact regardless of evaluation order.
template <class Term>
double chunked_max(std::size_t n, Term&& term) {
    double result = 0.0;
#ifdef _OPENMP
    if (n >= parallel_threshold) {
#pragma omp parallel for schedule(static) reduction(max : result)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
            const double t = term(static_cast<std::size_t>(i));
            if (t > result) result = t;
        }
        return result;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) {
        const double t = term(i);
        if (t > result) result = t;
    }
    return result;
}

}  // namespace obstacle1d
