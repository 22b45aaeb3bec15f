#pragma once

#include <vector>

#include "obstacle1d/mesh.hpp"
#include "obstacle1d/parallel.hpp"

namespace obstacle1d {

// All integrands here are piecewise polynomials of the mesh, so every
// formula below is exact up to roundoff.

// Per-element derivative of a nodal function.
std::vector<double> element_derivative(const Mesh& mesh, const std::vector<double>& v);

namespace kernels {

// ∫ g^2 for nodal-linear g given endpoint values per element.
template <class Sum>
double l2sq_linear(Sum sum, const Mesh& m, const std::vector<double>& g) {
    return sum(m.element_count(), [&](std::size_t e) {
        const double gl = g[e], gr = g[e + 1];
        return m.h(e) / 3.0 * (gl * gl + gl * gr + gr * gr);
    });
}

// ∫ (c + g)^2 with c piecewise constant and g nodal-linear.
template <class Sum>
double l2sq_const_plus_linear(Sum sum, const Mesh& m, const std::vector<double>& c,
                              const std::vector<double>& g) {
    return sum(m.element_count(), [&](std::size_t e) {
        const double gl = c[e] + g[e], gr = c[e] + g[e + 1];
        return m.h(e) / 3.0 * (gl * gl + gl * gr + gr * gr);
    });
}

template <class Sum>
double energy_norm_sq(Sum sum, const Mesh& m, const std::vector<double>& v) {
    return sum(m.element_count(), [&](std::size_t e) {
        const double d = (v[e + 1] - v[e]) / m.h(e);
        return d * d * m.h(e);
    });
}

// J(v) = 1/2 ∫ (v')^2 - f ∫ v
template <class Sum>
double energy(Sum sum, const Mesh& m, const std::vector<double>& v, double f) {
    return sum(m.element_count(), [&](std::size_t e) {
        const double d = (v[e + 1] - v[e]) / m.h(e);
        return 0.5 * d * d * m.h(e) - f * m.h(e) * 0.5 * (v[e] + v[e + 1]);
    });
}

// ∫ mu (v - phi) for elementwise-constant mu >= 0.
template <class Sum>
double obstacle_pairing(Sum sum, const Mesh& m, const std::vector<double>& mu,
                        const std::vector<double>& v, double phi) {
    return sum(m.element_count(), [&](std::size_t e) {
        return mu[e] * m.h(e) * (0.5 * (v[e] + v[e + 1]) - phi);
    });
}

}  // namespace kernels

namespace detail {
struct OmpSum {
    template <class F>
    double operator()(std::size_t n, F&& f) const { return chunked_sum(n, f); }
};
struct SerialSum {
    template <class F>
    double operator()(std::size_t n, F&& f) const { return serial::chunked_sum(n, f); }
};
}  // namespace detail

inline double l2sq_linear(const Mesh& m, const std::vector<double>& g) {
    return kernels::l2sq_linear(detail::OmpSum{}, m, g);
}
inline double l2sq_const_plus_linear(const Mesh& m, const std::vector<double>& c,
                                     const std::vector<double>& g) {
    return kernels::l2sq_const_plus_linear(detail::OmpSum{}, m, c, g);
}
inline double energy_norm_sq(const Mesh& m, const std::vector<double>& v) {
    return kernels::energy_norm_sq(detail::OmpSum{}, m, v);
}
inline double energy(const Mesh& m, const std::vector<double>& v, double f) {
    return kernels::energy(detail::OmpSum{}, m, v, f);
}
inline double obstacle_pairing(const Mesh& m, const std::vector<double>& mu,
                               const std::vector<double>& v, double phi) {
    return kernels::obstacle_pairing(detail::OmpSum{}, m, mu, v, phi);
}

namespace serial {
inline double l2sq_linear(const Mesh& m, const std::vector<double>& g) {
    return kernels::l2sq_linear(detail::SerialSum{}, m, g);
}
inline double l2sq_const_plus_linear(const Mesh& m, const std::vector<double>& c,
                                     const std::vector<double>& g) {
    return kernels::l2sq_const_plus_linear(detail::SerialSum{}, m, c, g);
}
inline double energy_norm_sq(const Mesh& m, const std::vector<double>& v) {
    return kernels::energy_norm_sq(detail::SerialSum{}, m, v);
}
inline double energy(const Mesh& m, const std::vector<double>& v, double f) {
    return kernels::energy(detail::SerialSum{}, m, v, f);
}
inline double obstacle_pairing(const Mesh& m, const std::vector<double>& mu,
                               const std::vector<double>& v, double phi) {
    return kernels::obstacle_pairing(detail::SerialSum{}, m, mu, v, phi);
}
}  // namespace serial

}  // namespace obstacle1d
