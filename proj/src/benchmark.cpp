#include "obstacle1d/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "obstacle1d/integrals.hpp"
#include "obstacle1d/parallel.hpp"

namespace obstacle1d {

bool obstacle_active(const ProblemSpec& spec) {
    validate_for_benchmark(spec);
    return std::abs(spec.f) >= 8.0 * std::abs(spec.phi);
}

double contact_start(const ProblemSpec& spec) {
    if (!obstacle_active(spec))
        throw std::invalid_argument("contact zone requires an active obstacle");
    return std::sqrt(2.0 * spec.phi / spec.f);
}

double exact_u(const ProblemSpec& spec, double x) {
    if (!obstacle_active(spec)) return 0.5 * spec.f * (x - x * x);
    const double s = contact_start(spec);
    const double c = std::sqrt(2.0 * spec.phi * spec.f);
    if (x < s) return -0.5 * spec.f * x * x - c * x;
    if (x <= 1.0 - s) return spec.phi;
    const double t = x - 1.0;
    return -0.5 * spec.f * t * t + c * t;
}

double exact_flux(const ProblemSpec& spec, double x) {
    if (!obstacle_active(spec)) return 0.5 * spec.f * (1.0 - 2.0 * x);
    const double s = contact_start(spec);
    const double c = std::sqrt(2.0 * spec.phi * spec.f);
    if (x < s) return -spec.f * x - c;
    if (x <= 1.0 - s) return 0.0;
    return -spec.f * (x - 1.0) + c;
}

double exact_energy(const ProblemSpec& spec) {
    if (!obstacle_active(spec)) return -spec.f * spec.f / 24.0;
    const double s = std::sqrt(2.0 * spec.phi / spec.f);
    return spec.f * spec.phi * (4.0 / 3.0 * s - 1.0);
}

std::vector<double> interpolate_u(const ProblemSpec& spec, const Mesh& mesh) {
    std::vector<double> v(mesh.node_count());
    for_each_index(v.size(), [&](std::size_t i) { v[i] = exact_u(spec, mesh.nodes[i]); });
    return v;
}

std::vector<double> interpolate_flux(const ProblemSpec& spec, const Mesh& mesh) {
    std::vector<double> t(mesh.node_count());
    for_each_index(t.size(), [&](std::size_t i) { t[i] = exact_flux(spec, mesh.nodes[i]); });
    return t;
}

std::vector<double> exact_multiplier_midpoint(const ProblemSpec& spec, const Mesh& mesh) {
    std::vector<double> mu(mesh.element_count(), 0.0);
    if (!obstacle_active(spec)) return mu;
    const double s = contact_start(spec);
    for_each_index(mu.size(), [&](std::size_t e) {
        const double m = mesh.midpoint(e);
        mu[e] = (m > s && m < 1.0 - s) ? -spec.f : 0.0;
    });
    return mu;
}

std::vector<double> exact_multiplier_projected(const ProblemSpec& spec, const Mesh& mesh) {
    std::vector<double> mu(mesh.element_count(), 0.0);
    if (!obstacle_active(spec)) return mu;
    const double s = contact_start(spec);
    for_each_index(mu.size(), [&](std::size_t e) {
        const double lo = std::max(mesh.nodes[e], s);
        const double hi = std::min(mesh.nodes[e + 1], 1.0 - s);
        const double overlap = std::max(0.0, hi - lo);
        mu[e] = -spec.f * overlap / mesh.h(e);
    });
    return mu;
}

double half_energy_error(const ProblemSpec& spec, const Mesh& mesh,
                         const std::vector<double>& v) {
    validate_for_benchmark(spec);
    if (v.size() != mesh.node_count())
        throw std::invalid_argument("half_energy_error: size mismatch");
    const bool act = obstacle_active(spec);
    const double s = act ? contact_start(spec) : 0.0;
    const double total = chunked_sum(mesh.element_count(), [&](std::size_t e) {
        const double xl = mesh.nodes[e], xr = mesh.nodes[e + 1];
        const double dv = (v[e + 1] - v[e]) / mesh.h(e);
        // u' is linear on each side of the contact endpoints, so splitting
        // there makes the integrand quadratic and Simpson exact.
        double pts[4] = {xl, xr, xr, xr};
        int np = 2;
        if (act) {
            if (s > xl && s < xr) { pts[np - 1] = s; pts[np] = xr; ++np; }
            const double s2 = 1.0 - s;
            if (s2 > xl && s2 < xr) { pts[np - 1] = s2; pts[np] = xr; ++np; }
        }
        double acc = 0.0;
        for (int k = 0; k + 1 < np; ++k) {
            const double a = pts[k], b = pts[k + 1];
            const double m = 0.5 * (a + b);
            const double ga = dv - exact_flux(spec, a);
            const double gm = dv - exact_flux(spec, m);
            const double gb = dv - exact_flux(spec, b);
            acc += (b - a) / 6.0 * (ga * ga + 4.0 * gm * gm + gb * gb);
        }
        return acc;
    });
    return 0.5 * total;
}

double energy_gap(const ProblemSpec& spec, const Mesh& mesh,
                  const std::vector<double>& v) {
    validate_for_benchmark(spec);
    if (v.size() != mesh.node_count())
        throw std::invalid_argument("energy_gap: size mismatch");
    return energy(mesh, v, spec.f) - exact_energy(spec);
}

Mesh make_contact_fitted_mesh(const ProblemSpec& spec, std::size_t n_elements) {
    if (!obstacle_active(spec))
        throw std::invalid_argument("fitted mesh requires an active obstacle");
    if (n_elements < 3) throw std::invalid_argument("fitted mesh needs >= 3 elements");
    const double s = contact_start(spec);
    const double mid_len = 1.0 - 2.0 * s;
    auto count = [&](double len) {
        const auto c = static_cast<std::size_t>(std::lround(len * static_cast<double>(n_elements)));
        return std::max<std::size_t>(1, c);
    };
    const std::size_t n_side = count(s);
    const std::size_t n_mid = mid_len > 0.0 ? count(mid_len) : 0;
    std::vector<double> nodes;
    nodes.reserve(2 * n_side + n_mid + 1);
    auto fill = [&](double a, double b, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            nodes.push_back(a + (b - a) * static_cast<double>(i) / static_cast<double>(k));
    };
    fill(0.0, s, n_side);
    if (n_mid > 0) fill(s, 1.0 - s, n_mid);
    fill(1.0 - s, 1.0, n_side);
    nodes.push_back(1.0);
    return make_mesh(std::move(nodes));
}

}  // namespace obstacle1d
