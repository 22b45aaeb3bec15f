#include "obstacle1d/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "obstacle1d/integrals.hpp"
#include "obstacle1d/parallel.hpp"
#include "obstacle1d/tridiagonal.hpp"

namespace obstacle1d {

namespace {

void check_shapes(const Mesh& mesh, const std::vector<double>& v,
                  const std::vector<double>& mu, const std::vector<double>& tau) {
    if (v.size() != mesh.node_count()) throw std::invalid_argument("majorant: v size");
    if (mu.size() != mesh.element_count()) throw std::invalid_argument("majorant: mu size");
    if (tau.size() != mesh.node_count()) throw std::invalid_argument("majorant: tau size");
}

// ∫ (v' - tau)^2, exact for pw-constant v' and nodal-linear tau.
template <class Sum>
double flux_mismatch_sq(Sum sum, const Mesh& m, const std::vector<double>& v,
                        const std::vector<double>& tau) {
    return sum(m.element_count(), [&](std::size_t e) {
        const double d = (v[e + 1] - v[e]) / m.h(e);
        const double gl = d - tau[e], gr = d - tau[e + 1];
        return m.h(e) / 3.0 * (gl * gl + gl * gr + gr * gr);
    });
}

// ||tau' + f + mu||^2, pw constant per element.
template <class Sum>
double residual_sq(Sum sum, const Mesh& m, double f, const std::vector<double>& mu,
                   const std::vector<double>& tau) {
    return sum(m.element_count(), [&](std::size_t e) {
        const double r = (tau[e + 1] - tau[e]) / m.h(e) + f + mu[e];
        return r * r * m.h(e);
    });
}

// (1+beta) M + (1+1/beta) C^2 A
SymTridiagonal tau_system(const SymTridiagonal& mass, const SymTridiagonal& stiffness,
                          double beta, double c_constant) {
    const double a = 1.0 + beta;
    const double s = (1.0 + 1.0 / beta) * c_constant * c_constant;
    SymTridiagonal out;
    out.diag.resize(mass.diag.size());
    out.off.resize(mass.off.size());
    for_each_index(out.diag.size(), [&](std::size_t i) {
        out.diag[i] = a * mass.diag[i] + s * stiffness.diag[i];
    });
    for_each_index(out.off.size(), [&](std::size_t i) {
        out.off[i] = a * mass.off[i] + s * stiffness.off[i];
    });
    return out;
}

// b_i = ∫ v' psi_i
std::vector<double> flux_load(const Mesh& mesh, const std::vector<double>& v) {
    const std::size_t n = mesh.node_count();
    std::vector<double> b(n);
    for_each_index(n, [&](std::size_t i) {
        double s = 0.0;
        if (i > 0) s += 0.5 * (v[i] - v[i - 1]);
        if (i + 1 < n) s += 0.5 * (v[i + 1] - v[i]);
        b[i] = s;
    });
    return b;
}

// c_i = ∫ (f + mu) psi_i'
void residual_load(const Mesh& mesh, double f, const std::vector<double>& mu,
                   std::vector<double>& c) {
    const std::size_t n = mesh.node_count();
    c.resize(n);
    c[0] = -(f + mu[0]);
    c[n - 1] = f + mu[n - 2];
    for_each_index(n - 2, [&](std::size_t i) {
        c[i + 1] = (f + mu[i]) - (f + mu[i + 1]);
    });
}

void tau_rhs(double beta, double c_constant, const std::vector<double>& b,
             const std::vector<double>& c, std::vector<double>& rhs) {
    const double a = 1.0 + beta;
    const double s = (1.0 + 1.0 / beta) * c_constant * c_constant;
    rhs.resize(b.size());
    for_each_index(b.size(), [&](std::size_t i) { rhs[i] = a * b[i] - s * c[i]; });
}

void mu_step_in_place(const ProblemSpec& spec, const Mesh& mesh,
                      const std::vector<double>& v, double beta,
                      const std::vector<double>& tau, double c_constant,
                      std::vector<double>& mu) {
    const double s = (1.0 + 1.0 / beta) * c_constant * c_constant;
    for_each_index(mesh.element_count(), [&](std::size_t e) {
        const double tp = (tau[e + 1] - tau[e]) / mesh.h(e);
        const double gap = 0.5 * (v[e] + v[e + 1]) - spec.phi;
        mu[e] = std::max(-tp - spec.f - gap / s, 0.0);
    });
}

void check_config(const MajorantConfig& config) {
    if (config.n_iterations == 0) throw std::invalid_argument("majorant: need >= 1 iteration");
    if (!(config.beta0 > 0.0)) throw std::invalid_argument("majorant: beta0 must be positive");
    if (!(config.c_constant > 0.0)) throw std::invalid_argument("majorant: C must be positive");
}

}  // namespace

MajorantBreakdown evaluate_majorant(const ProblemSpec& spec, const Mesh& mesh,
                                    const std::vector<double>& v, double beta,
                                    const std::vector<double>& mu,
                                    const std::vector<double>& tau, double c_constant) {
    validate(spec);
    check_shapes(mesh, v, mu, tau);
    if (!(beta > 0.0)) throw std::invalid_argument("majorant: beta must be positive");
    if (!(c_constant > 0.0)) throw std::invalid_argument("majorant: C must be positive");

    MajorantBreakdown out;
    out.beta = beta;
    out.c_constant = c_constant;
    out.term_flux = 0.5 * (1.0 + beta) * flux_mismatch_sq(detail::OmpSum{}, mesh, v, tau);
    out.term_residual = 0.5 * (1.0 + 1.0 / beta) * c_constant * c_constant *
                        residual_sq(detail::OmpSum{}, mesh, spec.f, mu, tau);
    out.term_obstacle = obstacle_pairing(mesh, mu, v, spec.phi);
    out.total = out.term_flux + out.term_residual + out.term_obstacle;
    return out;
}

std::vector<double> step_tau(const ProblemSpec& spec, const Mesh& mesh,
                             const std::vector<double>& v, double beta,
                             const std::vector<double>& mu, double c_constant) {
    validate(spec);
    if (!(beta > 0.0)) throw std::invalid_argument("majorant: beta must be positive");
    const SymTridiagonal sys =
        tau_system(assemble_mass(mesh), assemble_stiffness(mesh), beta, c_constant);
    std::vector<double> c, rhs;
    residual_load(mesh, spec.f, mu, c);
    tau_rhs(beta, c_constant, flux_load(mesh, v), c, rhs);
    solve_in_place(factorize(sys), rhs);
    return rhs;
}

std::vector<double> step_mu(const ProblemSpec& spec, const Mesh& mesh,
                            const std::vector<double>& v, double beta,
                            const std::vector<double>& tau, double c_constant) {
    validate(spec);
    if (!(beta > 0.0)) throw std::invalid_argument("majorant: beta must be positive");
    std::vector<double> mu(mesh.element_count());
    mu_step_in_place(spec, mesh, v, beta, tau, c_constant, mu);
    return mu;
}

double step_beta(const ProblemSpec& spec, const Mesh& mesh,
                 const std::vector<double>& v, const std::vector<double>& mu,
                 const std::vector<double>& tau, double beta_prev, double c_constant) {
    validate(spec);
    const double num =
        c_constant * std::sqrt(residual_sq(detail::OmpSum{}, mesh, spec.f, mu, tau));
    const double den = std::sqrt(flux_mismatch_sq(detail::OmpSum{}, mesh, v, tau));
    if (den < 1e-14) return beta_prev;
    if (num < 1e-14) return 1e-8;
    return num / den;
}

MajorantResult minimize_majorant(const ProblemSpec& spec, const Mesh& mesh,
                                 const std::vector<double>& v,
                                 const MajorantConfig& config) {
    validate(spec);
    check_config(config);
    const std::size_t n = mesh.node_count();
    const std::size_t ne = mesh.element_count();
    if (v.size() != n) throw std::invalid_argument("majorant: v size");
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] < spec.phi - 1e-12 * std::abs(spec.phi))
            throw std::invalid_argument("majorant: v must be feasible (v >= phi)");

    MajorantResult out;
    out.mu.assign(ne, 0.0);
    if (!config.mu0.empty()) {
        if (config.mu0.size() != ne) throw std::invalid_argument("majorant: mu0 size");
        for (double m : config.mu0)
            if (m < 0.0) throw std::invalid_argument("majorant: mu0 must be nonnegative");
        out.mu = config.mu0;
    }
    out.tau.assign(n, 0.0);

    const SymTridiagonal mass = assemble_mass(mesh);
    const SymTridiagonal stiffness = assemble_stiffness(mesh);
    const std::vector<double> b = flux_load(mesh, v);

    double beta = config.beta0;
    TriFactor factor = factorize(tau_system(mass, stiffness, beta, config.c_constant));

    std::vector<std::size_t> beta_at = config.beta_update_iterations;
    std::sort(beta_at.begin(), beta_at.end());
    std::vector<std::size_t> snaps = config.snapshot_iterations;
    std::sort(snaps.begin(), snaps.end());

    if (config.record_history) out.history.reserve(config.n_iterations);
    std::vector<double> c, rhs;

    for (std::size_t k = 1; k <= config.n_iterations; ++k) {
        residual_load(mesh, spec.f, out.mu, c);
        tau_rhs(beta, config.c_constant, b, c, rhs);
        solve_in_place(factor, rhs);
        out.tau.swap(rhs);
        mu_step_in_place(spec, mesh, v, beta, out.tau, config.c_constant, out.mu);
        if (std::binary_search(beta_at.begin(), beta_at.end(), k)) {
            const double next = step_beta(spec, mesh, v, out.mu, out.tau, beta,
                                          config.c_constant);
            if (next != beta) {
                beta = next;
                factor = factorize(tau_system(mass, stiffness, beta, config.c_constant));
            }
        }
        const bool snap = std::binary_search(snaps.begin(), snaps.end(), k);
        if (config.record_history || snap) {
            const double total =
                evaluate_majorant(spec, mesh, v, beta, out.mu, out.tau, config.c_constant)
                    .total;
            if (config.record_history) out.history.push_back(total);
            if (snap) out.snapshots.push_back({k, out.tau, out.mu, total});
        }
    }

    out.breakdown =
        evaluate_majorant(spec, mesh, v, beta, out.mu, out.tau, config.c_constant);
    return out;
}

}  // namespace obstacle1d
