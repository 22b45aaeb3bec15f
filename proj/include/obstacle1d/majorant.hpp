#pragma once

#include <cstddef>
#include <vector>

#include "obstacle1d/mesh.hpp"
#include "obstacle1d/problem.hpp"

namespace obstacle1d {

// Functional majorant for the obstacle problem: for every feasible v,
//   J(v) - J(u) <= M(v; beta, mu, tau)
//     = (1+beta)/2 ∫(v' - tau)^2
//     + 1/2 (1 + 1/beta) C^2 ||tau' + f + mu||^2
//     + ∫ mu (v - phi)
// with beta > 0, mu >= 0 elementwise constant, tau nodal-linear (no boundary
// condition), and C the Friedrichs-type constant of the residual term.
struct MajorantBreakdown {
    double beta = 0.0;
    double term_flux = 0.0;
    double term_residual = 0.0;
    double term_obstacle = 0.0;
    double total = 0.0;
    double c_constant = 1.0;
};

struct MajorantConfig {
    std::size_t n_iterations = 10000;
    // Iteration indices (1-based) at which the beta step runs.
    std::vector<std::size_t> beta_update_iterations{5000, 10000};
    double beta0 = 1.0;
    double c_constant = 1.0;
    // Initial multiplier, one value per element; empty means zero.
    std::vector<double> mu0;
    bool record_history = false;
    // Iteration indices at which (tau, mu) snapshots are recorded.
    std::vector<std::size_t> snapshot_iterations;
};

struct MajorantSnapshot {
    std::size_t iteration = 0;
    std::vector<double> tau;  // nodal
    std::vector<double> mu;   // per element
    double total = 0.0;
};

struct MajorantResult {
    MajorantBreakdown breakdown;
    std::vector<double> tau;
    std::vector<double> mu;
    std::vector<double> history;  // total after each iteration, when recorded
    std::vector<MajorantSnapshot> snapshots;
};

MajorantBreakdown evaluate_majorant(const ProblemSpec& spec, const Mesh& mesh,
                                    const std::vector<double>& v, double beta,
                                    const std::vector<double>& mu,
                                    const std::vector<double>& tau,
                                    double c_constant = 1.0);

// Exact minimizer of M over nodal tau at fixed (beta, mu): solves
//   [(1+beta) M + (1+1/beta) C^2 A] y = (1+beta) b - (1+1/beta) C^2 c
// with b_i = ∫ v' psi_i and c_i = ∫ (f + mu) psi_i'.
std::vector<double> step_tau(const ProblemSpec& spec, const Mesh& mesh,
                             const std::vector<double>& v, double beta,
                             const std::vector<double>& mu, double c_constant = 1.0);

// Exact minimizer over elementwise-constant mu >= 0 at fixed (beta, tau):
//   mu_e = ( -tau'_e - f - avg_e(v - phi) / ((1 + 1/beta) C^2) )+.
std::vector<double> step_mu(const ProblemSpec& spec, const Mesh& mesh,
                            const std::vector<double>& v, double beta,
                            const std::vector<double>& tau, double c_constant = 1.0);

// Exact minimizer over beta > 0 at fixed (mu, tau): the balance ratio
// C ||tau' + f + mu|| / ||v' - tau||. Degenerate guards: a vanishing
// denominator keeps beta_prev, a vanishing numerator returns 1e-8.
double step_beta(const ProblemSpec& spec, const Mesh& mesh,
                 const std::vector<double>& v, const std::vector<double>& mu,
                 const std::vector<double>& tau, double beta_prev,
                 double c_constant = 1.0);

// Block coordinate descent: each iteration runs the tau step then the mu
// step; the beta step runs only at the configured iterations. Requires a
// feasible v (the bound presumes v >= phi).
MajorantResult minimize_majorant(const ProblemSpec& spec, const Mesh& mesh,
                                 const std::vector<double>& v,
                                 const MajorantConfig& config);

}  // namespace obstacle1d
