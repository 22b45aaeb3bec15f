#pragma once

#include <cstddef>
#include <vector>

#include "obstacle1d/mesh.hpp"
#include "obstacle1d/problem.hpp"

namespace obstacle1d {

struct UzawaConfig {
    double rho = 10.0;
    std::size_t n_iterations = 10000;
    // Iteration indices (1-based) at which (v, mu) snapshots are recorded.
    std::vector<std::size_t> snapshot_iterations;
};

struct UzawaSnapshot {
    std::size_t iteration = 0;
    std::vector<double> v;   // nodal
    std::vector<double> mu;  // per element
};

struct UzawaResult {
    std::vector<double> v;   // nodal, zero at both boundary nodes
    std::vector<double> mu;  // per element, >= 0
    std::size_t iterations_run = 0;
    double infeasibility = 0.0;  // max over nodes of (phi - v)+
    std::vector<UzawaSnapshot> history;
};

// Dual ascent for the discretized problem. The multiplier is elementwise
// constant; each pass solves the interior stiffness system
//   A_int v = (M f + pairing(mu))_int
// and then updates mu elementwise from the midpoint values of v:
//   mu_e <- (mu_e + rho (phi - v(mid_e)))+.
// Requires phi < 0 and rho > 0; f may be any finite value.
UzawaResult uzawa_solve(const ProblemSpec& spec, const Mesh& mesh,
                        const UzawaConfig& config);

// Nodal clamp onto the admissible set K: max(v_j, phi).
std::vector<double> project_to_feasible(std::vector<double> v, double phi);

}  // namespace obstacle1d
