#pragma once

#include <vector>

#include "obstacle1d/mesh.hpp"
#include "obstacle1d/problem.hpp"

namespace obstacle1d {

// Closed-form solution of the benchmark problem (constant f <= 0, constant
// phi < 0). The obstacle is active iff |f| >= 8|phi|; then the contact zone
// is [s, 1-s] with s = sqrt(2 phi / f), and on [0, s]
//   u(x) = -f/2 x^2 - sqrt(2 phi f) x,
// mirrored on [1-s, 1], with u = phi in between. Otherwise u is the
// unconstrained parabola f/2 (x - x^2).

bool obstacle_active(const ProblemSpec& spec);

// Distance from the boundary to the contact zone; requires an active obstacle.
double contact_start(const ProblemSpec& spec);

double exact_u(const ProblemSpec& spec, double x);
double exact_flux(const ProblemSpec& spec, double x);  // u'

// J(u): -f^2/24 when inactive, f*phi*(4/3 sqrt(2 phi/f) - 1) when active.
double exact_energy(const ProblemSpec& spec);

// Nodal interpolants of u and u'.
std::vector<double> interpolate_u(const ProblemSpec& spec, const Mesh& mesh);
std::vector<double> interpolate_flux(const ProblemSpec& spec, const Mesh& mesh);

// The contact multiplier lambda = -(u'' + f): equals -f on the contact zone
// and 0 elsewhere. Two piecewise-constant representations:
//   midpoint: lambda evaluated at element midpoints (matches the pointwise
//             definition away from the contact endpoints),
//   projected: element averages, i.e. the L2 projection onto elementwise
//              constants (exact on every element, including the two that
//              contain the contact endpoints).
std::vector<double> exact_multiplier_midpoint(const ProblemSpec& spec, const Mesh& mesh);
std::vector<double> exact_multiplier_projected(const ProblemSpec& spec, const Mesh& mesh);

// 1/2 ∫ (v' - u')^2. Elements are split at the contact endpoints, so the
// integrand is a quadratic on every subinterval and Simpson is exact.
double half_energy_error(const ProblemSpec& spec, const Mesh& mesh,
                         const std::vector<double>& v);

// J(v) - J(u).
double energy_gap(const ProblemSpec& spec, const Mesh& mesh,
                  const std::vector<double>& v);

// Mesh with nodes exactly at the contact endpoints s and 1-s; segment
// interiors are uniform and sized to roughly n_elements total.
Mesh make_contact_fitted_mesh(const ProblemSpec& spec, std::size_t n_elements);

}  // namespace obstacle1d
