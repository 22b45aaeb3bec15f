#pragma once

#include <cstddef>
#include <vector>

#include "obstacle1d/mesh.hpp"

namespace obstacle1d {

// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }
};

// y = T x
std::vector<double> apply(const SymTridiagonal& T, const std::vector<double>& x);

// LU factors from the Thomas recurrence. Valid while the factored matrix is
// positive definite (all assembled systems here are).
struct TriFactor {
    std::vector<double> diag;   // pivots
    std::vector<double> lower;  // subdiagonal multipliers
};

TriFactor factorize(const SymTridiagonal& T);
void solve_in_place(const TriFactor& F, std::vector<double>& rhs);
std::vector<double> solve(const SymTridiagonal& T, std::vector<double> rhs);

// P1 stiffness a_ij = ∫ psi_i' psi_j' and mass m_ij = ∫ psi_i psi_j over all
// nodes, boundary included (the stiffness alone is singular; combinations
// used by the solvers are definite).
SymTridiagonal assemble_stiffness(const Mesh& mesh);
SymTridiagonal assemble_mass(const Mesh& mesh);

// Drops the first and last row/column (homogeneous Dirichlet block).
SymTridiagonal interior_block(const SymTridiagonal& T);

}  // namespace obstacle1d
