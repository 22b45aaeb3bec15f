#include "obstacle1d/uzawa.hpp"

#include <algorithm>
#include <stdexcept>

#include "obstacle1d/parallel.hpp"
#include "obstacle1d/tridiagonal.hpp"

namespace obstacle1d {

std::vector<double> project_to_feasible(std::vector<double> v, double phi) {
    for_each_index(v.size(), [&](std::size_t i) { v[i] = std::max(v[i], phi); });
    return v;
}

UzawaResult uzawa_solve(const ProblemSpec& spec, const Mesh& mesh,
                        const UzawaConfig& config) {
    validate(spec);
    if (!(config.rho > 0.0)) throw std::invalid_argument("uzawa: rho must be positive");
    if (config.n_iterations == 0) throw std::invalid_argument("uzawa: need >= 1 iteration");
    const std::size_t n = mesh.node_count();
    if (n < 3) throw std::invalid_argument("uzawa: mesh needs interior nodes");

    const SymTridiagonal mass = assemble_mass(mesh);
    const TriFactor interior = factorize(interior_block(assemble_stiffness(mesh)));

    // Load part of the right-hand side; constant across iterations.
    const std::vector<double> load =
        obstacle1d::apply(mass, std::vector<double>(n, spec.f));

    UzawaResult out;
    out.v.assign(n, 0.0);
    out.mu.assign(n - 1, 0.0);
    std::vector<double> rhs(n - 2);

    std::vector<std::size_t> snaps = config.snapshot_iterations;
    std::sort(snaps.begin(), snaps.end());

    for (std::size_t k = 1; k <= config.n_iterations; ++k) {
        for_each_index(n - 2, [&](std::size_t i) {
            const std::size_t j = i + 1;  // node index
            rhs[i] = load[j] + 0.5 * (out.mu[j - 1] * mesh.h(j - 1) + out.mu[j] * mesh.h(j));
        });
        solve_in_place(interior, rhs);
        for_each_index(n - 2, [&](std::size_t i) { out.v[i + 1] = rhs[i]; });
        for_each_index(n - 1, [&](std::size_t e) {
            const double vm = 0.5 * (out.v[e] + out.v[e + 1]);
            out.mu[e] = std::max(out.mu[e] + config.rho * (spec.phi - vm), 0.0);
        });
        if (std::binary_search(snaps.begin(), snaps.end(), k))
            out.history.push_back({k, out.v, out.mu});
    }

    out.iterations_run = config.n_iterations;
    out.infeasibility = chunked_max(n, [&](std::size_t i) {
        return std::max(spec.phi - out.v[i], 0.0);
    });
    return out;
}

}  // namespace obstacle1d
