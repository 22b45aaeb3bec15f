#include "obstacle1d/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "obstacle1d/benchmark.hpp"
#include "obstacle1d/majorant.hpp"
#include "obstacle1d/mesh.hpp"
#include "obstacle1d/uzawa.hpp"

namespace obstacle1d {

std::vector<double> default_f_list() {
    std::vector<double> fs;
    for (int k = 5; k <= 20; ++k) fs.push_back(-static_cast<double>(k));
    return fs;
}

TableRow run_row(const RunConfig& config, double f) {
    const ProblemSpec spec{f, config.phi};
    validate_for_benchmark(spec);
    const Mesh mesh = make_uniform_mesh(config.nodes);

    UzawaConfig uc;
    uc.rho = config.rho;
    uc.n_iterations = std::max(config.uzawa_iterations, config.warm_start_iterations);
    const bool snapshot_row = config.uzawa_iterations < uc.n_iterations;
    if (snapshot_row) uc.snapshot_iterations = {config.uzawa_iterations};
    const UzawaResult uz = uzawa_solve(spec, mesh, uc);
    const std::vector<double>& v_raw = snapshot_row ? uz.history.front().v : uz.v;

    TableRow row;
    row.f = f;
    row.infeasibility = 0.0;
    for (double vi : v_raw) row.infeasibility = std::max(row.infeasibility, spec.phi - vi);
    row.infeasibility = std::max(row.infeasibility, 0.0);

    const std::vector<double> v = project_to_feasible(v_raw, spec.phi);
    row.half_energy_err = half_energy_error(spec, mesh, v);
    row.energy_gap = energy_gap(spec, mesh, v);
    row.energy_index =
        row.half_energy_err > 0.0 ? std::sqrt(row.energy_gap / row.half_energy_err) : 1.0;

    MajorantConfig mc;
    mc.n_iterations = config.majorant_iterations;
    mc.beta_update_iterations = config.beta_update_iterations;
    mc.c_constant = config.c_constant;
    mc.mu0 = uz.mu;
    row.majorant = minimize_majorant(spec, mesh, v, mc).breakdown.total;
    row.majorant_index =
        row.energy_gap > 0.0 ? std::sqrt(row.majorant / row.energy_gap) : 1.0;
    return row;
}

std::vector<TableRow> run_table(const RunConfig& config) {
    const std::vector<double> fs =
        config.f_list.empty() ? default_f_list() : config.f_list;
    for (double f : fs) validate_for_benchmark(ProblemSpec{f, config.phi});
    std::vector<TableRow> rows(fs.size());
    if (config.parallel_rows) {
        // Exceptions cannot cross the parallel region; capture the first one
        // and rethrow with the failing load attached.
        std::string error;
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(fs.size()); ++i) {
            const std::size_t j = static_cast<std::size_t>(i);
            try {
                rows[j] = run_row(config, fs[j]);
            } catch (const std::exception& e) {
#pragma omp critical
                if (error.empty()) error = "row f=" + std::to_string(fs[j]) + ": " + e.what();
            }
        }
        if (!error.empty()) throw std::runtime_error(error);
    } else {
        for (std::size_t i = 0; i < fs.size(); ++i) {
            try {
                rows[i] = run_row(config, fs[i]);
            } catch (const std::exception& e) {
                throw std::runtime_error("row f=" + std::to_string(fs[i]) + ": " +
                                         e.what());
            }
        }
    }
    return rows;
}

}  // namespace obstacle1d
