#pragma once

#include <cstddef>
#include <vector>

#include "obstacle1d/problem.hpp"

namespace obstacle1d {

struct RunConfig {
    std::vector<double> f_list;  // empty selects the default -5 .. -20 sweep
    double phi = -1.0;
    std::size_t nodes = 641;
    double rho = 10.0;
    std::size_t uzawa_iterations = 10000;
    std::size_t majorant_iterations = 10000;
    std::vector<std::size_t> beta_update_iterations{5000, 10000};
    double c_constant = 1.0;
    // The Uzawa run continues to at least this count; its final multiplier
    // seeds the majorant minimization. The row's v is the iterate at
    // uzawa_iterations.
    std::size_t warm_start_iterations = 10000;
    bool parallel_rows = true;
};

std::vector<double> default_f_list();

struct TableRow {
    double f = 0.0;
    double half_energy_err = 0.0;  // on the clamped iterate
    double energy_gap = 0.0;       // on the clamped iterate
    double energy_index = 0.0;     // sqrt(gap / half)
    double majorant = 0.0;
    double majorant_index = 0.0;   // sqrt(majorant / gap)
    double infeasibility = 0.0;    // of the raw iterate
};

// One table row: Uzawa to max(uzawa_iterations, warm_start_iterations) with a
// snapshot at uzawa_iterations, clamp the snapshot, error columns, then the
// majorant minimization seeded with the final multiplier.
TableRow run_row(const RunConfig& config, double f);

// Rows in f_list order; row computations are independent and run in parallel
// when enabled (ordering and values are unaffected).
std::vector<TableRow> run_table(const RunConfig& config);

}  // namespace obstacle1d
