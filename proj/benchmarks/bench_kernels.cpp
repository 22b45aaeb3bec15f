// Timing harness for the reduction kernels: serial reference vs the OpenMP
// path on a large mesh. Timings are informational; the hard requirement is
// that both paths return bitwise-identical values (exit 1 otherwise).

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "obstacle1d/integrals.hpp"
#include "obstacle1d/mesh.hpp"
#include "obstacle1d/parallel.hpp"

using namespace obstacle1d;

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock_type::now();
        f();
        const double dt = std::chrono::duration<double>(clock_type::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

volatile double sink;  // keeps the timed results alive

}  // namespace

int main() {
    const std::size_t n_nodes = (std::size_t(1) << 23) + 1;  // 8M elements
    std::printf("threads: %d, elements: %zu\n", max_threads(), n_nodes - 1);

    const Mesh mesh = make_uniform_mesh(n_nodes);
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> g(n_nodes), c(n_nodes - 1), mu(n_nodes - 1);
    for (auto& x : g) x = d(rng);
    for (auto& x : c) x = d(rng);
    for (auto& x : mu) x = std::abs(d(rng));

    struct Row {
        const char* name;
        double serial_value, parallel_value;
        double serial_time, parallel_time;
    };
    std::vector<Row> rows;

    auto bench = [&](const char* name, auto serial_fn, auto parallel_fn) {
        Row row;
        row.name = name;
        row.serial_time = time_best_of(5, [&] { sink = serial_fn(); });
        row.serial_value = serial_fn();
        row.parallel_time = time_best_of(5, [&] { sink = parallel_fn(); });
        row.parallel_value = parallel_fn();
        rows.push_back(row);
    };

    bench("l2sq_linear",
          [&] { return serial::l2sq_linear(mesh, g); },
          [&] { return l2sq_linear(mesh, g); });
    bench("l2sq_const_plus_linear",
          [&] { return serial::l2sq_const_plus_linear(mesh, c, g); },
          [&] { return l2sq_const_plus_linear(mesh, c, g); });
    bench("energy_norm_sq",
          [&] { return serial::energy_norm_sq(mesh, g); },
          [&] { return energy_norm_sq(mesh, g); });
    bench("energy",
          [&] { return serial::energy(mesh, g, -14.0); },
          [&] { return energy(mesh, g, -14.0); });
    bench("obstacle_pairing",
          [&] { return serial::obstacle_pairing(mesh, mu, g, -1.0); },
          [&] { return obstacle_pairing(mesh, mu, g, -1.0); });

    bool all_match = true;
    std::printf("%-24s %12s %12s %8s  %s\n", "kernel", "serial[ms]", "parallel[ms]",
                "speedup", "bitwise");
    for (const Row& r : rows) {
        const bool match = r.serial_value == r.parallel_value;
        all_match = all_match && match;
        std::printf("%-24s %12.3f %12.3f %7.2fx  %s\n", r.name, 1e3 * r.serial_time,
                    1e3 * r.parallel_time, r.serial_time / r.parallel_time,
                    match ? "yes" : "NO");
    }
    if (!all_match) {
        std::printf("bitwise mismatch between serial and parallel kernels\n");
        return 1;
    }
    return 0;
}
