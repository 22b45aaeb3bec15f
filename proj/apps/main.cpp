// Command-line driver: load-sweep tables, single dual-ascent runs, majorant
// minimization with history, and closed-form benchmark sampling.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "obstacle1d/benchmark.hpp"
#include "obstacle1d/experiment.hpp"
#include "obstacle1d/io.hpp"
#include "obstacle1d/majorant.hpp"
#include "obstacle1d/mesh.hpp"
#include "obstacle1d/problem.hpp"
#include "obstacle1d/uzawa.hpp"

namespace {

using namespace obstacle1d;

std::string stage = "configure";

std::filesystem::path ensure_dir(const std::string& out) {
    const std::filesystem::path dir = out.empty() ? "." : out;
    std::filesystem::create_directories(dir);
    return dir;
}

std::string iter_name(const char* prefix, std::size_t iteration) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s_%06zu.txt", prefix, iteration);
    return buf;
}

void dump_exact(const ProblemSpec& spec, const Mesh& mesh,
                const std::filesystem::path& dir) {
    write_nodal_dump((dir / "u_exact.txt").string(), "u_exact", mesh,
                     interpolate_u(spec, mesh));
    write_nodal_dump((dir / "flux_exact.txt").string(), "flux_exact", mesh,
                     interpolate_flux(spec, mesh));
    write_element_dump((dir / "lambda_exact.txt").string(), "lambda_exact", mesh,
                       exact_multiplier_projected(spec, mesh));
}

int run_table_cmd(const RunConfig& cfg, const std::string& out) {
    stage = "table";
    const std::vector<TableRow> rows = run_table(cfg);
    stage = "write";
    if (out.empty()) {
        std::ostringstream buf;
        write_table_csv(buf, rows);
        std::fputs(buf.str().c_str(), stdout);
    } else {
        write_table_csv(out, rows);
        std::printf("wrote %zu rows to %s\n", rows.size(), out.c_str());
    }
    return 0;
}

int run_solve_cmd(const ProblemSpec& spec, std::size_t nodes, double rho,
                  std::size_t iters, std::vector<std::size_t> snapshots,
                  const std::string& out) {
    stage = "uzawa";
    const Mesh mesh = make_uniform_mesh(nodes);
    UzawaConfig cfg;
    cfg.rho = rho;
    cfg.n_iterations = iters;
    cfg.snapshot_iterations = std::move(snapshots);
    const UzawaResult r = uzawa_solve(spec, mesh, cfg);

    stage = "write";
    const std::filesystem::path dir = ensure_dir(out);
    for (const UzawaSnapshot& snap : r.history) {
        write_nodal_dump((dir / iter_name("v", snap.iteration)).string(),
                         iter_name("v", snap.iteration), mesh, snap.v);
        write_element_dump((dir / iter_name("mu", snap.iteration)).string(),
                           iter_name("mu", snap.iteration), mesh, snap.mu);
    }
    if (spec.f <= 0.0) {
        stage = "exact sampling";
        dump_exact(spec, mesh, dir);
    } else {
        std::fprintf(stderr, "note: f > 0 is outside the closed-form family; "
                             "skipping exact-solution dumps\n");
    }
    std::printf("iterations: %zu  infeasibility: %s  snapshots: %zu  -> %s\n",
                r.iterations_run, format_sci(r.infeasibility).c_str(),
                r.history.size(), dir.string().c_str());
    return 0;
}

int run_majorant_cmd(const ProblemSpec& spec, std::size_t nodes, double rho,
                     std::size_t uzawa_iters, std::size_t majorant_iters,
                     std::vector<std::size_t> beta_updates,
                     std::vector<std::size_t> snapshots, double c_constant,
                     const std::string& out) {
    stage = "uzawa";
    const Mesh mesh = make_uniform_mesh(nodes);
    UzawaConfig ucfg;
    ucfg.rho = rho;
    ucfg.n_iterations = uzawa_iters;
    const UzawaResult uz = uzawa_solve(spec, mesh, ucfg);
    const std::vector<double> v = project_to_feasible(uz.v, spec.phi);

    stage = "majorant";
    MajorantConfig mcfg;
    mcfg.n_iterations = majorant_iters;
    mcfg.beta_update_iterations = std::move(beta_updates);
    mcfg.c_constant = c_constant;
    mcfg.record_history = true;
    mcfg.snapshot_iterations = std::move(snapshots);
    const MajorantResult r = minimize_majorant(spec, mesh, v, mcfg);

    stage = "write";
    const std::filesystem::path dir = ensure_dir(out);
    write_nodal_dump((dir / "v_input.txt").string(), "v_input", mesh, v);
    for (const MajorantSnapshot& snap : r.snapshots) {
        write_nodal_dump((dir / iter_name("tau", snap.iteration)).string(),
                         iter_name("tau", snap.iteration), mesh, snap.tau);
        write_element_dump((dir / iter_name("mu", snap.iteration)).string(),
                           iter_name("mu", snap.iteration), mesh, snap.mu);
    }
    {
        std::ofstream hist(dir / "history.txt");
        if (!hist) throw std::runtime_error("cannot open history.txt");
        hist << "# majorant_history\n";
        for (std::size_t k = 0; k < r.history.size(); ++k)
            hist << (k + 1) << ' ' << format_sci(r.history[k]) << '\n';
    }
    const MajorantBreakdown& b = r.breakdown;
    std::printf("majorant: %s  (flux %s, residual %s, obstacle %s)  beta: %s  -> %s\n",
                format_sci(b.total).c_str(), format_sci(b.term_flux).c_str(),
                format_sci(b.term_residual).c_str(), format_sci(b.term_obstacle).c_str(),
                format_sci(b.beta).c_str(), dir.string().c_str());
    return 0;
}

int run_bench_exact_cmd(const ProblemSpec& spec, std::size_t nodes,
                        const std::string& out) {
    stage = "exact sampling";
    validate_for_benchmark(spec);
    const Mesh mesh = make_uniform_mesh(nodes);
    const std::filesystem::path dir = ensure_dir(out);
    dump_exact(spec, mesh, dir);
    std::printf("energy: %s  active: %s  -> %s\n", format_sci(exact_energy(spec)).c_str(),
                obstacle_active(spec) ? "yes" : "no", dir.string().c_str());
    return 0;
}

double single_f(const std::vector<double>& f_list, double fallback) {
    if (f_list.empty()) return fallback;
    if (f_list.size() != 1)
        throw std::invalid_argument("this subcommand takes exactly one load in --f-list");
    return f_list.front();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D obstacle problem: dual ascent, exact benchmark, majorant bounds"};
    app.require_subcommand(1);

    std::vector<double> f_list;
    double phi = -1.0, rho = 10.0, c_constant = 1.0;
    std::size_t nodes = 641, uzawa_iters = 10000, majorant_iters = 10000;
    std::vector<std::size_t> beta_updates{5000, 10000};
    std::vector<std::size_t> snapshots;
    std::string out;

    auto add_common = [&](CLI::App* cmd, bool wants_sweep) {
        cmd->add_option("--f-list", f_list,
                        wants_sweep ? "loads to sweep (default -5 .. -20)"
                                    : "single load (default -14)");
        cmd->add_option("--phi", phi, "obstacle level, must be negative");
        cmd->add_option("--nodes", nodes, "node count of the uniform mesh");
        cmd->add_option("--out", out, "output file (table) or directory (dumps)");
    };

    CLI::App* table = app.add_subcommand("table", "load sweep: error, bound, index columns");
    add_common(table, true);
    table->add_option("--rho", rho, "dual step size");
    table->add_option("--uzawa-iters", uzawa_iters, "dual iterations per row");
    table->add_option("--majorant-iters", majorant_iters, "minimization iterations");
    table->add_option("--beta-updates", beta_updates, "iterations that refresh beta");
    table->add_option("--c-constant", c_constant, "Friedrichs-type constant");

    CLI::App* solve = app.add_subcommand("solve", "single dual-ascent run with snapshots");
    add_common(solve, false);
    solve->add_option("--rho", rho, "dual step size");
    solve->add_option("--uzawa-iters", uzawa_iters, "dual iterations");
    solve->add_option("--snapshots", snapshots,
                      "iterations to dump (default 1 2 10000)");

    CLI::App* majorant =
        app.add_subcommand("majorant", "minimize the bound for one approximation");
    add_common(majorant, false);
    majorant->add_option("--rho", rho, "dual step size");
    majorant->add_option("--uzawa-iters", uzawa_iters,
                         "dual iterations producing the approximation (default 100)");
    majorant->add_option("--majorant-iters", majorant_iters, "minimization iterations");
    majorant->add_option("--beta-updates", beta_updates, "iterations that refresh beta");
    majorant->add_option("--c-constant", c_constant, "Friedrichs-type constant");
    majorant->add_option("--snapshots", snapshots,
                         "iterations to dump (default 1 20 10000)");

    CLI::App* bench = app.add_subcommand("bench-exact", "sample the closed-form solution");
    add_common(bench, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            RunConfig cfg;
            cfg.f_list = f_list;
            cfg.phi = phi;
            cfg.nodes = nodes;
            cfg.rho = rho;
            cfg.uzawa_iterations = uzawa_iters;
            cfg.majorant_iterations = majorant_iters;
            cfg.beta_update_iterations = beta_updates;
            cfg.c_constant = c_constant;
            return run_table_cmd(cfg, out);
        }
        if (solve->parsed()) {
            const ProblemSpec spec{single_f(f_list, -14.0), phi};
            if (snapshots.empty()) snapshots = {1, 2, 10000};
            return run_solve_cmd(spec, nodes, rho, uzawa_iters, snapshots, out);
        }
        if (majorant->parsed()) {
            const ProblemSpec spec{single_f(f_list, -14.0), phi};
            if (snapshots.empty()) snapshots = {1, 20, 10000};
            if (!majorant->count("--uzawa-iters")) uzawa_iters = 100;
            return run_majorant_cmd(spec, nodes, rho, uzawa_iters, majorant_iters,
                                    beta_updates, snapshots, c_constant, out);
        }
        const ProblemSpec spec{single_f(f_list, -14.0), phi};
        return run_bench_exact_cmd(spec, nodes, out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error (%s): %s\n", stage.c_str(), e.what());
        return 1;
    }
}
