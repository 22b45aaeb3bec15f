#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "obstacle1d/experiment.hpp"

using namespace obstacle1d;

TEST_CASE("default sweep covers f = -5 .. -20") {
    const std::vector<double> fs = default_f_list();
    REQUIRE(fs.size() == 16);
    CHECK(fs.front() == -5.0);
    CHECK(fs.back() == -20.0);
    for (std::size_t i = 1; i < fs.size(); ++i) CHECK(fs[i] == fs[i - 1] - 1.0);
}

TEST_CASE("inactive row reproduces the interpolation error exactly") {
    RunConfig cfg;
    cfg.f_list = {-5.0};
    const TableRow r = run_row(cfg, -5.0);
    const double expected = 25.0 / (24.0 * 640.0 * 640.0);
    CHECK(r.half_energy_err == doctest::Approx(expected).epsilon(1e-10));
    CHECK(r.energy_index == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.majorant_index == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(r.infeasibility == 0.0);
}

TEST_CASE("truncated active row matches the frozen reference values") {
    RunConfig cfg;
    cfg.uzawa_iterations = 100;
    const TableRow r = run_row(cfg, -14.0);
    CHECK(r.half_energy_err == doctest::Approx(8.729e-5).epsilon(5e-3));
    CHECK(r.energy_gap == doctest::Approx(3.689e-4).epsilon(5e-3));
    CHECK(r.majorant == doctest::Approx(3.716e-4).epsilon(5e-3));
    CHECK(r.energy_index == doctest::Approx(2.056).epsilon(5e-3));
    CHECK(r.majorant_index == doctest::Approx(1.004).epsilon(5e-3));
    CHECK(r.infeasibility > 0.0);
    CHECK(r.majorant >= r.energy_gap);
    CHECK(r.energy_gap >= r.half_energy_err);
}

TEST_CASE("parallel and serial row execution produce identical tables") {
    RunConfig cfg;
    cfg.f_list = {-6.0, -14.0, -19.0};
    cfg.uzawa_iterations = 100;
    cfg.warm_start_iterations = 1000;
    cfg.majorant_iterations = 500;
    cfg.beta_update_iterations = {250, 500};
    cfg.parallel_rows = true;
    const std::vector<TableRow> par = run_table(cfg);
    cfg.parallel_rows = false;
    const std::vector<TableRow> ser = run_table(cfg);
    REQUIRE(par.size() == 3);
    REQUIRE(ser.size() == 3);
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].f == cfg.f_list[i]);
        CHECK(par[i].half_energy_err == ser[i].half_energy_err);
        CHECK(par[i].energy_gap == ser[i].energy_gap);
        CHECK(par[i].energy_index == ser[i].energy_index);
        CHECK(par[i].majorant == ser[i].majorant);
        CHECK(par[i].majorant_index == ser[i].majorant_index);
        CHECK(par[i].infeasibility == ser[i].infeasibility);
    }
}

TEST_CASE("rows reject loads outside the benchmark family") {
    RunConfig cfg;
    CHECK_THROWS_AS(run_row(cfg, 2.0), std::invalid_argument);
}
