#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "obstacle1d/benchmark.hpp"
#include "obstacle1d/integrals.hpp"
#include "obstacle1d/mesh.hpp"
#include "obstacle1d/uzawa.hpp"

using namespace obstacle1d;

TEST_CASE("zero load keeps the zero solution and zero multiplier") {
    const ProblemSpec spec{0.0, -1.0};
    const Mesh m = make_uniform_mesh(33);
    UzawaConfig cfg;
    cfg.n_iterations = 50;
    const UzawaResult r = uzawa_solve(spec, m, cfg);
    for (double v : r.v) CHECK(v == 0.0);
    for (double mu : r.mu) CHECK(mu == 0.0);
    CHECK(r.infeasibility == 0.0);
    CHECK(r.iterations_run == 50);
}

TEST_CASE("inactive load converges to the discrete unconstrained solution") {
    const ProblemSpec spec{-5.0, -1.0};
    const Mesh m = make_uniform_mesh(129);
    UzawaConfig cfg;
    cfg.n_iterations = 200;
    const UzawaResult r = uzawa_solve(spec, m, cfg);
    // Multiplier never activates, so v is the plain Galerkin solution, which
    // interpolates the parabola at the nodes (1D superconvergence).
    for (double mu : r.mu) CHECK(mu == 0.0);
    for (std::size_t i = 0; i < m.node_count(); ++i)
        CHECK(r.v[i] == doctest::Approx(exact_u(spec, m.nodes[i])).epsilon(1e-11));
    CHECK(r.infeasibility == 0.0);
}

TEST_CASE("multiplier stays nonnegative and the iterate approaches feasibility") {
    const ProblemSpec spec{-14.0, -1.0};
    const Mesh m = make_uniform_mesh(641);
    UzawaConfig cfg;
    cfg.n_iterations = 10000;
    cfg.snapshot_iterations = {100, 1000, 10000};
    const UzawaResult r = uzawa_solve(spec, m, cfg);
    REQUIRE(r.history.size() == 3);
    double prev = 1e9;
    for (const UzawaSnapshot& snap : r.history) {
        for (double mu : snap.mu) CHECK(mu >= 0.0);
        double infeas = 0.0;
        for (double v : snap.v) infeas = std::max(infeas, spec.phi - v);
        CHECK(infeas < prev);
        prev = infeas;
    }
    CHECK(r.infeasibility < 1e-4);
    CHECK(r.infeasibility == doctest::Approx(prev).epsilon(1e-12));

    // Energy of the clamped iterate decreases toward the exact value.
    double ej_prev = 0.0;
    bool first = true;
    for (const UzawaSnapshot& snap : r.history) {
        const double ej = energy(m, project_to_feasible(snap.v, spec.phi), spec.f) -
                          exact_energy(spec);
        CHECK(ej > 0.0);
        if (!first) CHECK(ej < ej_prev);
        ej_prev = ej;
        first = false;
    }
}

TEST_CASE("snapshot of a longer run equals the shorter run") {
    const ProblemSpec spec{-17.0, -1.0};
    const Mesh m = make_uniform_mesh(161);
    UzawaConfig small;
    small.n_iterations = 120;
    UzawaConfig big;
    big.n_iterations = 500;
    big.snapshot_iterations = {120};
    const UzawaResult a = uzawa_solve(spec, m, small);
    const UzawaResult b = uzawa_solve(spec, m, big);
    REQUIRE(b.history.size() == 1);
    CHECK(b.history[0].iteration == 120);
    CHECK(a.v == b.history[0].v);    // bitwise: the runs share every step
    CHECK(a.mu == b.history[0].mu);
}

TEST_CASE("runs are deterministic") {
    const ProblemSpec spec{-19.0, -1.0};
    const Mesh m = make_uniform_mesh(641);
    UzawaConfig cfg;
    cfg.n_iterations = 300;
    const UzawaResult a = uzawa_solve(spec, m, cfg);
    const UzawaResult b = uzawa_solve(spec, m, cfg);
    CHECK(a.v == b.v);
    CHECK(a.mu == b.mu);
    CHECK(a.infeasibility == b.infeasibility);
}

TEST_CASE("project_to_feasible clamps only below the obstacle") {
    const std::vector<double> v{0.0, -0.5, -1.5, -1.0, 0.2};
    const std::vector<double> p = project_to_feasible(v, -1.0);
    CHECK(p == std::vector<double>{0.0, -0.5, -1.0, -1.0, 0.2});
}

TEST_CASE("uzawa validates its inputs") {
    const Mesh m = make_uniform_mesh(17);
    UzawaConfig cfg;
    CHECK_THROWS_AS(uzawa_solve(ProblemSpec{-5.0, 1.0}, m, cfg), std::invalid_argument);
    cfg.rho = 0.0;
    CHECK_THROWS_AS(uzawa_solve(ProblemSpec{-5.0, -1.0}, m, cfg), std::invalid_argument);
    cfg.rho = 10.0;
    cfg.n_iterations = 0;
    CHECK_THROWS_AS(uzawa_solve(ProblemSpec{-5.0, -1.0}, m, cfg), std::invalid_argument);
}
