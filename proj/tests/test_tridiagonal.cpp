#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "obstacle1d/mesh.hpp"
#include "obstacle1d/tridiagonal.hpp"

using namespace obstacle1d;

namespace {

// Oracle: dense Gaussian elimination with partial pivoting, independent of the
// Thomas path under test.
std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= m * a[k][j];
            b[i] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

std::vector<std::vector<double>> to_dense(const SymTridiagonal& t) {
    const std::size_t n = t.diag.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = t.diag[i];
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = t.off[i];
    }
    return a;
}

SymTridiagonal random_spd(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> off(-1.0, 1.0);
    std::uniform_real_distribution<double> bump(0.1, 2.0);
    SymTridiagonal t;
    t.off.resize(n - 1);
    t.diag.resize(n);
    for (auto& o : t.off) o = off(rng);
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        if (i > 0) row += std::abs(t.off[i - 1]);
        if (i + 1 < n) row += std::abs(t.off[i]);
        t.diag[i] = row + bump(rng);  // strict diagonal dominance
    }
    return t;
}

}  // namespace

TEST_CASE("thomas solve matches dense elimination on random SPD systems") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> rhs_dist(-3.0, 3.0);
    for (std::size_t n : {2u, 3u, 5u, 10u}) {
        for (int rep = 0; rep < 20; ++rep) {
            const SymTridiagonal t = random_spd(rng, n);
            std::vector<double> b(n);
            for (auto& x : b) x = rhs_dist(rng);
            const std::vector<double> got = solve(t, b);
            const std::vector<double> want = dense_solve(to_dense(t), b);
            for (std::size_t i = 0; i < n; ++i)
                CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("apply reproduces the dense matvec") {
    std::mt19937_64 rng(7);
    const SymTridiagonal t = random_spd(rng, 6);
    std::vector<double> x{1.0, -2.0, 0.5, 3.0, -1.0, 0.25};
    const auto a = to_dense(t);
    const std::vector<double> got = apply(t, x);
    for (std::size_t i = 0; i < 6; ++i) {
        double want = 0.0;
        for (std::size_t j = 0; j < 6; ++j) want += a[i][j] * x[j];
        CHECK(got[i] == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("cached factor solves match the one-shot path") {
    std::mt19937_64 rng(99);
    const SymTridiagonal t = random_spd(rng, 50);
    const TriFactor f = factorize(t);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int rep = 0; rep < 4; ++rep) {
        std::vector<double> x(50);
        for (auto& v : x) v = d(rng);
        std::vector<double> b = apply(t, x);
        const std::vector<double> one_shot = solve(t, b);
        solve_in_place(f, b);
        for (std::size_t i = 0; i < x.size(); ++i) {
            CHECK(b[i] == one_shot[i]);  // same factorization, bitwise
            CHECK(b[i] == doctest::Approx(x[i]).epsilon(1e-11));
        }
    }
}

TEST_CASE("stiffness and mass entries on a uniform mesh") {
    const Mesh m = make_uniform_mesh(5);
    const double h = 0.25;
    const SymTridiagonal a = assemble_stiffness(m);
    CHECK(a.diag[0] == doctest::Approx(1.0 / h));
    CHECK(a.diag[2] == doctest::Approx(2.0 / h));
    CHECK(a.off[1] == doctest::Approx(-1.0 / h));
    const SymTridiagonal mm = assemble_mass(m);
    CHECK(mm.diag[0] == doctest::Approx(h / 3.0));
    CHECK(mm.diag[2] == doctest::Approx(2.0 * h / 3.0));
    CHECK(mm.off[1] == doctest::Approx(h / 6.0));

    // Row sums of the mass matrix integrate the hat functions.
    std::vector<double> ones(5, 1.0);
    const std::vector<double> rows = apply(mm, ones);
    CHECK(rows[2] == doctest::Approx(h));
    CHECK(rows[0] == doctest::Approx(h / 2.0));
}

TEST_CASE("interior block drops the boundary rows") {
    const Mesh m = make_mesh({0.0, 0.1, 0.4, 0.8, 1.0});
    const SymTridiagonal a = assemble_stiffness(m);
    const SymTridiagonal in = interior_block(a);
    REQUIRE(in.diag.size() == 3);
    REQUIRE(in.off.size() == 2);
    CHECK(in.diag[0] == a.diag[1]);
    CHECK(in.diag[2] == a.diag[3]);
    CHECK(in.off[0] == a.off[1]);
    CHECK(in.off[1] == a.off[2]);
}

TEST_CASE("factorize reports singular systems") {
    SymTridiagonal t;
    t.diag = {1.0, 1.0};
    t.off = {1.0};
    CHECK_THROWS_AS(factorize(t), std::runtime_error);
    CHECK_THROWS_AS(apply(t, std::vector<double>(3, 0.0)), std::invalid_argument);
}
