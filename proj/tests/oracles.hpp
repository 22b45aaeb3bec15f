#pragma once

// Independent reference implementations used only by the test binaries:
// a dense direct solver and a derivative-free scalar minimizer. Nothing here
// touches the library's solve paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracles {

// Gaussian elimination with partial pivoting.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a,
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

// Golden-section search for a unimodal g on [lo, hi].
inline double golden_section(const std::function<double(double)>& g, double lo,
                             double hi, double tol) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - r * (b - a), x2 = a + r * (b - a);
    double g1 = g(x1), g2 = g(x2);
    while (b - a > tol) {
        if (g1 <= g2) {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - r * (b - a);
            g1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + r * (b - a);
            g2 = g(x2);
        }
    }
    return 0.5 * (a + b);
}

// Vertex of the parabola through (x0 ± dx, x0); exact for quadratics, and a
// contraction toward the minimizer for smooth g. Escapes the value-noise
// floor that pure comparison search hits near a flat minimum.
inline double parabolic_vertex(const std::function<double(double)>& g, double x0,
                               double dx) {
    const double gm = g(x0 - dx), g0 = g(x0), gp = g(x0 + dx);
    const double denom = gm - 2.0 * g0 + gp;
    if (denom <= 0.0) return x0;
    return x0 + dx * 0.5 * (gm - gp) / denom;
}

// Scalar minimizer over [lo, hi]: golden section to localize, then iterated
// parabolic refinement with a fixed stencil chosen by the caller (large for
// quadratic objectives, small for merely smooth ones).
inline double minimize_scalar(const std::function<double(double)>& g, double lo,
                              double hi, double polish_dx) {
    double x = golden_section(g, lo, hi, 1e-2 * (hi - lo));
    for (int round = 0; round < 4; ++round)
        x = std::clamp(parabolic_vertex(g, x, polish_dx), lo, hi);
    if (g(lo) < g(x)) x = lo;  // clamped optimum at the boundary
    return x;
}

}  // namespace oracles
