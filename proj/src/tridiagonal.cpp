#include "obstacle1d/tridiagonal.hpp"

#include <cmath>
#include <stdexcept>

namespace obstacle1d {

std::vector<double> apply(const SymTridiagonal& T, const std::vector<double>& x) {
    const std::size_t n = T.size();
    if (x.size() != n) throw std::invalid_argument("apply: size mismatch");
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = T.diag[i] * x[i];
        if (i > 0) v += T.off[i - 1] * x[i - 1];
        if (i + 1 < n) v += T.off[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

TriFactor factorize(const SymTridiagonal& T) {
    const std::size_t n = T.size();
    TriFactor F;
    F.diag.resize(n);
    F.lower.assign(n > 0 ? n - 1 : 0, 0.0);
    F.diag[0] = T.diag[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (F.diag[i - 1] == 0.0) throw std::runtime_error("singular tridiagonal system");
        const double m = T.off[i - 1] / F.diag[i - 1];
        F.lower[i - 1] = m;
        F.diag[i] = T.diag[i] - m * T.off[i - 1];
    }
    if (n > 0 && F.diag[n - 1] == 0.0) throw std::runtime_error("singular tridiagonal system");
    return F;
}

void solve_in_place(const TriFactor& F, std::vector<double>& rhs) {
    const std::size_t n = F.diag.size();
    if (rhs.size() != n) throw std::invalid_argument("solve: size mismatch");
    for (std::size_t i = 1; i < n; ++i) rhs[i] -= F.lower[i - 1] * rhs[i - 1];
    rhs[n - 1] /= F.diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        // U has the original superdiagonal: off = lower * pivot
        rhs[i] = (rhs[i] - F.lower[i] * F.diag[i] * rhs[i + 1]) / F.diag[i];
    }
}

std::vector<double> solve(const SymTridiagonal& T, std::vector<double> rhs) {
    const TriFactor F = factorize(T);
    solve_in_place(F, rhs);
    return rhs;
}

SymTridiagonal assemble_stiffness(const Mesh& mesh) {
    const std::size_t n = mesh.node_count();
    SymTridiagonal T;
    T.diag.assign(n, 0.0);
    T.off.assign(n - 1, 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double w = 1.0 / mesh.h(e);
        T.diag[e] += w;
        T.diag[e + 1] += w;
        T.off[e] -= w;
    }
    return T;
}

SymTridiagonal assemble_mass(const Mesh& mesh) {
    const std::size_t n = mesh.node_count();
    SymTridiagonal T;
    T.diag.assign(n, 0.0);
    T.off.assign(n - 1, 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double h = mesh.h(e);
        T.diag[e] += h / 3.0;
        T.diag[e + 1] += h / 3.0;
        T.off[e] += h / 6.0;
    }
    return T;
}

SymTridiagonal interior_block(const SymTridiagonal& T) {
    const std::size_t n = T.size();
    if (n < 3) throw std::invalid_argument("interior block needs at least 3 rows");
    SymTridiagonal B;
    B.diag.assign(T.diag.begin() + 1, T.diag.end() - 1);
    B.off.assign(T.off.begin() + 1, T.off.end() - 1);
    return B;
}

}  // namespace obstacle1d
