#include "obstacle1d/integrals.hpp"

namespace obstacle1d {

std::vector<double> element_derivative(const Mesh& mesh, const std::vector<double>& v) {
    std::vector<double> d(mesh.element_count());
    for_each_index(d.size(), [&](std::size_t e) {
        d[e] = (v[e + 1] - v[e]) / mesh.h(e);
    });
    return d;
}

}  // namespace obstacle1d
