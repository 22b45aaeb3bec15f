#include "obstacle1d/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace obstacle1d {

Mesh make_uniform_mesh(std::size_t n_nodes) {
    if (n_nodes < 2) throw std::invalid_argument("mesh needs at least 2 nodes");
    Mesh mesh;
    mesh.nodes.resize(n_nodes);
    const double h = 1.0 / static_cast<double>(n_nodes - 1);
    for (std::size_t i = 0; i < n_nodes; ++i)
        mesh.nodes[i] = static_cast<double>(i) * h;
    mesh.nodes.front() = 0.0;
    mesh.nodes.back() = 1.0;
    return mesh;
}

Mesh make_mesh(std::vector<double> nodes) {
    if (nodes.size() < 2) throw std::invalid_argument("mesh needs at least 2 nodes");
    if (nodes.front() != 0.0 || nodes.back() != 1.0)
        throw std::invalid_argument("mesh must span [0,1]");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1]))
            throw std::invalid_argument("mesh nodes must be strictly increasing");
    return Mesh{std::move(nodes)};
}

Mesh refine(const Mesh& mesh, int times) {
    if (times < 0) throw std::invalid_argument("refinement count must be >= 0");
    Mesh out = mesh;
    for (int r = 0; r < times; ++r) {
        std::vector<double> fine;
        fine.reserve(out.nodes.size() * 2 - 1);
        for (std::size_t e = 0; e < out.element_count(); ++e) {
            fine.push_back(out.nodes[e]);
            fine.push_back(out.midpoint(e));
        }
        fine.push_back(out.nodes.back());
        out.nodes = std::move(fine);
    }
    return out;
}

}  // namespace obstacle1d
