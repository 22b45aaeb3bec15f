#pragma once

#include <cstddef>
#include <vector>

namespace obstacle1d {

// Partition of [0,1] into intervals. Nodes are strictly increasing with
// nodes.front() == 0 and nodes.back() == 1.
struct Mesh {
    std::vector<double> nodes;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t element_count() const { return nodes.size() - 1; }
    double h(std::size_t e) const { return nodes[e + 1] - nodes[e]; }
    double midpoint(std::size_t e) const { return 0.5 * (nodes[e] + nodes[e + 1]); }
};

// n_nodes equally spaced nodes on [0,1]; n_nodes >= 2.
Mesh make_uniform_mesh(std::size_t n_nodes);

Mesh make_mesh(std::vector<double> nodes);

// Bisects every element `times` times (element count scales by 2^times).
Mesh refine(const Mesh& mesh, int times);

}  // namespace obstacle1d
