#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "obstacle1d/experiment.hpp"
#include "obstacle1d/mesh.hpp"

namespace obstacle1d {

// Fixed scientific format shared by the CSV and dump writers; output is
// byte-deterministic.
std::string format_sci(double value);

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows);
void write_table_csv(const std::string& path, const std::vector<TableRow>& rows);

// "x value" pairs, one per line, after a single "# name" comment line.
// Nodal data uses mesh nodes; elementwise data uses element midpoints.
void write_nodal_dump(const std::string& path, const std::string& name,
                      const Mesh& mesh, const std::vector<double>& values);
void write_element_dump(const std::string& path, const std::string& name,
                        const Mesh& mesh, const std::vector<double>& values);

}  // namespace obstacle1d
