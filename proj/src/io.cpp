#include "obstacle1d/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace obstacle1d {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace

std::string format_sci(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6e", value);
    return buf;
}

void write_table_csv(std::ostream& out, const std::vector<TableRow>& rows) {
    out << "f,half_energy_err,energy_gap,energy_index,majorant,majorant_index,"
           "infeasibility\n";
    for (const TableRow& r : rows) {
        out << format_sci(r.f) << ',' << format_sci(r.half_energy_err) << ','
            << format_sci(r.energy_gap) << ',' << format_sci(r.energy_index) << ','
            << format_sci(r.majorant) << ',' << format_sci(r.majorant_index) << ','
            << format_sci(r.infeasibility) << '\n';
    }
}

void write_table_csv(const std::string& path, const std::vector<TableRow>& rows) {
    std::ofstream out = open_or_throw(path);
    write_table_csv(out, rows);
}

void write_nodal_dump(const std::string& path, const std::string& name,
                      const Mesh& mesh, const std::vector<double>& values) {
    if (values.size() != mesh.node_count())
        throw std::invalid_argument("nodal dump: size mismatch");
    std::ofstream out = open_or_throw(path);
    out << "# " << name << '\n';
    for (std::size_t i = 0; i < values.size(); ++i)
        out << format_g17(mesh.nodes[i]) << ' ' << format_g17(values[i]) << '\n';
}

void write_element_dump(const std::string& path, const std::string& name,
                        const Mesh& mesh, const std::vector<double>& values) {
    if (values.size() != mesh.element_count())
        throw std::invalid_argument("element dump: size mismatch");
    std::ofstream out = open_or_throw(path);
    out << "# " << name << '\n';
    for (std::size_t e = 0; e < values.size(); ++e)
        out << format_g17(mesh.midpoint(e)) << ' ' << format_g17(values[e]) << '\n';
}

}  // namespace obstacle1d
