#pragma once

#include <string>

#include "chern_simons.hpp"
#include "diagnostics.hpp"
#include "json.hpp"

namespace lvx {

// Locale-independent shortest-uniqueness-preserving decimal with 17
// significant digits.
std::string format_float(double v);

// Tab-separated dump over the domain closure in lexicographic vertex
// order: columns x_1..x_n, d (l1 norm), u. Boundary vertices carry the
// field's boundary values.
void write_field_dump(const std::string& path, const LatticeField& u);

// Plot-ready series: one "d log_abs_u" line per interior vertex with
// |u| > value_floor, sorted by d then vertex.
void write_series(const std::string& path, const LatticeField& u, double value_floor);

void write_text_file(const std::string& path, const std::string& content);

nlohmann::json decay_fit_json(const DecayFit& fit);
nlohmann::json domain_solution_json(const DomainSolution& sol, const std::string& dump_name);

}  // namespace lvx
