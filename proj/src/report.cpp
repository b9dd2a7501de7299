#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace lvx {

std::string format_float(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error(errc::io, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw error(errc::io, "write failed: " + path);
}

void write_field_dump(const std::string& path, const LatticeField& u) {
  const Domain& dom = u.domain();
  std::string s;
  for (int i = 1; i <= dom.dim(); ++i) {
    s += "x_" + std::to_string(i);
    s += '\t';
  }
  s += "d\tu\n";

  const auto& in = dom.vertices();
  const auto& bd = dom.boundary();
  std::size_t i = 0, b = 0;
  auto emit = [&](const Vertex& v, double val) {
    for (Coord c : v.coords) {
      s += std::to_string(c);
      s += '\t';
    }
    s += std::to_string(l1_norm(v));
    s += '\t';
    s += format_float(val);
    s += '\n';
  };
  while (i < in.size() || b < bd.size()) {
    if (b == bd.size() || (i < in.size() && in[i] < bd[b])) {
      emit(in[i], u.interior()[i]);
      ++i;
    } else {
      emit(bd[b], u.boundary_value(b));
      ++b;
    }
  }
  write_text_file(path, s);
}

void write_series(const std::string& path, const LatticeField& u, double value_floor) {
  const Domain& dom = u.domain();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dom.interior_count(); ++i)
    if (std::abs(u.interior()[i]) > value_floor) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) {
    const auto da = l1_norm(dom.vertices()[a]), dc = l1_norm(dom.vertices()[c]);
    if (da != dc) return da < dc;
    return dom.vertices()[a] < dom.vertices()[c];
  });
  std::string s = "d\tlog_abs_u\n";
  for (std::size_t i : idx) {
    s += std::to_string(l1_norm(dom.vertices()[i]));
    s += '\t';
    s += format_float(std::log(std::abs(u.interior()[i])));
    s += '\n';
  }
  write_text_file(path, s);
}

nlohmann::json decay_fit_json(const DecayFit& fit) {
  nlohmann::json j;
  j["m_theory"] = fit.m_theory;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["r_squared"] = fit.r_squared;
  j["sample_count"] = fit.sample_count;
  j["annulus"] = {fit.d_min, fit.d_max};
  j["epsilon_implied"] = fit.epsilon_implied;
  if (fit.shell_count >= 2) {
    j["slope_shell_mean"] = fit.slope_shell;
    j["r_squared_shell_mean"] = fit.r_squared_shell;
    j["shell_count"] = fit.shell_count;
  }
  return j;
}

nlohmann::json domain_solution_json(const DomainSolution& sol,
                                    const std::string& dump_name) {
  nlohmann::json j;
  j["interior_count"] = sol.domain->interior_count();
  j["boundary_count"] = sol.domain->boundary_count();
  j["screening"] = sol.screening;
  j["iterations"] = sol.iterations;
  j["sup_diff_trace"] = sol.sup_diff_trace;
  if (!sol.energy_trace.empty()) j["energy_trace"] = sol.energy_trace;
  j["residual_sup"] = sol.residual_sup;
  j["flux_gap"] = sol.flux_gap;
  j["tail_sum"] = sol.tail_sum;
  j["l2_norm"] = l2_norm(sol.u.interior());
  j["min_value"] = *std::min_element(sol.u.interior().begin(), sol.u.interior().end());
  j["field_dump"] = dump_name;
  return j;
}

}  // namespace lvx
