#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "chern_simons.hpp"

namespace lvx {

enum class RunModel { chern_simons, abelian_higgs, both };

const char* run_model_name(RunModel m);

struct DecayOptions {
  double frac_lo = 0.25;  // annulus = [frac_lo*hw, frac_hi*hw] on each box
  double frac_hi = 0.75;
  double value_floor = 1e-12;
  double epsilon_accept = 0.2;
};

// Validated run configuration. Every module precondition that can be
// checked statically is checked at parse time with a field-level message;
// unknown keys are errors.
struct RunConfig {
  RunModel model = RunModel::both;
  int dim = 2;
  double lambda = 1.0;
  std::vector<VortexPoint> vortices;
  double K_cs = 0.0;  // 0 = default 2*lambda + 1
  double K_ah = 0.0;  // 0 = default lambda + 1
  std::vector<Coord> schedule{10, 20, 40};
  double tol_outer = 1e-9;
  double tol_linear = 1e-11;
  int max_outer_iter = 20000;
  int max_cg_iter = 10000;
  DecayOptions decay;
  std::uint64_t seed = 1;
  std::string output_dir = "lvx_out";

  static RunConfig from_json_text(const std::string& text);
  static RunConfig from_file(const std::string& path);

  VortexConfig vortex_config() const;
  SolverParams solver_params(Model m) const;

  // Config echo with every default filled in.
  nlohmann::json echo() const;
};

}  // namespace lvx
