#include "config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace lvx {

using nlohmann::json;

const char* run_model_name(RunModel m) {
  switch (m) {
    case RunModel::chern_simons:
      return "chern_simons";
    case RunModel::abelian_higgs:
      return "abelian_higgs";
    default:
      return "both";
  }
}

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw_invalid("config: " + field + ": " + what);
}

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw_invalid("config: unknown key \"" + it.key() + "\" in " + where);
}

double get_real(const json& obj, const std::string& field, double fallback) {
  if (!obj.contains(field)) return fallback;
  const json& v = obj.at(field);
  if (!v.is_number()) bad(field, "expected a number");
  return v.get<double>();
}

std::int64_t get_int(const json& obj, const std::string& field, std::int64_t fallback) {
  if (!obj.contains(field)) return fallback;
  const json& v = obj.at(field);
  if (!v.is_number_integer()) bad(field, "expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw_invalid(std::string("config: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw_invalid("config: top level must be an object");
  check_keys(j, "config",
             {"model", "dim", "lambda", "vortices", "K_cs", "K_ah", "schedule",
              "tol_outer", "tol_linear", "max_outer_iter", "max_cg_iter", "decay",
              "seed", "output_dir"});

  RunConfig c;

  if (!j.contains("model")) bad("model", "required");
  if (!j.at("model").is_string()) bad("model", "expected a string");
  const std::string ms = j.at("model").get<std::string>();
  if (ms == "chern_simons")
    c.model = RunModel::chern_simons;
  else if (ms == "abelian_higgs")
    c.model = RunModel::abelian_higgs;
  else if (ms == "both")
    c.model = RunModel::both;
  else
    bad("model", "must be chern_simons, abelian_higgs or both; got \"" + ms + "\"");

  const std::int64_t dim = get_int(j, "dim", -1);
  if (!j.contains("dim")) bad("dim", "required");
  if (dim < 2 || dim > 16) bad("dim", "must be an integer in [2, 16]");
  c.dim = static_cast<int>(dim);

  if (!j.contains("lambda")) bad("lambda", "required");
  c.lambda = get_real(j, "lambda", 0.0);
  if (!(c.lambda > 0.0) || !std::isfinite(c.lambda)) bad("lambda", "must be positive");

  if (!j.contains("vortices")) bad("vortices", "required");
  if (!j.at("vortices").is_array()) bad("vortices", "expected an array");
  for (std::size_t vi = 0; vi < j.at("vortices").size(); ++vi) {
    const json& entry = j.at("vortices")[vi];
    const std::string where = "vortices[" + std::to_string(vi) + "]";
    if (!entry.is_object()) bad(where, "expected an object {point, multiplicity}");
    check_keys(entry, where, {"point", "multiplicity"});
    if (!entry.contains("point") || !entry.at("point").is_array())
      bad(where + ".point", "expected an array of integers");
    VortexPoint vp;
    for (const json& coord : entry.at("point")) {
      if (!coord.is_number_integer()) bad(where + ".point", "coordinates must be integers");
      vp.point.coords.push_back(coord.get<Coord>());
    }
    if (vp.point.dim() != c.dim)
      bad(where + ".point", "has " + std::to_string(vp.point.dim()) +
                                " coordinates, expected dim = " + std::to_string(c.dim));
    vp.multiplicity = get_int(entry, "multiplicity", 1);
    if (vp.multiplicity < 1) bad(where + ".multiplicity", "must be a positive integer");
    c.vortices.push_back(std::move(vp));
  }

  c.K_cs = get_real(j, "K_cs", 0.0);
  if (j.contains("K_cs") && !(c.K_cs > 2.0 * c.lambda))
    bad("K_cs", "must exceed 2*lambda = " + std::to_string(2.0 * c.lambda) + ", got " +
                    std::to_string(c.K_cs));
  c.K_ah = get_real(j, "K_ah", 0.0);
  if (j.contains("K_ah") && !(c.K_ah > c.lambda))
    bad("K_ah", "must exceed lambda = " + std::to_string(c.lambda) + ", got " +
                    std::to_string(c.K_ah));

  if (j.contains("schedule")) {
    if (!j.at("schedule").is_array() || j.at("schedule").empty())
      bad("schedule", "expected a nonempty array of half-widths");
    c.schedule.clear();
    for (const json& hw : j.at("schedule")) {
      if (!hw.is_number_integer() || hw.get<std::int64_t>() < 1)
        bad("schedule", "half-widths must be integers >= 1");
      c.schedule.push_back(hw.get<Coord>());
    }
    for (std::size_t i = 1; i < c.schedule.size(); ++i)
      if (c.schedule[i] <= c.schedule[i - 1])
        bad("schedule", "must be strictly increasing");
  }
  for (const VortexPoint& vp : c.vortices)
    for (Coord x : vp.point.coords)
      if (std::llabs(x) > c.schedule.front())
        bad("vortices", "vortex " + to_string(vp.point) +
                            " lies outside the smallest scheduled box (half-width " +
                            std::to_string(c.schedule.front()) + ")");

  c.tol_outer = get_real(j, "tol_outer", c.tol_outer);
  if (!(c.tol_outer > 0.0)) bad("tol_outer", "must be positive");
  c.tol_linear = get_real(j, "tol_linear", c.tol_linear);
  if (!(c.tol_linear > 0.0)) bad("tol_linear", "must be positive");
  if (c.tol_linear > c.tol_outer / 100.0)
    bad("tol_linear", "must be at least 100x tighter than tol_outer so the "
                      "monotonicity slack stays meaningful");

  c.max_outer_iter = static_cast<int>(get_int(j, "max_outer_iter", c.max_outer_iter));
  if (c.max_outer_iter < 1) bad("max_outer_iter", "must be >= 1");
  c.max_cg_iter = static_cast<int>(get_int(j, "max_cg_iter", c.max_cg_iter));
  if (c.max_cg_iter < 1) bad("max_cg_iter", "must be >= 1");

  if (j.contains("decay")) {
    const json& d = j.at("decay");
    if (!d.is_object()) bad("decay", "expected an object");
    check_keys(d, "decay", {"annulus_fractions", "value_floor", "epsilon_accept"});
    if (d.contains("annulus_fractions")) {
      const json& fr = d.at("annulus_fractions");
      if (!fr.is_array() || fr.size() != 2 || !fr[0].is_number() || !fr[1].is_number())
        bad("decay.annulus_fractions", "expected [lo, hi]");
      c.decay.frac_lo = fr[0].get<double>();
      c.decay.frac_hi = fr[1].get<double>();
      if (!(c.decay.frac_lo > 0.0 && c.decay.frac_lo < c.decay.frac_hi &&
            c.decay.frac_hi < 1.0))
        bad("decay.annulus_fractions", "need 0 < lo < hi < 1");
    }
    c.decay.value_floor = get_real(d, "value_floor", c.decay.value_floor);
    if (!(c.decay.value_floor > 0.0)) bad("decay.value_floor", "must be positive");
    c.decay.epsilon_accept = get_real(d, "epsilon_accept", c.decay.epsilon_accept);
    if (!(c.decay.epsilon_accept > 0.0 && c.decay.epsilon_accept < 1.0))
      bad("decay.epsilon_accept", "must lie in (0,1)");
  }

  const std::int64_t seed = get_int(j, "seed", 1);
  if (seed < 0) bad("seed", "must be nonnegative");
  c.seed = static_cast<std::uint64_t>(seed);

  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string()) bad("output_dir", "expected a string");
    c.output_dir = j.at("output_dir").get<std::string>();
    if (c.output_dir.empty()) bad("output_dir", "must not be empty");
  }

  // Construction re-validates distinctness and positivity.
  (void)c.vortex_config();
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(errc::io, "config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

VortexConfig RunConfig::vortex_config() const {
  return VortexConfig(dim, lambda, vortices);
}

SolverParams RunConfig::solver_params(Model m) const {
  SolverParams p;
  p.screening = m == Model::chern_simons ? K_cs : K_ah;
  p.tol_outer = tol_outer;
  p.tol_linear = tol_linear;
  p.max_outer_iter = max_outer_iter;
  p.max_cg_iter = max_cg_iter;
  return p;
}

json RunConfig::echo() const {
  json v;
  v["model"] = run_model_name(model);
  v["dim"] = dim;
  v["lambda"] = lambda;
  json vs = json::array();
  for (const VortexPoint& vp : vortices) {
    json e;
    e["point"] = vp.point.coords;
    e["multiplicity"] = vp.multiplicity;
    vs.push_back(std::move(e));
  }
  v["vortices"] = std::move(vs);
  v["K_cs"] = K_cs == 0.0 ? 2.0 * lambda + 1.0 : K_cs;
  v["K_ah"] = K_ah == 0.0 ? lambda + 1.0 : K_ah;
  v["schedule"] = schedule;
  v["tol_outer"] = tol_outer;
  v["tol_linear"] = tol_linear;
  v["max_outer_iter"] = max_outer_iter;
  v["max_cg_iter"] = max_cg_iter;
  v["decay"] = {{"annulus_fractions", {decay.frac_lo, decay.frac_hi}},
                {"value_floor", decay.value_floor},
                {"epsilon_accept", decay.epsilon_accept}};
  v["seed"] = seed;
  v["output_dir"] = output_dir;
  return v;
}

}  // namespace lvx
