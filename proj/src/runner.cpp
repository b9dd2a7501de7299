#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>

#include "abelian_higgs.hpp"
#include "calculus.hpp"
#include "oracle.hpp"
#include "report.hpp"
#include "sampling.hpp"

namespace lvx {

namespace {

using nlohmann::json;

class StageClock {
 public:
  void record(const std::string& name, double seconds) {
    stages_.push_back({{"stage", name}, {"seconds", seconds}});
    total_ += seconds;
  }

  template <typename F>
  auto time(const std::string& name, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    record(name, dt.count());
    return result;
  }

  json to_json() const {
    return {{"stages", stages_}, {"total_seconds", total_}};
  }

 private:
  json stages_ = json::array();
  double total_ = 0.0;
};

std::string dump_name(Model m, Coord hw) {
  return std::string("field_") + (m == Model::chern_simons ? "cs" : "ah") + "_hw" +
         std::to_string(hw) + ".tsv";
}

json run_decay_fit(const LatticeField& u, const VortexConfig& vc,
                   const DecayOptions& opts, Coord hw) {
  const auto d_min = static_cast<std::int64_t>(std::llround(opts.frac_lo * hw));
  const auto d_max = static_cast<std::int64_t>(std::llround(opts.frac_hi * hw));
  try {
    const DecayFit fit = fit_decay_rate(u, vc, d_min, d_max, opts.value_floor);
    json j = decay_fit_json(fit);
    j["slope_acceptable"] = fit.slope >= fit.m_theory * (1.0 - opts.epsilon_accept);
    return j;
  } catch (const error& e) {
    if (e.code() != errc::diagnostic) throw;
    return {{"skipped", true}, {"reason", e.what()}};
  }
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  RunResult res;
  res.output_dir = cfg.output_dir;

  std::error_code ec;
  fs::create_directories(cfg.output_dir, ec);
  if (ec) {
    res.exit_code = 1;
    res.summary = "cannot create output directory " + cfg.output_dir + ": " +
                  ec.message() + "\n";
    return res;
  }
  const auto path_in = [&](const std::string& name) {
    return (fs::path(cfg.output_dir) / name).string();
  };

  const VortexConfig vc = cfg.vortex_config();
  const bool want_cs = cfg.model != RunModel::abelian_higgs;
  const bool want_ah = cfg.model != RunModel::chern_simons;
  StageClock clock;
  std::string stage = "setup";

  try {
    json report;
    report["report_version"] = 1;
    report["config"] = cfg.echo();
    report["trivial"] = vc.total_multiplicity() == 0;
    report["timings_file"] = "timings.json";

    // Chern-Simons solutions are needed for both models: they are the
    // subsolution barrier of the Abelian Higgs iteration.
    stage = "solve_chern_simons";
    ExhaustionReport cs = clock.time(stage, [&] {
      return solve_cs_exhaustion(vc, cfg.schedule,
                                 cfg.solver_params(Model::chern_simons));
    });

    std::vector<DomainSolution> ah;
    if (want_ah) {
      for (std::size_t i = 0; i < cs.solutions.size(); ++i) {
        stage = "solve_abelian_higgs(half_width=" +
                std::to_string(cfg.schedule[i]) + ")";
        ah.push_back(clock.time(stage, [&] {
          return solve_ah(vc, cs.solutions[i].domain,
                          cfg.solver_params(Model::abelian_higgs), &cs.solutions[i]);
        }));
      }
    }

    stage = "artifacts";
    const Coord hw_max = cfg.schedule.back();
    if (want_cs) {
      json domains = json::array();
      for (std::size_t i = 0; i < cs.solutions.size(); ++i) {
        const std::string name = dump_name(Model::chern_simons, cfg.schedule[i]);
        write_field_dump(path_in(name), cs.solutions[i].u);
        json d = domain_solution_json(cs.solutions[i], name);
        d["half_width"] = cfg.schedule[i];
        domains.push_back(std::move(d));
      }
      json m;
      m["domains"] = std::move(domains);
      m["exhaustion"] = {{"monotone_violation", cs.monotone_violation},
                         {"sup_diff_on_first", cs.sup_diff_on_first}};
      stage = "decay_fit(chern_simons)";
      m["decay_fit"] = run_decay_fit(cs.solutions.back().u, vc, cfg.decay, hw_max);
      m["series_file"] = "series_cs.tsv";
      write_series(path_in("series_cs.tsv"), cs.solutions.back().u,
                   cfg.decay.value_floor);
      report["models"]["chern_simons"] = std::move(m);
      stage = "artifacts";
    }
    if (want_ah) {
      json domains = json::array();
      json sandwich = json::array();
      for (std::size_t i = 0; i < ah.size(); ++i) {
        const std::string name = dump_name(Model::abelian_higgs, cfg.schedule[i]);
        write_field_dump(path_in(name), ah[i].u);
        json d = domain_solution_json(ah[i], name);
        d["half_width"] = cfg.schedule[i];
        domains.push_back(std::move(d));

        // u_cs <= u_ah <= 0 within slack on each box.
        double lower_viol = 0.0, upper_viol = 0.0;
        for (std::size_t k = 0; k < ah[i].u.interior().size(); ++k) {
          lower_viol = std::max(lower_viol, cs.solutions[i].u.interior()[k] -
                                                ah[i].u.interior()[k]);
          upper_viol = std::max(upper_viol, ah[i].u.interior()[k]);
        }
        sandwich.push_back({{"half_width", cfg.schedule[i]},
                            {"max_lower_violation", lower_viol},
                            {"max_upper_violation", upper_viol},
                            {"holds", lower_viol <= ah[i].slack &&
                                          upper_viol <= ah[i].slack}});
      }
      json m;
      m["domains"] = std::move(domains);
      m["sandwich"] = std::move(sandwich);
      stage = "decay_fit(abelian_higgs)";
      m["decay_fit"] = run_decay_fit(ah.back().u, vc, cfg.decay, hw_max);
      m["series_file"] = "series_ah.tsv";
      write_series(path_in("series_ah.tsv"), ah.back().u, cfg.decay.value_floor);
      report["models"]["abelian_higgs"] = std::move(m);
      stage = "artifacts";
    }

    res.report_path = path_in("report.json");
    write_text_file(res.report_path, report.dump(2) + "\n");
    write_text_file(path_in("timings.json"), clock.to_json().dump(2) + "\n");

    res.summary += "wrote " + res.report_path + "\n";
    if (report["trivial"].get<bool>())
      res.summary += "trivial configuration (no vortices): all fields zero\n";
    for (const auto& [mname, mjson] : report["models"].items()) {
      res.summary += mname + ": " +
                     std::to_string(mjson["domains"].size()) + " domain(s)";
      const json& fit = mjson["decay_fit"];
      if (fit.contains("slope"))
        res.summary += ", decay slope " + format_float(fit["slope"].get<double>()) +
                       " (m_theory " + format_float(fit["m_theory"].get<double>()) +
                       ")";
      res.summary += "\n";
    }
    res.exit_code = 0;
    return res;
  } catch (const error& e) {
    json err;
    err["stage"] = stage;
    err["code"] = errc_name(e.code());
    err["message"] = e.what();
    write_text_file(path_in("error.json"), err.dump(2) + "\n");
    res.exit_code = 1;
    res.summary = std::string("error in stage ") + stage + ": " + e.what() + "\n";
    return res;
  }
}

namespace {

struct Battery {
  VerifyResult result;

  void check(const std::string& name, bool ok, const std::string& metric) {
    ++result.checks;
    if (!ok) ++result.failures;
    result.table += std::string(ok ? "PASS " : "FAIL ") + name;
    if (!metric.empty()) result.table += "  " + metric;
    result.table += '\n';
  }
};

std::shared_ptr<const Domain> small_box(int dim, Coord hw) {
  return Domain::box(Vertex{std::vector<Coord>(dim, 0)}, hw);
}

}  // namespace

VerifyResult verify(const RunConfig& cfg) {
  Battery battery;
  Rng rng(cfg.seed);
  const int dim = cfg.dim;

  {  // Green identity and the summation identity it implies.
    auto dom = small_box(dim, dim == 2 ? 4 : 2);
    double max_rel = 0.0, max_sum_gap = 0.0;
    for (int t = 0; t < 100; ++t) {
      const LatticeField f = random_field(dom, rng, -2.0, 2.0, true);
      const LatticeField g = random_field(dom, rng, -2.0, 2.0, true);
      const double gap = green_identity_gap(f, g);
      max_rel = std::max(max_rel, gap / (1.0 + std::abs(dirichlet_form(f, g))));

      const auto lap = laplacian(g);
      const auto dn = normal_derivative(g);
      double s = 0.0;
      for (double v : lap) s += v;
      for (double v : dn) s -= v;
      max_sum_gap = std::max(max_sum_gap, std::abs(s));
    }
    battery.check("green_identity", max_rel <= 1e-10,
                  "max relative gap " + format_float(max_rel));
    battery.check("summation_identity", max_sum_gap <= 1e-10,
                  "max gap " + format_float(max_sum_gap));
  }

  {  // Maximum principle on randomized screened systems.
    int trials = 0, passed = 0;
    std::string first_failure;
    for (int t = 0; t < 1000; ++t) {
      std::shared_ptr<const Domain> dom;
      if (t % 2 == 0) {
        dom = small_box(dim, 1 + rng.uniform_int(0, dim == 2 ? 2 : 1));
      } else {
        auto verts = random_connected_cluster(
            dim, static_cast<std::size_t>(rng.uniform_int(1, 30)), rng);
        dom = Domain::from_vertices(dim, verts);
      }
      const LatticeField f = random_field(dom, rng, 0.1, 3.0, true);
      std::vector<double> rhs(dom->interior_count());
      for (double& v : rhs) v = rng.uniform(0.0, 2.0);
      std::vector<double> bdata(dom->boundary_count());
      for (double& v : bdata) v = rng.uniform(-1.5, 0.0);
      const auto sol = dense_solve_variable(*dom, f.interior(), rhs, bdata);
      const LatticeField v(dom, sol, bdata);
      const ProbeResult pr = max_principle_probe(f, v, 1e-9);
      ++trials;
      if (pr.outcome == ProbeOutcome::pass)
        ++passed;
      else if (first_failure.empty())
        first_failure = pr.detail.empty() ? "probe failed" : pr.detail;
    }
    battery.check("max_principle_probe", passed == trials,
                  std::to_string(passed) + "/" + std::to_string(trials) + " trials" +
                      (first_failure.empty() ? "" : "; " + first_failure));
  }

  {  // GNS ratio: scale invariance and a stable empirical constant.
    double max_ratio = 0.0, worst_scale_gap = 0.0;
    for (int t = 0; t < 200; ++t) {
      auto verts = random_connected_cluster(
          dim, static_cast<std::size_t>(rng.uniform_int(1, 40)), rng);
      auto dom = Domain::from_vertices(dim, verts);
      LatticeField v = random_field(dom, rng, -1.0, 1.0, false);
      bool all_zero = true;
      for (double x : v.interior())
        if (x != 0.0) all_zero = false;
      if (all_zero) continue;
      const double r = gns_ratio(v);
      max_ratio = std::max(max_ratio, r);
      const double c = rng.uniform(0.5, 4.0);
      std::vector<double> scaled(v.interior().begin(), v.interior().end());
      for (double& x : scaled) x *= c;
      worst_scale_gap =
          std::max(worst_scale_gap, std::abs(gns_ratio(LatticeField(dom, scaled)) - r));
    }
    battery.check("gns_scale_invariance", worst_scale_gap <= 1e-12,
                  "worst gap " + format_float(worst_scale_gap));
    battery.check("gns_ratio_bounded", std::isfinite(max_ratio) && max_ratio > 0.0,
                  "empirical constant " + format_float(max_ratio));
  }

  {  // Isoperimetric ratios.
    bool boxes_exact = true;
    if (dim == 2)
      for (Coord l = 1; l <= 10 && boxes_exact; ++l) {
        // L x L squares: hand-rolled vertex list (side L, not 2L+1).
        std::vector<Vertex> verts;
        for (Coord a = 0; a < l; ++a)
          for (Coord b = 0; b < l; ++b) verts.push_back(Vertex{a, b});
        boxes_exact = isoperimetric_ratio(2, verts) == 4.0;
      }
    const Vertex origin{std::vector<Coord>(dim, 0)};
    const bool singleton_ok =
        isoperimetric_ratio(dim, {origin}) == static_cast<double>(2 * dim);
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int t = 0; t < 500; ++t) {
      auto verts = random_connected_cluster(
          dim, static_cast<std::size_t>(rng.uniform_int(1, 200)), rng);
      min_ratio = std::min(min_ratio, isoperimetric_ratio(dim, verts));
    }
    battery.check("isoperimetric_boxes", boxes_exact,
                  dim == 2 ? "squares give exactly 4" : "skipped (dim != 2)");
    battery.check("isoperimetric_sampling", singleton_ok && min_ratio > 0.0,
                  "min sampled ratio " + format_float(min_ratio));
  }

  {  // Barrier margins, including the saturation trend as epsilon -> 0.
    bool nonneg = true;
    double prev = std::numeric_limits<double>::infinity();
    bool shrinking = true;
    for (double eps : {0.9, 0.5, 0.1, 0.01}) {
      const BarrierReport rep = barrier_check(dim, cfg.lambda, eps, 1, 80);
      nonneg = nonneg && rep.min_margin >= 0.0;
      if (eps != 0.9) {
        shrinking = shrinking && rep.min_margin <= prev;
        prev = rep.min_margin;
      } else {
        prev = rep.min_margin;
      }
    }
    battery.check("barrier_margin", nonneg && shrinking,
                  nonneg ? "min margins nonnegative, shrinking with epsilon"
                         : "negative margin found");
  }

  {  // Dense-oracle comparisons on small boxes.
    const Vertex origin{std::vector<Coord>(dim, 0)};
    const VortexConfig vc(dim, cfg.lambda, {{origin, 1}});
    SolverParams params;
    params.tol_outer = 1e-10;

    auto dom = small_box(dim, 2);
    const DomainSolution sol = solve_cs_on_domain(vc, dom, params);
    const NewtonResult newton =
        newton_solve(vc, dom, Model::chern_simons, LatticeField::zero(dom));
    const double gap = sup_diff(sol.u.interior(), newton.u.interior());
    battery.check("oracle_newton_agreement", gap <= 1e-8,
                  "sup gap " + format_float(gap));

    // Singleton screened solve has the closed form -4pi/(2n+K).
    auto single = Domain::from_vertices(dim, {origin});
    SolverParams sp;
    sp.screening = 3.0;
    const VortexConfig vc1(dim, 1.0, {{origin, 1}});
    const LatticeField u1 =
        cs_iterate(LatticeField::zero(single), vc1, sp, single);
    const double expected = -four_pi / (2.0 * dim + 3.0);
    battery.check("singleton_closed_form",
                  std::abs(u1.interior()[0] - expected) <= 1e-12,
                  "value " + format_float(u1.interior()[0]));

    std::vector<double> rhs(dom->interior_count());
    for (double& v : rhs) v = rng.uniform(-3.0, 3.0);
    ScreenedSystem sys{dom, 3.0, rhs};
    const ScreenedSolution cg = solve_screened(sys, {1e-12, 10000, false});
    const auto dense = dense_solve_screened(*dom, 3.0, rhs);
    const double lin_gap = sup_diff(cg.u.interior(), dense);
    battery.check("cg_vs_dense_elimination", lin_gap <= 1e-10,
                  "sup gap " + format_float(lin_gap));
  }

  return battery.result;
}

}  // namespace lvx
