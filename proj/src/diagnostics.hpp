#pragma once

#include <string>

#include "vortex.hpp"

namespace lvx {

// Theoretical exponential decay modulus m = ln(1 + lambda/(2n)).
double decay_modulus(int dim, double lambda);

// |sum_boundary du/dn - sum_interior nl(u) - C| for a converged solution
// with zero boundary data. Zero in exact arithmetic by the summed equation.
double flux_identity_gap(const LatticeField& u, const VortexConfig& cfg, Model m);

// sum over the interior of e^u(1-e^u) (chern_simons) or (1-e^u)
// (abelian_higgs); for converged solutions bounded by C/lambda.
double flux_bulk_sum(const LatticeField& u, Model m);

struct DecayFit {
  double m_theory = 0.0;
  double slope = 0.0;  // fitted -d log|u| / d d(x)
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t sample_count = 0;
  std::int64_t d_min = 0;
  std::int64_t d_max = 0;
  double epsilon_implied = 0.0;  // 1 - slope/m_theory
  // Same fit on per-shell means of log|u|; averaging removes the angular
  // spread the l1 metric induces at fixed distance.
  double slope_shell = 0.0;
  double r_squared_shell = 0.0;
  std::size_t shell_count = 0;
};

// Least squares on (d(x), log|u(x)|) over vertices with d_min <= d(x) <=
// d_max and |u(x)| > value_floor, d = l1 distance to the origin. Requires
// the annulus to stay at least 2 layers away from the boundary and at
// least 10 usable samples; otherwise a diagnostic error suggests a larger
// box.
DecayFit fit_decay_rate(const LatticeField& u, const VortexConfig& cfg,
                        std::int64_t d_min, std::int64_t d_max, double value_floor);

struct BarrierReport {
  double m = 0.0;
  double c3 = 0.0;  // 2n((1+lambda/2n)^{1-eps} - 1)
  double min_margin = 0.0;
  std::int64_t argmin_distance = 0;
  int argmin_zero_coords = 0;
  std::int64_t pairs_checked = 0;
};

// Margin Delta h - c3 h of the barrier h(x) = -e^{-m(1-eps)d(x)}.
// At a vertex with t = d(x) >= 1 and z zero coordinates the margin is
// q^t (2n + c3 - (n-z)(q + 1/q) - 2 z q) with q = e^{-m(1-eps)}; the
// check enumerates every (t, z) class in the radius range, which covers
// all vertices exactly.
BarrierReport barrier_check(int dim, double lambda, double epsilon, std::int64_t r_min,
                            std::int64_t r_max);
inline BarrierReport barrier_check(const VortexConfig& cfg, double epsilon,
                                   std::int64_t r_min, std::int64_t r_max) {
  return barrier_check(cfg.dim(), cfg.lambda(), epsilon, r_min, r_max);
}

// Same margin evaluated at one explicit vertex by enumerating its 2n
// neighbours; independent route used to cross-check the class formula.
double barrier_margin_at(int dim, double lambda, double epsilon, const Vertex& x);

// ||v||_{l4} / (||v||_D^{1/2} ||v||_{l2}^{1/2}) of the null extension of
// the interior values. Scale-invariant; throws invalid_input on the zero
// field.
double gns_ratio(const LatticeField& v);

// |boundary| / |vertices|^{(n-1)/n}.
double isoperimetric_ratio(int dim, const std::vector<Vertex>& vertices);

enum class ProbeOutcome { pass, fail, not_applicable };

struct ProbeResult {
  ProbeOutcome outcome = ProbeOutcome::not_applicable;
  double max_interior_value = 0.0;  // meaningful for pass/fail
  std::string detail;
};

// Maximum-principle probe: under the hypotheses f > 0 on the closure,
// (Delta - f)v >= 0 on the interior and v <= 0 on the boundary (all within
// tol), the conclusion v <= 0 on the closure is asserted. Hypothesis
// violations yield not_applicable, never a verdict.
ProbeResult max_principle_probe(const LatticeField& f, const LatticeField& v,
                                double tol = 1e-12);

}  // namespace lvx
