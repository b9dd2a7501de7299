#pragma once

#include <functional>

#include "linear_elliptic.hpp"
#include "vortex.hpp"

namespace lvx {

struct SolverParams {
  double screening = 0.0;  // K; 0 picks the model default (2*lambda+1 or lambda+1)
  double tol_outer = 1e-9;
  double tol_linear = 1e-11;
  int max_outer_iter = 20000;
  int max_cg_iter = 10000;
  bool jacobi = false;

  // Numerical slack for the order relations the iteration guarantees
  // exactly in exact arithmetic.
  double slack() const { return 10.0 * tol_linear; }
};

struct IterationRecord {
  int k = 0;
  double sup_diff = 0.0;
  double energy = 0.0;  // chern_simons functional; 0 for abelian_higgs
  double linear_residual = 0.0;
  int cg_iterations = 0;
};

using IterationObserver = std::function<void(const IterationRecord&)>;

struct DomainSolution {
  DomainSolution(std::shared_ptr<const Domain> dom, LatticeField field)
      : domain(std::move(dom)), u(std::move(field)) {}

  std::shared_ptr<const Domain> domain;
  LatticeField u;  // zero boundary
  Model model = Model::chern_simons;
  double lambda = 0.0;
  double screening = 0.0;  // effective K
  double slack = 0.0;
  int iterations = 0;
  std::vector<double> sup_diff_trace;
  std::vector<double> energy_trace;  // empty for abelian_higgs
  double residual_sup = 0.0;
  double flux_gap = 0.0;
  double tail_sum = 0.0;  // sum of e^u(1-e^u) resp. (1-e^u)
};

// F(u) = 1/2 D(u,u) + sum_Omega [lambda/2 (e^u - 1)^2 + g u].
double energy_functional(const LatticeField& u, const VortexConfig& cfg);

// One step of the monotone scheme (Delta - K) u_k = lambda e^{u}(e^{u}-1)
// + g - K u with u = u_prev. Enforces u_k <= u_prev + slack and
// u_k <= slack; violations are consistency errors (K too small or
// tolerances too loose).
LatticeField cs_iterate(const LatticeField& u_prev, const VortexConfig& cfg,
                        const SolverParams& params, std::shared_ptr<const Domain> domain);

// Monotone iteration from u = 0 until the sup difference of consecutive
// iterates drops below tol_outer. Requires a connected domain containing
// all vortices and K > 2*lambda. Enforces per-step monotonicity, the
// energy descent inequality, the final equation residual and the tail
// bound; records the flux identity gap.
DomainSolution solve_cs_on_domain(const VortexConfig& cfg,
                                  std::shared_ptr<const Domain> domain,
                                  const SolverParams& params = {},
                                  const IterationObserver& observer = {});

struct ExhaustionStep {
  Coord half_width = 0;
  std::size_t interior_count = 0;
  int iterations = 0;
  double residual_sup = 0.0;
  double flux_gap = 0.0;
  double l2_norm = 0.0;
  double tail_sum = 0.0;
};

struct ExhaustionReport {
  std::vector<DomainSolution> solutions;  // one per schedule entry
  std::vector<ExhaustionStep> steps;
  // Between consecutive domains, on the overlap (the smaller domain):
  std::vector<double> monotone_violation;  // max(u_{i+1} - u_i), <= slack
  // Restricted to the first (smallest) domain:
  std::vector<double> sup_diff_on_first;
};

class exhaustion_error : public error {
 public:
  exhaustion_error(std::string message, errc cause, std::vector<ExhaustionStep> done)
      : error(cause, std::move(message)), completed_(std::move(done)) {}
  const std::vector<ExhaustionStep>& completed() const { return completed_; }

 private:
  std::vector<ExhaustionStep> completed_;
};

// Solves on origin-centred boxes of the given strictly increasing
// half-widths and checks domain monotonicity u_{i+1} <= u_i + slack on
// each overlap. A per-domain failure raises exhaustion_error carrying the
// completed step summaries.
ExhaustionReport solve_cs_exhaustion(const VortexConfig& cfg,
                                     const std::vector<Coord>& schedule,
                                     const SolverParams& params = {},
                                     const IterationObserver& observer = {});

struct ComparisonResult {
  bool dominated = false;   // candidate <= u + slack everywhere
  double max_violation = 0.0;  // max(candidate - u), clamped at 0
};

// Comparison check against a candidate subsolution: candidate must satisfy
// Delta V >= nl(V) + g - subsolution_tol on the interior and V <=
// subsolution_tol on the boundary (else invalid_input naming the worst
// vertex). Returns whether the solution dominates it.
ComparisonResult check_comparison(const LatticeField& candidate,
                                  const DomainSolution& solution,
                                  const VortexConfig& cfg,
                                  double subsolution_tol = 1e-8);

namespace detail {

// Shared machinery for both models (the Abelian Higgs scheme differs only
// in nonlinearity, screening bound and the lower sandwich barrier).
double effective_screening(Model m, double lambda, double screening);

struct StepResult {
  LatticeField u;
  double linear_residual = 0.0;
  int cg_iterations = 0;
};

StepResult monotone_step(const LatticeField& u_prev, const VortexConfig& cfg, Model m,
                         double K, const SolverParams& params,
                         const LatticeField* lower);

DomainSolution solve_monotone(const VortexConfig& cfg,
                              std::shared_ptr<const Domain> domain, Model model,
                              const SolverParams& params, const LatticeField* lower,
                              const IterationObserver& observer);

}  // namespace detail

}  // namespace lvx
