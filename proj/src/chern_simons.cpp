#include "chern_simons.hpp"

#include <cmath>
#include <limits>

#include "calculus.hpp"
#include "diagnostics.hpp"

namespace lvx {

double energy_functional(const LatticeField& u, const VortexConfig& cfg) {
  const LatticeField g = vortex_source(cfg, u.domain_ptr());
  double sum = 0.0;
  const double lambda = cfg.lambda();
  for (std::size_t i = 0; i < u.interior().size(); ++i) {
    const double e = std::expm1(u.interior()[i]);  // e^u - 1
    sum += 0.5 * lambda * e * e + g.interior()[i] * u.interior()[i];
  }
  return 0.5 * dirichlet_form(u, u) + sum;
}

namespace {

void validate_params(const SolverParams& p) {
  if (!(p.tol_outer > 0.0)) throw_invalid("solver: tol_outer must be positive");
  if (!(p.tol_linear > 0.0)) throw_invalid("solver: tol_linear must be positive");
  if (p.max_outer_iter < 1) throw_invalid("solver: max_outer_iter must be >= 1");
  if (p.max_cg_iter < 1) throw_invalid("solver: max_cg_iter must be >= 1");
}

}  // namespace

namespace detail {

double effective_screening(Model m, double lambda, double screening) {
  const double bound = m == Model::chern_simons ? 2.0 * lambda : lambda;
  if (screening == 0.0) return bound + 1.0;
  if (!std::isfinite(screening) || !(screening > bound))
    throw_invalid(std::string("solver: screening constant K = ") +
                  std::to_string(screening) + " must exceed " +
                  (m == Model::chern_simons ? "2*lambda = " : "lambda = ") +
                  std::to_string(bound));
  return screening;
}

// One screened solve (Delta - K) u_new = nl(u_prev) + g - K u_prev plus the
// order checks the scheme guarantees: u_new <= u_prev, u_new <= 0, and
// u_new >= lower when a lower barrier is supplied, all within slack.
StepResult monotone_step(const LatticeField& u_prev, const VortexConfig& cfg, Model m,
                         double K, const SolverParams& params,
                         const LatticeField* lower) {
  const auto& domain = u_prev.domain_ptr();
  const LatticeField g = vortex_source(cfg, domain);
  const std::size_t n = domain->interior_count();
  const double lambda = cfg.lambda();

  ScreenedSystem sys;
  sys.domain = domain;
  sys.screening = K;
  sys.rhs.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    sys.rhs[i] = nonlinearity(m, lambda, u_prev.interior()[i]) + g.interior()[i] -
                 K * u_prev.interior()[i];

  SolveOptions opts;
  opts.tol = params.tol_linear;
  opts.max_iter = params.max_cg_iter;
  opts.jacobi = params.jacobi;
  ScreenedSolution sol = solve_screened(sys, opts);

  const double slack = params.slack();
  const auto& dom = *domain;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = sol.u.interior()[i];
    if (v - u_prev.interior()[i] > slack)
      throw error(errc::consistency,
                  "monotone step: iterate increased by " +
                      std::to_string(v - u_prev.interior()[i]) + " at vertex " +
                      to_string(dom.vertices()[i]) +
                      " (K too small or tolerances too loose)");
    if (v > slack)
      throw error(errc::consistency, "monotone step: iterate positive (" +
                                         std::to_string(v) + ") at vertex " +
                                         to_string(dom.vertices()[i]));
    if (lower && lower->interior()[i] - v > slack)
      throw error(errc::consistency,
                  "monotone step: iterate crossed the lower barrier by " +
                      std::to_string(lower->interior()[i] - v) + " at vertex " +
                      to_string(dom.vertices()[i]));
  }
  return {std::move(sol.u), sol.residual_l2, sol.iterations};
}

}  // namespace detail

LatticeField cs_iterate(const LatticeField& u_prev, const VortexConfig& cfg,
                        const SolverParams& params,
                        std::shared_ptr<const Domain> domain) {
  validate_params(params);
  if (!domain || !same_domain(u_prev.domain(), *domain))
    throw_invalid("cs_iterate: u_prev does not live on the given domain");
  for (double v : u_prev.interior())
    if (v > params.slack())
      throw_invalid("cs_iterate: u_prev must be nonpositive");
  const double K =
      detail::effective_screening(Model::chern_simons, cfg.lambda(), params.screening);
  return detail::monotone_step(u_prev, cfg, Model::chern_simons, K, params, nullptr).u;
}

namespace detail {

DomainSolution solve_monotone(const VortexConfig& cfg,
                              std::shared_ptr<const Domain> domain, Model model,
                              const SolverParams& params, const LatticeField* lower,
                              const IterationObserver& observer) {
  validate_params(params);
  if (!domain) throw_invalid("solver: null domain");
  if (domain->dim() != cfg.dim())
    throw_invalid("solver: domain dimension " + std::to_string(domain->dim()) +
                  " does not match configuration dimension " +
                  std::to_string(cfg.dim()));
  if (!domain->connected()) throw_invalid("solver: domain must be connected");
  if (lower && !same_domain(lower->domain(), *domain))
    throw_invalid("solver: lower barrier lives on a different domain");
  const double K = effective_screening(model, cfg.lambda(), params.screening);
  const double lambda = cfg.lambda();
  // Validates vortex containment before iterating.
  const LatticeField g = vortex_source(cfg, domain);

  DomainSolution out(domain, LatticeField::zero(domain));
  out.model = model;
  out.lambda = lambda;
  out.screening = K;
  out.slack = params.slack();

  LatticeField u = LatticeField::zero(domain);
  const bool track_energy = model == Model::chern_simons;
  double energy_prev = 0.0;  // F(0) = 0
  bool converged = false;

  for (int k = 1; k <= params.max_outer_iter; ++k) {
    StepResult step = monotone_step(u, cfg, model, K, params, lower);

    double dsq = 0.0, dsup = 0.0;
    for (std::size_t i = 0; i < u.interior().size(); ++i) {
      const double d = step.u.interior()[i] - u.interior()[i];
      dsq += d * d;
      dsup = std::max(dsup, std::abs(d));
    }

    double energy = 0.0;
    if (track_energy) {
      energy = energy_functional(step.u, cfg);
      // Descent inequality F(u_k) + (K/2)||u_{k-1}-u_k||^2 <= F(u_{k-1}).
      const double allowance = 1e-8 * (1.0 + std::abs(energy_prev));
      if (energy + 0.5 * K * dsq > energy_prev + allowance)
        throw error(errc::consistency,
                    "solver: energy descent inequality violated at iteration " +
                        std::to_string(k) + " (F " + std::to_string(energy_prev) +
                        " -> " + std::to_string(energy) + ", gap term " +
                        std::to_string(0.5 * K * dsq) + ")");
      energy_prev = energy;
      out.energy_trace.push_back(energy);
    }

    out.sup_diff_trace.push_back(dsup);
    u = std::move(step.u);
    out.iterations = k;
    if (observer) observer({k, dsup, energy, step.linear_residual, step.cg_iterations});
    if (dsup < params.tol_outer) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw convergence_error(
        "solver: no convergence within " + std::to_string(params.max_outer_iter) +
            " iterations (last sup diff " +
            std::to_string(out.sup_diff_trace.back()) + ")",
        out.sup_diff_trace);

  // Equation residual: the fixed-point gap is bounded by the operator
  // norms involved, hence the tolerance scale below.
  const auto lap = laplacian(u);
  double residual_sup = 0.0;
  for (std::size_t i = 0; i < lap.size(); ++i)
    residual_sup = std::max(residual_sup, std::abs(lap[i] -
                                                   nonlinearity(model, lambda,
                                                                u.interior()[i]) -
                                                   g.interior()[i]));
  const double residual_bound =
      10.0 * params.tol_outer * (2.0 * domain->dim() + K + lambda);
  if (residual_sup > residual_bound)
    throw error(errc::consistency,
                "solver: converged residual " + std::to_string(residual_sup) +
                    " exceeds bound " + std::to_string(residual_bound));

  out.residual_sup = residual_sup;
  out.flux_gap = flux_identity_gap(u, cfg, model);
  out.tail_sum = flux_bulk_sum(u, model);
  if (model == Model::chern_simons &&
      lambda * out.tail_sum > cfg.total_mass() + 1e-6 * lambda)
    throw error(errc::consistency,
                "solver: tail sum " + std::to_string(out.tail_sum) +
                    " exceeds C/lambda = " +
                    std::to_string(cfg.total_mass() / lambda));
  out.u = std::move(u);
  return out;
}

}  // namespace detail

DomainSolution solve_cs_on_domain(const VortexConfig& cfg,
                                  std::shared_ptr<const Domain> domain,
                                  const SolverParams& params,
                                  const IterationObserver& observer) {
  return detail::solve_monotone(cfg, std::move(domain), Model::chern_simons, params,
                                nullptr, observer);
}

ExhaustionReport solve_cs_exhaustion(const VortexConfig& cfg,
                                     const std::vector<Coord>& schedule,
                                     const SolverParams& params,
                                     const IterationObserver& observer) {
  if (schedule.empty()) throw_invalid("exhaustion: schedule is empty");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 1)
      throw_invalid("exhaustion: half-widths must be >= 1, got " +
                    std::to_string(schedule[i]));
    if (i > 0 && schedule[i] <= schedule[i - 1])
      throw_invalid("exhaustion: schedule must be strictly increasing");
  }

  const Vertex origin{std::vector<Coord>(static_cast<std::size_t>(cfg.dim()), 0)};
  ExhaustionReport rep;
  for (Coord hw : schedule) {
    auto domain = Domain::box(origin, hw);
    try {
      DomainSolution sol = solve_cs_on_domain(cfg, domain, params, observer);
      rep.steps.push_back({hw, domain->interior_count(), sol.iterations,
                           sol.residual_sup, sol.flux_gap, l2_norm(sol.u.interior()),
                           sol.tail_sum});
      rep.solutions.push_back(std::move(sol));
    } catch (const error& e) {
      throw exhaustion_error("exhaustion: solve failed on half-width " +
                                 std::to_string(hw) + ": " + e.what(),
                             e.code(), rep.steps);
    }
  }

  const double slack = params.slack();
  const Domain& first = *rep.solutions.front().domain;
  for (std::size_t i = 0; i + 1 < rep.solutions.size(); ++i) {
    const DomainSolution& small = rep.solutions[i];
    const DomainSolution& large = rep.solutions[i + 1];
    double viol = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < small.domain->interior_count(); ++j) {
      const Vertex& v = small.domain->vertices()[j];
      const double diff =
          large.u.interior()[*large.domain->interior_index(v)] - small.u.interior()[j];
      viol = std::max(viol, diff);
    }
    rep.monotone_violation.push_back(viol);
    if (viol > slack)
      throw error(errc::consistency,
                  "exhaustion: domain monotonicity violated between half-widths " +
                      std::to_string(schedule[i]) + " and " +
                      std::to_string(schedule[i + 1]) + " by " + std::to_string(viol));

    double sd = 0.0;
    for (const Vertex& v : first.vertices()) {
      const double a = small.u.interior()[*small.domain->interior_index(v)];
      const double b = large.u.interior()[*large.domain->interior_index(v)];
      sd = std::max(sd, std::abs(a - b));
    }
    rep.sup_diff_on_first.push_back(sd);
  }
  return rep;
}

ComparisonResult check_comparison(const LatticeField& candidate,
                                  const DomainSolution& solution,
                                  const VortexConfig& cfg, double subsolution_tol) {
  if (!same_domain(candidate.domain(), *solution.domain))
    throw_invalid("check_comparison: candidate lives on a different domain");

  const Domain& dom = candidate.domain();
  for (std::size_t b = 0; b < dom.boundary_count(); ++b)
    if (candidate.boundary_value(b) > subsolution_tol)
      throw_invalid("check_comparison: candidate is positive (" +
                    std::to_string(candidate.boundary_value(b)) +
                    ") on boundary vertex " + to_string(dom.boundary()[b]) +
                    ", not a subsolution");
  const InequalityCheck sub =
      check_subsolution(candidate, cfg, solution.model, subsolution_tol);
  if (!sub.ok)
    throw_invalid("check_comparison: candidate violates the subsolution inequality "
                  "by " +
                  std::to_string(sub.max_violation) + " at vertex " +
                  to_string(sub.worst_vertex));

  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dom.interior_count(); ++i)
    worst = std::max(worst, candidate.interior()[i] - solution.u.interior()[i]);
  ComparisonResult res;
  res.dominated = worst <= solution.slack;
  res.max_violation = std::max(worst, 0.0);
  return res;
}

}  // namespace lvx
