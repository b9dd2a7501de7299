#include "abelian_higgs.hpp"

#include <optional>

namespace lvx {

LatticeField ah_iterate(const LatticeField& u_prev, const VortexConfig& cfg,
                        const SolverParams& params, std::shared_ptr<const Domain> domain,
                        const LatticeField* lower) {
  if (!domain || !same_domain(u_prev.domain(), *domain))
    throw_invalid("ah_iterate: u_prev does not live on the given domain");
  for (double v : u_prev.interior())
    if (v > params.slack()) throw_invalid("ah_iterate: u_prev must be nonpositive");
  const double K =
      detail::effective_screening(Model::abelian_higgs, cfg.lambda(), params.screening);
  return detail::monotone_step(u_prev, cfg, Model::abelian_higgs, K, params, lower).u;
}

DomainSolution solve_ah(const VortexConfig& cfg, std::shared_ptr<const Domain> domain,
                        const SolverParams& params, const DomainSolution* cs_solution,
                        const IterationObserver& observer) {
  std::optional<DomainSolution> recomputed;
  if (cs_solution) {
    if (!cs_solution->domain || !domain ||
        !same_domain(*cs_solution->domain, *domain))
      throw_invalid("solve_ah: Chern-Simons solution lives on a different domain");
    if (cs_solution->model != Model::chern_simons)
      throw_invalid("solve_ah: lower barrier is not a Chern-Simons solution");
    if (cs_solution->lambda != cfg.lambda())
      throw_invalid("solve_ah: Chern-Simons solution was computed for lambda = " +
                    std::to_string(cs_solution->lambda));
  } else {
    // The subsolution barrier is the Chern-Simons solution on this domain.
    SolverParams cs_params = params;
    cs_params.screening = 0.0;  // model default
    recomputed = solve_cs_on_domain(cfg, domain, cs_params);
    cs_solution = &*recomputed;
  }
  return detail::solve_monotone(cfg, domain, Model::abelian_higgs, params,
                                &cs_solution->u, observer);
}

}  // namespace lvx
