#pragma once

#include "chern_simons.hpp"

namespace lvx {

// One step of the scheme (Delta - K) u_k = lambda(e^{u} - 1) + g - K u
// with u = u_prev and K > lambda. When `lower` is given (normally the
// Chern-Simons solution on the same domain) the sandwich
// lower - slack <= u_k <= u_prev + slack is enforced.
LatticeField ah_iterate(const LatticeField& u_prev, const VortexConfig& cfg,
                        const SolverParams& params, std::shared_ptr<const Domain> domain,
                        const LatticeField* lower = nullptr);

// Monotone iteration for the Abelian Higgs equation from u = 0, kept
// above the Chern-Simons solution on the same domain. When cs_solution is
// null it is recomputed here. Post: residual bound as for the
// Chern-Simons solve, flux gap recorded, u_cs <= u <= 0 within slack.
DomainSolution solve_ah(const VortexConfig& cfg, std::shared_ptr<const Domain> domain,
                        const SolverParams& params = {},
                        const DomainSolution* cs_solution = nullptr,
                        const IterationObserver& observer = {});

}  // namespace lvx
