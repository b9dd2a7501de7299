#pragma once

#include "vortex.hpp"

namespace lvx {

// Dense direct solvers used as independent references for the iterative
// paths. Dense LU is O(N^3); keep domains small.

// (Delta - K) u = rhs with zero Dirichlet data.
std::vector<double> dense_solve_screened(const Domain& dom, double screening,
                                         std::span<const double> rhs);

// (Delta - f) v = rhs with v = boundary_values on the vertex boundary and
// variable coefficient f given per interior vertex. No sign restriction
// on f; throws solver_failure if the matrix is numerically singular.
std::vector<double> dense_solve_variable(const Domain& dom, std::span<const double> f,
                                         std::span<const double> rhs,
                                         std::span<const double> boundary_values);

struct NewtonOptions {
  double tol = 1e-12;  // sup norm of Delta u - nl(u) - g
  int max_iter = 60;
};

struct NewtonResult {
  LatticeField u;
  int iterations = 0;
  double residual_sup = 0.0;
};

// Damped Newton for Delta u = nl(u) + g, zero boundary data, dense
// Jacobian factorisation. Independent of the monotone iteration: arbitrary
// starting point, backtracking line search on the l2 residual.
NewtonResult newton_solve(const VortexConfig& cfg, std::shared_ptr<const Domain> domain,
                          Model model, const LatticeField& initial,
                          const NewtonOptions& opts = {});

}  // namespace lvx
