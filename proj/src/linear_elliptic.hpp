#pragma once

#include "field.hpp"

namespace lvx {

// Linear system (Delta - K) u = rhs on the interior with zero Dirichlet
// boundary data, K > 0. Equivalently (K I - Delta_dir) u = -rhs where
// K I - Delta_dir is symmetric positive definite with diagonal 2n + K.
struct ScreenedSystem {
  std::shared_ptr<const Domain> domain;
  double screening = 1.0;
  std::vector<double> rhs;
};

struct SolveOptions {
  double tol = 1e-10;    // contract: residual_l2 <= tol * max(1, ||rhs||_2)
  int max_iter = 10000;  // CG iteration cap
  bool jacobi = false;   // diagonal preconditioning
};

struct ScreenedSolution {
  LatticeField u;
  int iterations = 0;
  double residual_l2 = 0.0;  // recomputed from scratch, not the CG recurrence
};

// Conjugate gradients on the SPD form. Throws solver_failure if the
// residual contract cannot be met within max_iter. When rhs >= 0
// pointwise the result is checked to be <= 0 up to solver slack
// (discrete maximum principle); violation is a consistency error.
ScreenedSolution solve_screened(const ScreenedSystem& sys, const SolveOptions& opts = {});

// y = (K I - Delta_dir) x, zero Dirichlet data.
std::vector<double> apply_operator(const Domain& dom, double screening,
                                   std::span<const double> x);

}  // namespace lvx
