#include "oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

#include "calculus.hpp"

namespace lvx {

namespace {

// Dense matrix of (Delta - f) acting on interior values, zero data outside.
Eigen::MatrixXd interior_matrix(const Domain& dom, std::span<const double> f) {
  const auto n = static_cast<Eigen::Index>(dom.interior_count());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    A(i, i) = -2.0 * dom.dim() - f[static_cast<std::size_t>(i)];
    for (std::int32_t s : dom.neighbor_slots(static_cast<std::size_t>(i)))
      if (s >= 0) A(i, s) += 1.0;
  }
  return A;
}

std::vector<double> lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const char* who) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  Eigen::VectorXd x = lu.solve(b);
  if (!x.allFinite())
    throw solver_error(std::string(who) + ": dense factorisation produced non-finite "
                                          "solution (singular matrix?)",
                       std::numeric_limits<double>::infinity(), 0);
  return {x.data(), x.data() + x.size()};
}

}  // namespace

std::vector<double> dense_solve_screened(const Domain& dom, double screening,
                                         std::span<const double> rhs) {
  if (!(screening > 0.0)) throw_invalid("dense_solve_screened: K must be positive");
  if (rhs.size() != dom.interior_count())
    throw_invalid("dense_solve_screened: rhs size mismatch");
  std::vector<double> f(dom.interior_count(), screening);
  Eigen::MatrixXd A = interior_matrix(dom, f);
  Eigen::VectorXd b(static_cast<Eigen::Index>(rhs.size()));
  for (std::size_t i = 0; i < rhs.size(); ++i) b[static_cast<Eigen::Index>(i)] = rhs[i];
  return lu_solve(A, b, "dense_solve_screened");
}

std::vector<double> dense_solve_variable(const Domain& dom, std::span<const double> f,
                                         std::span<const double> rhs,
                                         std::span<const double> boundary_values) {
  const std::size_t n = dom.interior_count();
  if (f.size() != n || rhs.size() != n)
    throw_invalid("dense_solve_variable: coefficient or rhs size mismatch");
  if (boundary_values.size() != dom.boundary_count())
    throw_invalid("dense_solve_variable: boundary data size mismatch");
  Eigen::MatrixXd A = interior_matrix(dom, f);
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  // Move known boundary contributions of Delta to the right-hand side.
  for (std::size_t i = 0; i < n; ++i) {
    double acc = rhs[i];
    for (std::int32_t s : dom.neighbor_slots(i))
      if (s < 0) acc -= boundary_values[static_cast<std::size_t>(-s - 1)];
    b[static_cast<Eigen::Index>(i)] = acc;
  }
  return lu_solve(A, b, "dense_solve_variable");
}

NewtonResult newton_solve(const VortexConfig& cfg, std::shared_ptr<const Domain> domain,
                          Model model, const LatticeField& initial,
                          const NewtonOptions& opts) {
  if (!domain) throw_invalid("newton_solve: null domain");
  if (!same_domain(initial.domain(), *domain))
    throw_invalid("newton_solve: initial guess lives on a different domain");
  const std::size_t n = domain->interior_count();
  const LatticeField g = vortex_source(cfg, domain);
  const double lambda = cfg.lambda();

  std::vector<double> u(initial.interior().begin(), initial.interior().end());

  auto residual = [&](const std::vector<double>& v) {
    LatticeField uf(domain, v);
    std::vector<double> r = laplacian(uf);
    for (std::size_t i = 0; i < n; ++i)
      r[i] -= nonlinearity(model, lambda, v[i]) + g.interior()[i];
    return r;
  };

  std::vector<double> r = residual(u);
  double rnorm = l2_norm(r);
  int it = 0;
  for (; it < opts.max_iter && sup_norm(r) > opts.tol; ++it) {
    // Jacobian (Delta - nl'(u)); solve J s = -r.
    std::vector<double> fprime(n);
    for (std::size_t i = 0; i < n; ++i)
      fprime[i] = nonlinearity_derivative(model, lambda, u[i]);
    Eigen::MatrixXd J = interior_matrix(*domain, fprime);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) rhs[static_cast<Eigen::Index>(i)] = -r[i];
    std::vector<double> s = lu_solve(J, rhs, "newton_solve");

    double step = 1.0;
    std::vector<double> trial(n);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = u[i] + step * s[i];
      std::vector<double> rt = residual(trial);
      const double rtnorm = l2_norm(rt);
      if (rtnorm <= (1.0 - 1e-4 * step) * rnorm) {
        u = trial;
        r = std::move(rt);
        rnorm = rtnorm;
        break;
      }
      step *= 0.5;
      if (step < 0x1p-24)
        throw solver_error("newton_solve: line search failed at iteration " +
                               std::to_string(it) + " (residual " +
                               std::to_string(rnorm) + ")",
                           rnorm, it);
    }
  }
  const double rs = sup_norm(r);
  if (rs > opts.tol)
    throw convergence_error("newton_solve: residual " + std::to_string(rs) +
                                " above tolerance after " + std::to_string(it) +
                                " iterations",
                            {rs});
  return {LatticeField(domain, std::move(u)), it, rs};
}

}  // namespace lvx
