#pragma once

#include <numbers>

#include "field.hpp"

namespace lvx {

enum class Model { chern_simons, abelian_higgs };

const char* model_name(Model m);

inline constexpr double four_pi = 4.0 * std::numbers::pi;

struct VortexPoint {
  Vertex point;
  std::int64_t multiplicity = 1;
};

// Vortex data: coupling lambda > 0 and finitely many vortex points with
// positive integer multiplicities. Points must be distinct. M = 0 (no
// vortices) is allowed.
class VortexConfig {
 public:
  VortexConfig(int dim, double lambda, std::vector<VortexPoint> vortices);

  int dim() const { return dim_; }
  double lambda() const { return lambda_; }
  const std::vector<VortexPoint>& vortices() const { return vortices_; }

  std::int64_t total_multiplicity() const { return total_; }
  // C = 4*pi*sum of multiplicities.
  double total_mass() const { return four_pi * static_cast<double>(total_); }

 private:
  int dim_;
  double lambda_;
  std::vector<VortexPoint> vortices_;
  std::int64_t total_ = 0;
};

// g = 4*pi*sum_j n_j delta_{p_j} restricted to the domain interior.
// Every vortex point must lie in the interior.
LatticeField vortex_source(const VortexConfig& cfg, std::shared_ptr<const Domain> domain);

// Right-hand side nonlinearity of the vortex equation Delta u = nl(u) + g:
// lambda e^u (e^u - 1) for chern_simons, lambda (e^u - 1) for abelian_higgs.
double nonlinearity(Model m, double lambda, double u);
double nonlinearity_derivative(Model m, double lambda, double u);

struct InequalityCheck {
  bool ok = false;
  double max_violation = 0.0;
  Vertex worst_vertex;  // empty when ok
};

// Supersolution test: Delta w <= nl(w) + g + tol at every interior vertex.
// Subsolution reverses the inequality. Boundary values of w participate
// through the Laplacian only; sign conditions on the boundary are the
// caller's concern.
InequalityCheck check_supersolution(const LatticeField& w, const VortexConfig& cfg,
                                    Model m, double tol = 1e-10);
InequalityCheck check_subsolution(const LatticeField& w, const VortexConfig& cfg,
                                  Model m, double tol = 1e-10);

}  // namespace lvx
