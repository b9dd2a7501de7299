#include "vortex.hpp"

#include <cmath>
#include <unordered_set>

namespace lvx {

const char* model_name(Model m) {
  return m == Model::chern_simons ? "chern_simons" : "abelian_higgs";
}

VortexConfig::VortexConfig(int dim, double lambda, std::vector<VortexPoint> vortices)
    : dim_(dim), lambda_(lambda), vortices_(std::move(vortices)) {
  if (dim_ < 2)
    throw_invalid("VortexConfig: lattice dimension must be >= 2, got " +
                  std::to_string(dim_));
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_))
    throw_invalid("VortexConfig: lambda must be positive and finite, got " +
                  std::to_string(lambda_));
  std::unordered_set<Vertex, VertexHash> seen;
  for (const VortexPoint& vp : vortices_) {
    if (vp.point.dim() != dim_)
      throw_invalid("VortexConfig: vortex point " + to_string(vp.point) +
                    " has dimension " + std::to_string(vp.point.dim()) +
                    ", expected " + std::to_string(dim_));
    if (vp.multiplicity < 1)
      throw_invalid("VortexConfig: multiplicity at " + to_string(vp.point) +
                    " must be a positive integer, got " +
                    std::to_string(vp.multiplicity));
    if (!seen.insert(vp.point).second)
      throw_invalid("VortexConfig: duplicate vortex point " + to_string(vp.point));
    total_ += vp.multiplicity;
  }
}

LatticeField vortex_source(const VortexConfig& cfg, std::shared_ptr<const Domain> domain) {
  if (!domain) throw_invalid("vortex_source: null domain");
  if (domain->dim() != cfg.dim())
    throw_invalid("vortex_source: domain dimension " + std::to_string(domain->dim()) +
                  " does not match vortex configuration dimension " +
                  std::to_string(cfg.dim()));
  std::vector<double> g(domain->interior_count(), 0.0);
  for (const VortexPoint& vp : cfg.vortices()) {
    auto i = domain->interior_index(vp.point);
    if (!i)
      throw error(errc::out_of_domain, "vortex_source: vortex point " +
                                           to_string(vp.point) +
                                           " lies outside the domain interior");
    g[*i] = four_pi * static_cast<double>(vp.multiplicity);
  }
  return LatticeField(std::move(domain), std::move(g));
}

double nonlinearity(Model m, double lambda, double u) {
  const double eu = std::exp(u);
  return m == Model::chern_simons ? lambda * eu * (eu - 1.0) : lambda * (eu - 1.0);
}

namespace {

// sign = +1 tests Delta w - nl(w) - g <= tol (supersolution),
// sign = -1 tests the reversed inequality.
InequalityCheck check_inequality(const LatticeField& w, const VortexConfig& cfg,
                                 Model m, double tol, double sign) {
  if (!(tol >= 0.0)) throw_invalid("solution check: tolerance must be nonnegative");
  const LatticeField g = vortex_source(cfg, w.domain_ptr());
  const Domain& dom = w.domain();
  InequalityCheck out;
  out.ok = true;
  const auto wv = w.interior();
  for (std::size_t i = 0; i < dom.interior_count(); ++i) {
    double lap = 0.0;
    for (std::int32_t s : dom.neighbor_slots(i)) {
      double nb = s >= 0 ? wv[static_cast<std::size_t>(s)]
                         : w.boundary_value(static_cast<std::size_t>(-s - 1));
      lap += nb - wv[i];
    }
    const double excess =
        sign * (lap - nonlinearity(m, cfg.lambda(), wv[i]) - g.interior()[i]);
    if (excess > out.max_violation) {
      out.max_violation = excess;
      out.worst_vertex = dom.vertices()[i];
    }
  }
  if (out.max_violation > tol) out.ok = false;
  return out;
}

}  // namespace

InequalityCheck check_supersolution(const LatticeField& w, const VortexConfig& cfg,
                                    Model m, double tol) {
  return check_inequality(w, cfg, m, tol, +1.0);
}

InequalityCheck check_subsolution(const LatticeField& w, const VortexConfig& cfg,
                                  Model m, double tol) {
  return check_inequality(w, cfg, m, tol, -1.0);
}

double nonlinearity_derivative(Model m, double lambda, double u) {
  const double eu = std::exp(u);
  return m == Model::chern_simons ? lambda * eu * (2.0 * eu - 1.0) : lambda * eu;
}

}  // namespace lvx
