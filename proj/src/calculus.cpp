#include "calculus.hpp"

#include <cmath>

namespace lvx {

namespace {

void require_same_domain(const LatticeField& f, const LatticeField& g, const char* who) {
  if (!same_domain(f, g)) throw_invalid(std::string(who) + ": domain mismatch");
}

}  // namespace

std::vector<double> laplacian(const LatticeField& u) {
  const Domain& dom = u.domain();
  const auto vals = u.interior();
  std::vector<double> out(dom.interior_count());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double acc = 0.0;
    for (std::int32_t s : dom.neighbor_slots(i)) {
      double nb = s >= 0 ? vals[static_cast<std::size_t>(s)]
                         : u.boundary_value(static_cast<std::size_t>(-s - 1));
      acc += nb - vals[i];
    }
    out[i] = acc;
  }
  return out;
}

double laplacian_at(const LatticeField& u, const Vertex& x) {
  const Domain& dom = u.domain();
  auto i = dom.interior_index(x);
  if (!i)
    throw error(errc::out_of_domain,
                "laplacian_at: vertex " + to_string(x) + " is not interior");
  double acc = 0.0;
  for (std::int32_t s : dom.neighbor_slots(*i)) {
    double nb = s >= 0 ? u.interior()[static_cast<std::size_t>(s)]
                       : u.boundary_value(static_cast<std::size_t>(-s - 1));
    acc += nb - u.interior()[*i];
  }
  return acc;
}

double dirichlet_form(const LatticeField& f, const LatticeField& g) {
  require_same_domain(f, g, "dirichlet_form");
  const Domain& dom = f.domain();
  const auto fv = f.interior();
  const auto gv = g.interior();
  double acc = 0.0;
  for (std::size_t i = 0; i < dom.interior_count(); ++i) {
    for (std::int32_t s : dom.neighbor_slots(i)) {
      if (s >= 0) {
        auto j = static_cast<std::size_t>(s);
        acc += 0.5 * (fv[j] - fv[i]) * (gv[j] - gv[i]);
      } else {
        auto b = static_cast<std::size_t>(-s - 1);
        acc += (f.boundary_value(b) - fv[i]) * (g.boundary_value(b) - gv[i]);
      }
    }
  }
  return acc;
}

std::vector<double> normal_derivative(const LatticeField& u) {
  const Domain& dom = u.domain();
  const auto vals = u.interior();
  std::vector<double> out(dom.boundary_count());
  for (std::size_t b = 0; b < out.size(); ++b) {
    double ub = u.boundary_value(b);
    double acc = 0.0;
    for (std::uint32_t i : dom.boundary_neighbors(b)) acc += ub - vals[i];
    out[b] = acc;
  }
  return out;
}

double normal_derivative_at(const LatticeField& u, const Vertex& x) {
  const Domain& dom = u.domain();
  auto b = dom.boundary_index(x);
  if (!b)
    throw_invalid("normal_derivative_at: vertex " + to_string(x) +
                  " is not a boundary vertex");
  double acc = 0.0;
  for (std::uint32_t i : dom.boundary_neighbors(*b))
    acc += u.boundary_value(*b) - u.interior()[i];
  return acc;
}

double green_identity_gap(const LatticeField& f, const LatticeField& g) {
  require_same_domain(f, g, "green_identity_gap");
  const double lhs = dirichlet_form(f, g);
  const auto lap = laplacian(g);
  const auto dn = normal_derivative(g);
  double rhs = 0.0;
  for (std::size_t i = 0; i < lap.size(); ++i) rhs -= f.interior()[i] * lap[i];
  for (std::size_t b = 0; b < dn.size(); ++b) rhs += f.boundary_value(b) * dn[b];
  return std::abs(lhs - rhs);
}

}  // namespace lvx
