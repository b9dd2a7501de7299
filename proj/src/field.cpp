#include "field.hpp"

#include <cmath>

namespace lvx {

namespace {

void check_finite(std::span<const double> values, const char* what) {
  for (double v : values)
    if (!std::isfinite(v))
      throw_invalid(std::string("LatticeField: non-finite ") + what + " value");
}

}  // namespace

LatticeField::LatticeField(std::shared_ptr<const Domain> domain,
                           std::vector<double> interior)
    : domain_(std::move(domain)), interior_(std::move(interior)) {
  if (!domain_) throw_invalid("LatticeField: null domain");
  if (interior_.size() != domain_->interior_count())
    throw_invalid("LatticeField: interior size " + std::to_string(interior_.size()) +
                  " does not match domain size " +
                  std::to_string(domain_->interior_count()));
  check_finite(interior_, "interior");
}

LatticeField::LatticeField(std::shared_ptr<const Domain> domain,
                           std::vector<double> interior, std::vector<double> boundary)
    : LatticeField(std::move(domain), std::move(interior)) {
  boundary_ = std::move(boundary);
  if (boundary_.size() != domain_->boundary_count())
    throw_invalid("LatticeField: boundary size " + std::to_string(boundary_.size()) +
                  " does not match boundary count " +
                  std::to_string(domain_->boundary_count()));
  check_finite(boundary_, "boundary");
}

LatticeField LatticeField::zero(std::shared_ptr<const Domain> domain) {
  if (!domain) throw_invalid("LatticeField: null domain");
  std::vector<double> vals(domain->interior_count(), 0.0);
  return LatticeField(std::move(domain), std::move(vals));
}

double LatticeField::at(const Vertex& v) const {
  if (auto i = domain_->interior_index(v)) return interior_[*i];
  if (auto b = domain_->boundary_index(v)) return boundary_value(*b);
  throw error(errc::out_of_domain,
              "LatticeField::at: vertex " + to_string(v) + " not in domain closure");
}

bool same_domain(const Domain& a, const Domain& b) {
  if (&a == &b) return true;
  return a.dim() == b.dim() && a.vertices() == b.vertices();
}

bool same_domain(const LatticeField& a, const LatticeField& b) {
  return same_domain(a.domain(), b.domain());
}

LatticeField extend_by_zero(const LatticeField& f, std::shared_ptr<const Domain> target) {
  if (!target) throw_invalid("extend_by_zero: null target domain");
  if (target->dim() != f.domain().dim())
    throw_invalid("extend_by_zero: dimension mismatch");
  std::vector<double> vals(target->interior_count(), 0.0);
  const auto& verts = f.domain().vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto j = target->interior_index(verts[i]);
    if (!j)
      throw_invalid("extend_by_zero: vertex " + to_string(verts[i]) +
                    " not contained in target domain");
    vals[*j] = f.interior()[i];
  }
  return LatticeField(std::move(target), std::move(vals));
}

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double sup_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace lvx
