#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lattice.hpp"

namespace lvx {

// Real-valued function on the closure of a Domain. Interior values are
// always stored; boundary values are either explicit or implicitly zero
// (the null extension).
class LatticeField {
 public:
  LatticeField(std::shared_ptr<const Domain> domain, std::vector<double> interior);
  LatticeField(std::shared_ptr<const Domain> domain, std::vector<double> interior,
               std::vector<double> boundary);

  static LatticeField zero(std::shared_ptr<const Domain> domain);

  const Domain& domain() const { return *domain_; }
  const std::shared_ptr<const Domain>& domain_ptr() const { return domain_; }

  std::span<const double> interior() const { return interior_; }
  std::span<double> interior() { return interior_; }

  bool has_explicit_boundary() const { return !boundary_.empty(); }
  double boundary_value(std::size_t b) const {
    return boundary_.empty() ? 0.0 : boundary_[b];
  }

  double operator[](std::size_t i) const { return interior_[i]; }

  // Value at a closure vertex; throws out_of_domain otherwise.
  double at(const Vertex& v) const;

 private:
  std::shared_ptr<const Domain> domain_;
  std::vector<double> interior_;
  std::vector<double> boundary_;  // empty means null extension
};

// True when both fields live on the same domain (same object or equal
// vertex sets).
bool same_domain(const LatticeField& a, const LatticeField& b);
bool same_domain(const Domain& a, const Domain& b);

// Null extension of `f` to a larger domain: values of f on its interior,
// zero elsewhere. Every interior vertex of f's domain must lie in `target`.
LatticeField extend_by_zero(const LatticeField& f, std::shared_ptr<const Domain> target);

double sup_norm(std::span<const double> v);
double l2_norm(std::span<const double> v);
double sup_diff(std::span<const double> a, std::span<const double> b);

}  // namespace lvx
