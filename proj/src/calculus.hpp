#pragma once

#include "field.hpp"

namespace lvx {

// Graph Laplacian (Delta u)(x) = sum_{y ~ x} (u(y) - u(x)) evaluated on the
// interior; neighbours outside the domain contribute the field's boundary
// value (zero for the null extension).
std::vector<double> laplacian(const LatticeField& u);

// Single-vertex Laplacian; throws out_of_domain unless x is interior.
double laplacian_at(const LatticeField& u, const Vertex& x);

// Dirichlet form
//   D(f,g) = 1/2 sum_{x,y in Omega, x~y} (f(y)-f(x))(g(y)-g(x))
//          + sum_{x in Omega, y in boundary, x~y} (f(y)-f(x))(g(y)-g(x)).
// Both fields must live on the same domain.
double dirichlet_form(const LatticeField& f, const LatticeField& g);

inline double dirichlet_form(const LatticeField& f) { return dirichlet_form(f, f); }

// Outward normal derivative at each boundary vertex x:
//   (du/dn)(x) = sum_{y in Omega, y ~ x} (u(x) - u(y)).
std::vector<double> normal_derivative(const LatticeField& u);

// Single-vertex variant; throws invalid_input unless x is a boundary vertex.
double normal_derivative_at(const LatticeField& u, const Vertex& x);

// |D(f,g) - ( -sum_Omega f * Delta g + sum_boundary f * dg/dn )|.
// Identically zero in exact arithmetic; measures summation roundoff.
double green_identity_gap(const LatticeField& f, const LatticeField& g);

}  // namespace lvx
