#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "calculus.hpp"
#include "sampling.hpp"

using namespace lvx;

namespace {

LatticeField delta_at_origin(std::shared_ptr<const Domain> dom) {
  std::vector<double> v(dom->interior_count(), 0.0);
  v[*dom->interior_index(Vertex{std::vector<Coord>(dom->dim(), 0)})] = 1.0;
  return LatticeField(std::move(dom), std::move(v));
}

}  // namespace

TEST_CASE("laplacian of the delta function") {
  auto dom = Domain::box(Vertex{0, 0}, 1);
  const LatticeField u = delta_at_origin(dom);
  const auto lap = laplacian(u);
  CHECK(lap[*dom->interior_index(Vertex{0, 0})] == -4.0);
  CHECK(lap[*dom->interior_index(Vertex{1, 0})] == 1.0);
  CHECK(lap[*dom->interior_index(Vertex{1, 1})] == 0.0);
  CHECK(laplacian_at(u, Vertex{0, 0}) == -4.0);
  CHECK_THROWS_AS(laplacian_at(u, Vertex{2, 0}), error);  // boundary vertex
}

TEST_CASE("laplacian of a constant vanishes away from the boundary") {
  auto dom = Domain::box(Vertex{0, 0}, 2);
  std::vector<double> inner(dom->interior_count(), 3.5);
  std::vector<double> bvals(dom->boundary_count(), 3.5);
  const LatticeField u(dom, inner, bvals);
  for (double v : laplacian(u)) CHECK(v == 0.0);

  // Null extension instead: the boundary drop shows up as -k * 3.5.
  const LatticeField w(dom, inner);
  CHECK(laplacian_at(w, Vertex{0, 0}) == 0.0);
  CHECK(laplacian_at(w, Vertex{2, 2}) == -2 * 3.5);
}

TEST_CASE("dirichlet form of the delta on a 3x3 box") {
  auto dom = Domain::box(Vertex{0, 0}, 1);
  const LatticeField u = delta_at_origin(dom);
  // Four interior edges, each difference 1, weight 1/2 per ordered pair
  // counted twice = 4; no boundary edge sees the center.
  CHECK(dirichlet_form(u, u) == 4.0);
  CHECK(dirichlet_form(u) == 4.0);
}

TEST_CASE("dirichlet form counts boundary edges fully") {
  auto dom = Domain::from_vertices(2, {Vertex{0, 0}});
  const LatticeField u(dom, {2.0});
  // Four edges to the boundary at full weight, difference 2.
  CHECK(dirichlet_form(u, u) == 16.0);
}

TEST_CASE("dirichlet form is bilinear and symmetric") {
  auto dom = Domain::box(Vertex{0, 0}, 2);
  Rng rng(7);
  const LatticeField f = random_field(dom, rng, -1.0, 1.0, true);
  const LatticeField g = random_field(dom, rng, -1.0, 1.0, true);
  CHECK(dirichlet_form(f, g) == doctest::Approx(dirichlet_form(g, f)).epsilon(1e-14));

  std::vector<double> sum_i(f.interior().begin(), f.interior().end());
  std::vector<double> sum_b;
  for (std::size_t b = 0; b < dom->boundary_count(); ++b)
    sum_b.push_back(f.boundary_value(b) + g.boundary_value(b));
  for (std::size_t i = 0; i < sum_i.size(); ++i) sum_i[i] += g.interior()[i];
  const LatticeField fg(dom, sum_i, sum_b);
  CHECK(dirichlet_form(fg, fg) ==
        doctest::Approx(dirichlet_form(f, f) + 2 * dirichlet_form(f, g) +
                        dirichlet_form(g, g))
            .epsilon(1e-12));
}

TEST_CASE("normal derivative of the delta") {
  auto dom = Domain::box(Vertex{0, 0}, 1);
  const LatticeField u = delta_at_origin(dom);
  // Every boundary vertex sees only zero interior values.
  for (double v : normal_derivative(u)) CHECK(v == 0.0);

  std::vector<double> ones(dom->interior_count(), 1.0);
  const LatticeField w(dom, ones);
  // An edge-midpoint boundary vertex has exactly one interior neighbor.
  CHECK(normal_derivative_at(w, Vertex{2, 0}) == -1.0);
  CHECK_THROWS_AS(normal_derivative_at(w, Vertex{0, 0}), error);
}

TEST_CASE("green identity on random fields") {
  Rng rng(42);
  for (int dim : {2, 3}) {
    auto dom = Domain::box(Vertex{std::vector<Coord>(dim, 0)}, 2);
    for (int t = 0; t < 25; ++t) {
      const LatticeField f = random_field(dom, rng, -2.0, 2.0, true);
      const LatticeField g = random_field(dom, rng, -2.0, 2.0, true);
      const double lhs = dirichlet_form(f, g);
      CHECK(green_identity_gap(f, g) <= 1e-10 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("summation identity: bulk laplacian equals boundary flux") {
  Rng rng(3);
  auto dom = Domain::box(Vertex{1, 1, 1}, 2);
  for (int t = 0; t < 25; ++t) {
    const LatticeField g = random_field(dom, rng, -5.0, 5.0, true);
    double bulk = 0.0, flux = 0.0;
    for (double v : laplacian(g)) bulk += v;
    for (double v : normal_derivative(g)) flux += v;
    CHECK(bulk == doctest::Approx(flux).epsilon(1e-12));
  }
}

// The green identity doubles as a tripwire: a sign error in the stencil
// (summing u(y)+u(x) instead of u(y)-u(x)) blows the gap up to O(1).
TEST_CASE("green identity detects a sign-flipped stencil") {
  Rng rng(7);
  auto dom = Domain::box(Vertex{0, 0}, 3);
  const LatticeField f = random_field(dom, rng, -2.0, 2.0, true);
  const LatticeField g = random_field(dom, rng, -2.0, 2.0, true);

  auto rhs_with = [&](auto&& lap_at) {
    double s = 0.0;
    for (const Vertex& x : dom->vertices()) s -= f.at(x) * lap_at(g, x);
    for (const Vertex& x : dom->boundary()) s += f.at(x) * normal_derivative_at(g, x);
    return s;
  };

  const double lhs = dirichlet_form(f, g);
  CHECK(std::abs(lhs - rhs_with([](const LatticeField& u, const Vertex& x) {
          return laplacian_at(u, x);
        })) <= 1e-10 * (1.0 + std::abs(lhs)));

  auto flipped = [](const LatticeField& u, const Vertex& x) {
    double s = 0.0;
    for (const Vertex& y : neighbors(x)) s += u.at(y) + u.at(x);
    return s;
  };
  CHECK(std::abs(lhs - rhs_with(flipped)) > 0.1);
}

TEST_CASE("mismatched domains are rejected") {
  auto a = Domain::box(Vertex{0, 0}, 1);
  auto b = Domain::box(Vertex{0, 0}, 2);
  CHECK_THROWS_AS(dirichlet_form(LatticeField::zero(a), LatticeField::zero(b)), error);
}
