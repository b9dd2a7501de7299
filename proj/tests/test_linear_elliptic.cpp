#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "calculus.hpp"
#include "linear_elliptic.hpp"
#include "oracle.hpp"
#include "sampling.hpp"

using namespace lvx;

TEST_CASE("singleton system has a closed form") {
  auto dom = Domain::from_vertices(2, {Vertex{0, 0}});
  // (Delta - K) u = rhs collapses to -(4 + K) u = rhs.
  const ScreenedSolution s = solve_screened({dom, 3.0, {7.0}}, {1e-14, 100, false});
  CHECK(s.u.interior()[0] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("operator application on the delta") {
  auto dom = Domain::box(Vertex{0, 0}, 1);
  std::vector<double> x(dom->interior_count(), 0.0);
  x[*dom->interior_index(Vertex{0, 0})] = 1.0;
  const auto y = apply_operator(*dom, 1.0, x);
  CHECK(y[*dom->interior_index(Vertex{0, 0})] == 5.0);  // 2n + K
  CHECK(y[*dom->interior_index(Vertex{1, 0})] == -1.0);
  CHECK(y[*dom->interior_index(Vertex{0, -1})] == -1.0);
  CHECK(y[*dom->interior_index(Vertex{1, 1})] == 0.0);
}

TEST_CASE("cg matches dense elimination") {
  Rng rng(11);
  for (int dim : {2, 3}) {
    auto dom = Domain::box(Vertex{std::vector<Coord>(dim, 0)}, 2);
    std::vector<double> rhs(dom->interior_count());
    for (double& v : rhs) v = rng.uniform(-3.0, 3.0);
    const ScreenedSolution s = solve_screened({dom, 2.5, rhs}, {1e-12, 10000, false});
    const auto dense = dense_solve_screened(*dom, 2.5, rhs);
    CHECK(sup_diff(s.u.interior(), dense) <= 1e-10);

    // Residual contract holds on the recomputed residual.
    const auto lap = laplacian(s.u);
    double r2 = 0.0, b2 = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      const double r = lap[i] - 2.5 * s.u.interior()[i] - rhs[i];
      r2 += r * r;
      b2 += rhs[i] * rhs[i];
    }
    CHECK(std::sqrt(r2) <= 1e-12 * std::max(1.0, std::sqrt(b2)));
  }
}

TEST_CASE("jacobi preconditioning changes nothing but the path") {
  Rng rng(5);
  auto dom = Domain::box(Vertex{0, 0}, 3);
  std::vector<double> rhs(dom->interior_count());
  for (double& v : rhs) v = rng.uniform(-1.0, 1.0);
  const auto a = solve_screened({dom, 1.0, rhs}, {1e-12, 10000, false});
  const auto b = solve_screened({dom, 1.0, rhs}, {1e-12, 10000, true});
  CHECK(sup_diff(a.u.interior(), b.u.interior()) <= 1e-11);
}

TEST_CASE("solution is storage-order independent") {
  // Same vertex set handed over in scrambled order: the domain
  // canonicalizes, so the solve is bit-identical.
  auto box = Domain::box(Vertex{0, 0}, 3);
  std::vector<Vertex> scrambled = box->vertices();
  Rng rng(99);
  for (std::size_t i = scrambled.size(); i > 1; --i)
    std::swap(scrambled[i - 1],
              scrambled[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
  auto dom2 = Domain::from_vertices(2, scrambled);

  std::vector<double> rhs(box->interior_count());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = std::sin(0.37 * static_cast<double>(i));
  const auto a = solve_screened({box, 2.0, rhs}, {1e-11, 10000, false});
  const auto b = solve_screened({dom2, 2.0, rhs}, {1e-11, 10000, false});
  REQUIRE(a.u.interior().size() == b.u.interior().size());
  CHECK(std::memcmp(a.u.interior().data(), b.u.interior().data(),
                    rhs.size() * sizeof(double)) == 0);
}

TEST_CASE("nonnegative rhs gives nonpositive solution") {
  Rng rng(21);
  auto dom = Domain::box(Vertex{0, 0}, 4);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> rhs(dom->interior_count());
    for (double& v : rhs) v = rng.uniform(0.0, 10.0);
    const auto s = solve_screened({dom, 1.5, rhs}, {1e-11, 10000, false});
    for (double v : s.u.interior()) CHECK(v <= 1e-9);
  }
}

TEST_CASE("input validation") {
  auto dom = Domain::box(Vertex{0, 0}, 1);
  std::vector<double> rhs(dom->interior_count(), 1.0);
  CHECK_THROWS_AS(solve_screened({dom, 0.0, rhs}), error);
  CHECK_THROWS_AS(solve_screened({dom, -1.0, rhs}), error);
  CHECK_THROWS_AS(solve_screened({dom, 1.0, {1.0, 2.0}}), error);
  CHECK_THROWS_AS(solve_screened({nullptr, 1.0, rhs}), error);
  CHECK_THROWS_AS(solve_screened({dom, 1.0, rhs}, {0.0, 100, false}), error);
}

TEST_CASE("iteration cap is a solver failure") {
  auto dom = Domain::box(Vertex{0, 0}, 8);
  std::vector<double> rhs(dom->interior_count(), 1.0);
  try {
    solve_screened({dom, 1e-6, rhs}, {1e-13, 2, false});
    FAIL("expected solver_error");
  } catch (const solver_error& e) {
    CHECK(e.code() == errc::solver_failure);
    CHECK(e.iterations() <= 2);
    CHECK(e.residual() > 0.0);
  }
}

TEST_CASE("variable-coefficient dense reference handles boundary data") {
  // (Delta - f) v = 0 with v = 1 on the boundary and f = 0 gives v = 1.
  auto dom = Domain::box(Vertex{0, 0}, 2);
  std::vector<double> f(dom->interior_count(), 0.0);
  std::vector<double> rhs(dom->interior_count(), 0.0);
  std::vector<double> ones(dom->boundary_count(), 1.0);
  const auto v = dense_solve_variable(*dom, f, rhs, ones);
  for (double x : v) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
}
