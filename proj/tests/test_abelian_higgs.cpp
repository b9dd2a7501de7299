#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "abelian_higgs.hpp"
#include "oracle.hpp"

using namespace lvx;

namespace {

VortexConfig single_vortex(double lambda = 1.0) {
  return VortexConfig(2, lambda, {{Vertex{0, 0}, 1}});
}

}  // namespace

TEST_CASE("first iterate on the singleton domain") {
  // -(4 + K) u1 = 4pi with K = 2 gives -4pi/6.
  auto dom = Domain::from_vertices(2, {Vertex{0, 0}});
  SolverParams p;
  p.screening = 2.0;
  const LatticeField u1 = ah_iterate(LatticeField::zero(dom), single_vortex(), p, dom);
  CHECK(std::abs(u1.interior()[0] - (-four_pi / 6.0)) <= 1e-12);
}

TEST_CASE("solution is sandwiched between the Chern-Simons solution and zero") {
  const VortexConfig cfg = single_vortex();
  auto dom = Domain::box(Vertex{0, 0}, 8);
  const DomainSolution cs = solve_cs_on_domain(cfg, dom);
  const DomainSolution ah = solve_ah(cfg, dom, {}, &cs);

  CHECK(ah.model == Model::abelian_higgs);
  for (std::size_t i = 0; i < dom->interior_count(); ++i) {
    CHECK(ah.u.interior()[i] >= cs.u.interior()[i] - ah.slack);
    CHECK(ah.u.interior()[i] <= ah.slack);
  }

  // The two equations do not have the same solution.
  CHECK(ah.u.at(Vertex{0, 0}) > cs.u.at(Vertex{0, 0}) + 1.0);
  CHECK(ah.u.at(Vertex{0, 0}) < -4.0);

  CHECK(ah.flux_gap <= 1e-6 * (1.0 + four_pi));
  CHECK(ah.tail_sum <= four_pi + 1e-6);
  CHECK(ah.energy_trace.empty());
}

TEST_CASE("recomputing the lower barrier gives the same answer") {
  const VortexConfig cfg = single_vortex();
  auto dom = Domain::box(Vertex{0, 0}, 4);
  const DomainSolution cs = solve_cs_on_domain(cfg, dom);
  const DomainSolution with_barrier = solve_ah(cfg, dom, {}, &cs);
  const DomainSolution standalone = solve_ah(cfg, dom);
  CHECK(sup_diff(with_barrier.u.interior(), standalone.u.interior()) == 0.0);
}

TEST_CASE("two-start newton probe confirms uniqueness") {
  const VortexConfig cfg = single_vortex();
  auto dom = Domain::box(Vertex{0, 0}, 5);
  const DomainSolution cs = solve_cs_on_domain(cfg, dom);
  const DomainSolution ah = solve_ah(cfg, dom, {}, &cs);

  const NewtonResult from_zero =
      newton_solve(cfg, dom, Model::abelian_higgs, LatticeField::zero(dom));
  const NewtonResult from_below = newton_solve(
      cfg, dom, Model::abelian_higgs,
      LatticeField(dom, std::vector<double>(cs.u.interior().begin(),
                                            cs.u.interior().end())));
  CHECK(sup_diff(from_zero.u.interior(), ah.u.interior()) <= 1e-8);
  CHECK(sup_diff(from_below.u.interior(), ah.u.interior()) <= 1e-8);
}

TEST_CASE("mismatched lower barriers are rejected") {
  const VortexConfig cfg = single_vortex();
  auto dom = Domain::box(Vertex{0, 0}, 3);
  auto other = Domain::box(Vertex{0, 0}, 4);
  const DomainSolution cs_other = solve_cs_on_domain(cfg, other);
  CHECK_THROWS_AS(solve_ah(cfg, dom, {}, &cs_other), error);

  DomainSolution wrong_lambda = solve_cs_on_domain(single_vortex(2.0), dom,
                                                   [] {
                                                     SolverParams q;
                                                     q.screening = 5.0;
                                                     return q;
                                                   }());
  CHECK_THROWS_AS(solve_ah(cfg, dom, {}, &wrong_lambda), error);

  const DomainSolution ah = solve_ah(cfg, dom);
  CHECK_THROWS_AS(solve_ah(cfg, dom, {}, &ah), error);  // not a CS solution
}

TEST_CASE("screening bound is lambda, not 2 lambda") {
  const VortexConfig cfg = single_vortex();
  auto dom = Domain::box(Vertex{0, 0}, 2);
  SolverParams p;
  p.screening = 1.5;  // > lambda = 1: legal here, illegal for chern_simons
  CHECK_NOTHROW(solve_ah(cfg, dom, p));
  p.screening = 0.5;
  CHECK_THROWS_AS(solve_ah(cfg, dom, p), error);
}

TEST_CASE("iterate refuses a start above zero") {
  auto dom = Domain::box(Vertex{0, 0}, 2);
  SolverParams p;
  std::vector<double> pos(dom->interior_count(), 0.3);
  CHECK_THROWS_AS(ah_iterate(LatticeField(dom, pos), single_vortex(), p, dom), error);
}
