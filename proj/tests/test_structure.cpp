#include <doctest.h>

#include "paraframe/geometry.hpp"
#include "paraframe/structure.hpp"

using namespace paraframe;

TEST_CASE("standard_structure") {
  const AprStructure s = standard_structure();
  CHECK(max_diff(phi_apply(s, basis_vector(1)), basis_vector(2)) == 0.0);
  CHECK(dot(s.eta, basis_vector(0)) == 1.0);
  CHECK(dot(s.eta, basis_vector(1)) == 0.0);
  CHECK(dot(s.eta, basis_vector(2)) == 0.0);
  CHECK(trace2(s.phi) == 0.0);
  CHECK(max_diff(s.metric, identity2()) == 0.0);
}

TEST_CASE("phi_apply") {
  const AprStructure s = standard_structure();
  CHECK(max_diff(phi_apply(s, basis_vector(2)), basis_vector(1)) == 0.0);
  CHECK(phi_apply(s, s.xi).max_abs() == 0.0);
  const Vec3 e1_plus_e2 = basis_vector(1) + basis_vector(2);
  CHECK(max_diff(phi_apply(s, e1_plus_e2), e1_plus_e2) == 0.0);
}

TEST_CASE("verify_axioms") {
  SUBCASE("standard structure is exact") {
    const AxiomReport rep = verify_axioms(standard_structure());
    CHECK(rep.max() == 0.0);
    CHECK(rep.passed());
  }
  SUBCASE("eta not dual to xi") {
    AprStructure s = standard_structure();
    s.eta = basis_vector(1);
    const AxiomReport rep = verify_axioms(s);
    CHECK(rep.eta_of_xi == 1.0);
    CHECK_FALSE(rep.passed());
  }
  SUBCASE("phi e1 = e1 breaks the trace") {
    AprStructure s = standard_structure();
    s.phi(2, 1) = 0.0;
    s.phi(1, 1) = 1.0;
    const AxiomReport rep = verify_axioms(s);
    CHECK(rep.trace_phi == 1.0);
    CHECK_FALSE(rep.passed());
  }
}

TEST_CASE("metric compatibility on random vector pairs") {
  const AprStructure s = standard_structure();
  SampleStream rng(2024);
  for (int n = 0; n < 1000; ++n) {
    Vec3 x, y;
    for (int i = 0; i < 3; ++i) {
      x(i) = rng.uniform(-10.0, 10.0);
      y(i) = rng.uniform(-10.0, 10.0);
    }
    const double lhs = eval(s.metric, phi_apply(s, x), phi_apply(s, y));
    const double rhs = eval(s.metric, x, y) - dot(s.eta, x) * dot(s.eta, y);
    REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("phi squared on basis vectors") {
  const AprStructure s = standard_structure();
  for (int i = 0; i < 3; ++i) {
    const Vec3 x = basis_vector(i);
    const Vec3 expected = x - dot(s.eta, x) * s.xi;
    CHECK(max_diff(phi_apply(s, phi_apply(s, x)), expected) == 0.0);
  }
}
