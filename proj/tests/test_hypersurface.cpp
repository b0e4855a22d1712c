#include <doctest.h>

#include <cmath>
#include <numbers>

#include "paraframe/geometry.hpp"
#include "paraframe/hypersurface.hpp"

using namespace paraframe;
using doctest::Approx;
using std::numbers::pi;

namespace {

const double kLn2 = std::log(2.0);

// Cylindrical coordinates on Euclidean 3-space sitting in the hyperplane z4 = 0.
// e0 = d0, e1 = (1/u0) d1, e2 = d2, so [e0, e1] = -(1/u0) e1 and every other
// bracket vanishes.
Immersion polar_immersion() {
  Immersion imm;
  imm.name = "polar";
  imm.signature = AmbientSignature::Euclidean;
  imm.map = [](const std::array<Jet<3>, 3>& u) {
    return std::array<Jet<3>, 4>{u[0] * cos(u[1]), u[0] * sin(u[1]), u[2], Jet<3>(0.0)};
  };
  imm.check_domain = [](const Params& u) {
    if (!(u[0] > 0.0)) throw DomainError("u0 must be positive");
  };
  return imm;
}

double max_abs_diff(const StructureField& a, const StructureField& b) {
  return std::max(max_diff(a.c, b.c), max_diff(a.dc, b.dc));
}

}  // namespace

TEST_CASE("immerse S1") {
  const double r = std::sqrt(2.0);
  const Jet3 j = immerse(ModelPoint{ModelId::S1, r, {0.0, pi / 4, 0.0}});
  CHECK(j.value[0] == Approx(1.0));
  CHECK(std::abs(j.value[1]) < 1e-15);
  CHECK(j.value[2] == Approx(1.0));
  CHECK(std::abs(j.value[3]) < 1e-15);
  CHECK(ambient_inner(AmbientSignature::Euclidean, j.value, j.value) == Approx(2.0));
  CHECK(j.d2_symmetry_residual() == 0.0);
  CHECK(j.d3_symmetry_residual() == 0.0);
}

TEST_CASE("immerse S1 first and second partials") {
  const double r = 1.5, u0 = 0.4, u1 = 0.9, u2 = 2.1;
  const Jet3 j = immerse(ModelPoint{ModelId::S1, r, {u0, u1, u2}});
  const AmbientVector d1 = {-r * std::sin(u1) * std::cos(u2), -r * std::sin(u1) * std::sin(u2),
                            r * std::cos(u1) * std::cos(u0), r * std::cos(u1) * std::sin(u0)};
  const AmbientVector d01 = {0.0, 0.0, -r * std::cos(u1) * std::sin(u0),
                             r * std::cos(u1) * std::cos(u0)};
  for (int a = 0; a < 4; ++a) {
    CHECK(j.d1[1][a] == Approx(d1[a]));
    CHECK(j.d2[0][1][a] == Approx(d01[a]));
  }
}

TEST_CASE("immerse S2") {
  const Jet3 j = immerse(ModelPoint{ModelId::S2, 1.0, {kLn2, 0.0, 0.0}});
  CHECK(j.value[0] == Approx(0.75));
  CHECK(j.value[1] == 0.0);
  CHECK(j.value[2] == 0.0);
  CHECK(j.value[3] == Approx(1.25));
  CHECK(ambient_inner(AmbientSignature::Minkowski, j.value, j.value) == Approx(-1.0));
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S1, 1.0, {0.0, pi / 2, 0.0}}), DomainError);
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S1, 1.0, {0.0, 0.0, 0.0}}), DomainError);
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S1, 1.0, {0.0, pi + 5e-7, 0.0}}), DomainError);
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S1, 1.0, {7.0, 0.5, 0.0}}), DomainError);
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S1, -1.0, {0.0, 0.5, 0.0}}), DomainError);
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S2, 1.0, {0.0, 0.5, 0.0}}), DomainError);
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S2, 1.0, {0.5, -0.1, 0.0}}), DomainError);
  CHECK_THROWS_AS(validate(ModelPoint{ModelId::S2, 1.0, {0.5, 0.1, NAN}}), DomainError);
  CHECK_NOTHROW(validate(ModelPoint{ModelId::S2, 1.0, {-0.5, 0.1, -30.0}}));
  CHECK_NOTHROW(validate(ModelPoint{ModelId::S1, 1.0, {6.2, 3.5, 0.0}}));
}

TEST_CASE("induced metric") {
  SUBCASE("S1") {
    const Jet3 j = immerse(ModelPoint{ModelId::S1, 2.0, {0.3, pi / 3, 1.0}});
    const Tensor2 g = induced_metric(j, AmbientSignature::Euclidean);
    Tensor2 expected;
    expected(0, 0) = 3.0;
    expected(1, 1) = 4.0;
    expected(2, 2) = 1.0;
    CHECK(max_diff(g, expected) <= 1e-14);
  }
  SUBCASE("S2") {
    const Jet3 j = immerse(ModelPoint{ModelId::S2, 1.0, {kLn2, 0.7, -0.4}});
    const Tensor2 g = induced_metric(j, AmbientSignature::Minkowski);
    Tensor2 expected;
    expected(0, 0) = 1.0;
    expected(1, 1) = 9.0 / 16.0;
    expected(2, 2) = 25.0 / 16.0;
    CHECK(max_diff(g, expected) <= 1e-14);
  }
  SUBCASE("degenerate") {
    Jet3 j;
    j.d1[0] = {1.0, 0.0, 0.0, 0.0};
    j.d1[1] = {0.0, 1.0, 0.0, 0.0};
    j.d1[2] = {0.0, 0.0, 0.0, 1.0};
    CHECK_THROWS_WITH_AS(induced_metric(j, AmbientSignature::Minkowski),
                         doctest::Contains("induced metric not Riemannian"), GeometryError);
  }
}

TEST_CASE("orthonormal frames") {
  SUBCASE("S1 at u1 = pi/4") {
    const ModelPoint p{ModelId::S1, 1.0, {0.2, pi / 4, 0.9}};
    const FrameCoeffs fr = orthonormal_frame(p);
    Tensor2 expected;
    expected(0, 0) = std::sqrt(2.0);
    expected(1, 1) = 1.0;
    expected(2, 2) = std::sqrt(2.0);
    CHECK(max_diff(fr.a, expected) <= 1e-14);
    CHECK(fr.gram_residual(induced_metric(immerse(p), AmbientSignature::Euclidean)) <= 1e-12);
  }
  SUBCASE("S2 at u1 = ln 2") {
    const ModelPoint p{ModelId::S2, 2.0, {kLn2, 1.0, 0.3}};
    const FrameCoeffs fr = orthonormal_frame(p);
    Tensor2 expected;
    expected(0, 0) = 0.5;
    expected(1, 1) = 2.0 / 3.0;
    expected(2, 2) = 0.4;
    CHECK(max_diff(fr.a, expected) <= 1e-14);
    CHECK(fr.gram_residual(induced_metric(immerse(p), AmbientSignature::Minkowski)) <= 1e-12);
  }
  SUBCASE("degenerate coordinate vectors") {
    Jet3 j;
    j.d1[0] = {1.0, 0.0, 0.0, 0.0};
    j.d1[1] = {2.0, 0.0, 0.0, 0.0};
    j.d1[2] = {0.0, 0.0, 1.0, 0.0};
    CHECK_THROWS_AS(orthonormal_frame(j, AmbientSignature::Euclidean,
                                      SignConvention::LeadingPositive),
                    GeometryError);
  }
}

TEST_CASE("structure_field at the worked points") {
  SUBCASE("S1 r=1 u1=pi/4") {
    const StructureField sf = structure_field(ModelPoint{ModelId::S1, 1.0, {0.1, pi / 4, 0.2}});
    Tensor3 expected;
    expected(0, 1, 0) = 1.0;
    expected(1, 0, 0) = -1.0;
    expected(1, 2, 2) = 1.0;
    expected(2, 1, 2) = -1.0;
    CHECK(max_diff(sf.c, expected) <= 1e-14);
    CHECK(sf.dc(1, 0, 1, 0) == Approx(-2.0));
  }
  SUBCASE("S2 r=1 u1=ln 2") {
    const StructureField sf = structure_field(ModelPoint{ModelId::S2, 1.0, {kLn2, 0.3, 0.2}});
    Tensor3 expected;
    expected(0, 1, 1) = -5.0 / 3.0;
    expected(1, 0, 1) = 5.0 / 3.0;
    expected(0, 2, 2) = -3.0 / 5.0;
    expected(2, 0, 2) = 3.0 / 5.0;
    CHECK(max_diff(sf.c, expected) <= 1e-14);
  }
}

TEST_CASE("closed_form_field") {
  const StructureField s1 = closed_form_field(ModelPoint{ModelId::S1, 2.0, {0.0, pi / 3, 0.0}});
  CHECK(s1.c(0, 1, 0) == Approx(1.0 / (2.0 * std::sqrt(3.0))));
  const StructureField s2 = closed_form_field(ModelPoint{ModelId::S2, 1.0, {-kLn2, 0.0, 0.0}});
  CHECK(s2.c(0, 1, 1) == Approx(5.0 / 3.0));
  CHECK_THROWS_AS(closed_form_field(ModelPoint{ModelId::Custom, 1.0, {1.0, 0.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("jet pipeline agrees with the closed forms on every quadrant and branch") {
  for (ModelId model : {ModelId::S1, ModelId::S2}) {
    for (double r : {0.5, 1.0, 3.0}) {
      for (const ModelPoint& p : sample_points(model, r, 40, 99)) {
        REQUIRE(max_abs_diff(structure_field(p), closed_form_field(p)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("finite differences agree with the jet pipeline") {
  // Away from the excluded loci, where high derivatives of cot and coth keep the
  // truncation error of the nested differences small.
  const double s1_u1[] = {0.4, 1.2, 2.0, 2.6, 3.6, 4.4, 5.0, 5.8};
  const double s2_u1[] = {0.3, 0.6, 1.0, 2.0, -0.3, -0.6, -1.0, -2.0};
  for (int n = 0; n < 8; ++n) {
    for (ModelId model : {ModelId::S1, ModelId::S2}) {
      ModelPoint p{model, 1.0, {0.3, 0.3, 0.3}};
      p.u[model == ModelId::S1 ? 1 : 0] = model == ModelId::S1 ? s1_u1[n] : s2_u1[n];
      const Immersion imm = builtin_immersion(model, p.r);
      const StructureField fd = finite_difference_field(imm, p.u, imm.default_convention);
      const StructureField jet = structure_field(p);
      CHECK(max_diff(fd.c, jet.c) <= 1e-7);
      CHECK(max_diff(fd.dc, jet.dc) <= 1e-5 * std::max(1.0, jet.dc.max_abs()));
    }
  }
}

TEST_CASE("S1 frame sign flips leave the brackets unchanged") {
  // The chart frame is determined up to the sign of each vector; both
  // conventions must give the same commutators in every quadrant.
  for (const ModelPoint& p : sample_points(ModelId::S1, 1.0, 20, 5)) {
    const Immersion imm = builtin_immersion(ModelId::S1, p.r);
    const StructureField chart = structure_field(imm, p.u, SignConvention::ChartAligned);
    const StructureField lead = structure_field(imm, p.u, SignConvention::LeadingPositive);
    CHECK(max_abs_diff(chart, lead) <= 1e-12);
  }
}

TEST_CASE("custom immersion with the leading-positive convention") {
  const Immersion imm = polar_immersion();
  const Params u = {2.0, 0.7, -1.0};
  const StructureField sf = structure_field(imm, u, SignConvention::LeadingPositive);
  Tensor3 expected;
  expected(0, 1, 1) = -0.5;
  expected(1, 0, 1) = 0.5;
  CHECK(max_diff(sf.c, expected) <= 1e-14);
  // e0(C01^1) = d/du0 (-1/u0) = 1/u0^2
  CHECK(sf.dc(0, 0, 1, 1) == Approx(0.25));

  const ConnectionCoeffs conn = koszul(sf);
  const Tensor4 r = curvature(conn, sf, Checks::On);
  CHECK(r.max_abs() <= 1e-14);
  CHECK(max_abs_diff(finite_difference_field(imm, u, SignConvention::LeadingPositive), sf) <=
        1e-5);
}
