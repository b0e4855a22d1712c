#include "paraframe/structure.hpp"

#include <cmath>

namespace paraframe {

AprStructure standard_structure() {
  AprStructure s;
  s.phi(2, 1) = 1.0;
  s.phi(1, 2) = 1.0;
  s.xi(0) = 1.0;
  s.eta(0) = 1.0;
  s.metric = identity2();
  return s;
}

Vec3 phi_apply(const AprStructure& s, const Vec3& x) { return apply(s.phi, x); }

AxiomReport verify_axioms(const AprStructure& s, double tol) {
  AxiomReport rep;
  rep.tolerance = tol;

  const Tensor2 phi2 = matmul(s.phi, s.phi);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const double expected = (i == j ? 1.0 : 0.0) - s.xi(i) * s.eta(j);
      rep.phi_squared = std::max(rep.phi_squared, std::abs(phi2(i, j) - expected));
    }

  rep.eta_of_xi = std::abs(dot(s.eta, s.xi) - 1.0);

  for (int j = 0; j < kDim; ++j) {
    double eta_phi_j = 0.0;
    for (int m = 0; m < kDim; ++m) eta_phi_j += s.eta(m) * s.phi(m, j);
    rep.eta_phi = std::max(rep.eta_phi, std::abs(eta_phi_j));
  }

  rep.phi_xi = apply(s.phi, s.xi).max_abs();
  rep.trace_phi = std::abs(trace2(s.phi));

  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Vec3 x = basis_vector(i);
      const Vec3 y = basis_vector(j);
      const double lhs = eval(s.metric, phi_apply(s, x), phi_apply(s, y));
      const double rhs = eval(s.metric, x, y) - dot(s.eta, x) * dot(s.eta, y);
      rep.metric_compat = std::max(rep.metric_compat, std::abs(lhs - rhs));
    }
  return rep;
}

}  // namespace paraframe
