#pragma once

#include <algorithm>

#include "paraframe/tensor.hpp"

namespace paraframe {

/// Almost paracontact almost paracomplex structure (phi, xi, eta, g) written in
/// an adapted frame, so every component is constant. phi(m, j) is the m-th
/// component of phi e_j.
struct AprStructure {
  Tensor2 phi;
  Vec3 xi;
  Vec3 eta;
  Tensor2 metric;
};

/// phi e0 = 0, phi e1 = e2, phi e2 = e1, xi = e0, eta = e^0, g = identity.
AprStructure standard_structure();

Vec3 phi_apply(const AprStructure& s, const Vec3& x);

/// Per-axiom maximum residual over all frame vectors.
struct AxiomReport {
  double phi_squared = 0.0;     // phi^2 - (I - eta ⊗ xi)
  double eta_of_xi = 0.0;       // eta(xi) - 1
  double eta_phi = 0.0;         // eta ∘ phi
  double phi_xi = 0.0;          // phi xi
  double trace_phi = 0.0;       // tr phi
  double metric_compat = 0.0;   // g(phi x, phi y) - g(x, y) + eta(x) eta(y)
  double tolerance = kDefaultTolerance;

  double max() const {
    return std::max({phi_squared, eta_of_xi, eta_phi, phi_xi, trace_phi, metric_compat});
  }
  bool passed() const { return max() <= tolerance; }
};

AxiomReport verify_axioms(const AprStructure& s, double tol = kDefaultTolerance);

}  // namespace paraframe
