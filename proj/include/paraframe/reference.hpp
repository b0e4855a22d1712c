#pragma once

#include <array>
#include <map>

#include "paraframe/hypersurface.hpp"
#include "paraframe/tensor.hpp"

namespace paraframe {

/// Closed-form values of every frame quantity of the two built-in hyperspheres,
/// written out component by component. Entries not listed are zero.
struct ModelReference {
  Tensor3 gamma;  // gamma(i, j, k) = g(∇_{e_i} e_j, e_k)
  Tensor3 f;
  std::map<int, Tensor3> class_components;  // only the nonvanishing classes
  Tensor3 n;
  Tensor3 n_hat;
  Tensor4 r;
  Tensor2 ricci;
  Tensor2 ricci_star;
  double tau = 0.0;
  double tau_star = 0.0;
  double sectional = 0.0;  // k01 = k02 = k12
  double kappa = 0.0;      // R = -(kappa / 2) g ∧ g
  Vec3 nabla_xi_xi;        // ∇_xi xi
  Tensor2 d_eta;
};

/// Throws std::invalid_argument for custom models, DomainError off-chart.
ModelReference reference_values(const ModelPoint& p);

}  // namespace paraframe
