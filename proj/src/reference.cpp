#include "paraframe/reference.hpp"

#include <cmath>

namespace paraframe {

namespace {

// Space form with R_0101 = R_0202 = R_1212 = v.
Tensor4 constant_curvature(double v) {
  Tensor4 r;
  for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    r(a, b, a, b) = v;
    r(b, a, b, a) = v;
    r(a, b, b, a) = -v;
    r(b, a, a, b) = -v;
  }
  return r;
}

ModelReference s1_reference(double r, double u1) {
  const double cot = std::cos(u1) / std::sin(u1) / r;
  const double tan = std::sin(u1) / std::cos(u1) / r;
  ModelReference ref;

  ref.gamma(0, 0, 1) = -cot;  // ∇_{e0} e0 = -cot e1
  ref.gamma(0, 1, 0) = cot;   // ∇_{e0} e1 = cot e0
  ref.gamma(2, 1, 2) = -tan;  // ∇_{e2} e1 = -tan e2
  ref.gamma(2, 2, 1) = tan;   // ∇_{e2} e2 = tan e1

  ref.f(0, 0, 2) = ref.f(0, 2, 0) = cot;
  ref.f(2, 1, 1) = 2.0 * tan;
  ref.f(2, 2, 2) = -2.0 * tan;

  Tensor3 f1, f11;
  f1(2, 1, 1) = 2.0 * tan;
  f1(2, 2, 2) = -2.0 * tan;
  f11(0, 0, 2) = f11(0, 2, 0) = cot;
  ref.class_components = {{1, f1}, {11, f11}};

  ref.n(0, 1, 0) = cot;
  ref.n(1, 0, 0) = -cot;

  ref.n_hat(2, 2, 1) = ref.n_hat(1, 1, 1) = 4.0 * tan;
  ref.n_hat(1, 2, 2) = ref.n_hat(2, 1, 2) = -4.0 * tan;
  ref.n_hat(0, 0, 1) = -2.0 * cot;
  ref.n_hat(0, 1, 0) = ref.n_hat(1, 0, 0) = cot;

  const double k = 1.0 / (r * r);
  ref.r = constant_curvature(-k);
  ref.ricci = 2.0 * k * identity2();
  ref.ricci_star(1, 2) = ref.ricci_star(2, 1) = -k;
  ref.tau = 6.0 * k;
  ref.tau_star = 0.0;
  ref.sectional = k;
  ref.kappa = k;

  ref.nabla_xi_xi(1) = -cot;
  ref.d_eta(0, 1) = -cot;  // (∇_{e0} eta)(e1) - (∇_{e1} eta)(e0)
  ref.d_eta(1, 0) = cot;
  return ref;
}

ModelReference s2_reference(double r, double u1) {
  const double coth = std::cosh(u1) / std::sinh(u1) / r;
  const double tanh = std::tanh(u1) / r;
  ModelReference ref;

  ref.gamma(1, 0, 1) = coth;   // ∇_{e1} e0 = coth e1
  ref.gamma(2, 0, 2) = tanh;   // ∇_{e2} e0 = tanh e2
  ref.gamma(1, 1, 0) = -coth;  // ∇_{e1} e1 = -coth e0
  ref.gamma(2, 2, 0) = -tanh;  // ∇_{e2} e2 = -tanh e0

  ref.f(1, 0, 2) = ref.f(1, 2, 0) = -coth;
  ref.f(2, 0, 1) = ref.f(2, 1, 0) = -tanh;

  const double half_theta_star0 = -0.5 * (coth + tanh);
  const double mu = 0.5 * (tanh - coth);
  Tensor3 f5, f9;
  f5(1, 0, 2) = f5(1, 2, 0) = f5(2, 0, 1) = f5(2, 1, 0) = half_theta_star0;
  f9(1, 0, 2) = f9(1, 2, 0) = mu;
  f9(2, 0, 1) = f9(2, 1, 0) = -mu;
  ref.class_components = {{5, f5}, {9, f9}};

  const double w = 2.0 / (r * std::sinh(2.0 * u1));
  ref.n(1, 0, 1) = ref.n(0, 2, 2) = w;
  ref.n(0, 1, 1) = ref.n(2, 0, 2) = -w;

  ref.n_hat(1, 0, 1) = ref.n_hat(0, 1, 1) = w;
  ref.n_hat(2, 0, 2) = ref.n_hat(0, 2, 2) = -w;
  ref.n_hat(1, 1, 0) = ref.n_hat(2, 2, 0) = -2.0 * (coth + tanh);

  const double k = 1.0 / (r * r);
  ref.r = constant_curvature(k);
  ref.ricci = -2.0 * k * identity2();
  ref.ricci_star(1, 2) = ref.ricci_star(2, 1) = k;
  ref.tau = -6.0 * k;
  ref.tau_star = 0.0;
  ref.sectional = -k;
  ref.kappa = -k;
  return ref;
}

}  // namespace

ModelReference reference_values(const ModelPoint& p) {
  if (p.model == ModelId::Custom)
    throw std::invalid_argument("reference_values: no closed forms for custom models");
  validate(p);
  return p.model == ModelId::S1 ? s1_reference(p.r, p.u[1]) : s2_reference(p.r, p.u[0]);
}

}  // namespace paraframe
