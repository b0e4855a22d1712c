#include "paraframe/classifier.hpp"

#include <algorithm>
#include <cmath>

namespace paraframe {

Tensor3 fundamental_tensor(const ConnectionCoeffs& conn, const AprStructure& s) {
  Tensor3 f;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        double v = 0.0;
        for (int m = 0; m < kDim; ++m)
          v += s.phi(m, j) * conn.gamma(i, m, k) - conn.gamma(i, j, m) * s.phi(k, m);
        f(i, j, k) = v;
      }
  return f;
}

FSymmetryResiduals f_symmetry_residuals(const Tensor3& f, const AprStructure& s) {
  FSymmetryResiduals res;
  for (int i = 0; i < kDim; ++i) {
    const Vec3 x = basis_vector(i);
    for (int j = 0; j < kDim; ++j) {
      const Vec3 y = basis_vector(j);
      for (int k = 0; k < kDim; ++k) {
        const Vec3 z = basis_vector(k);
        res.yz_symmetry = std::max(res.yz_symmetry, std::abs(f(i, j, k) - f(i, k, j)));
        const double rhs = -eval(f, x, phi_apply(s, y), phi_apply(s, z)) +
                           dot(s.eta, y) * eval(f, x, s.xi, z) +
                           dot(s.eta, z) * eval(f, x, y, s.xi);
        res.phi_property = std::max(res.phi_property, std::abs(f(i, j, k) - rhs));
      }
    }
  }
  return res;
}

LeeForms lee_forms(const Tensor3& f) {
  // theta*(z) = sum_i F(e_i, phi e_i, z) with phi e1 = e2, phi e2 = e1
  LeeForms lee;
  for (int k = 0; k < kDim; ++k) {
    lee.theta(k) = f(1, 1, k) + f(2, 2, k);
    lee.theta_star(k) = f(1, 2, k) + f(2, 1, k);
    lee.omega(k) = f(0, 0, k);
  }
  return lee;
}

namespace {

// Symmetrized pairings appearing in every class formula.
double sym(const Vec3& y, const Vec3& z, int a, int b) { return y(a) * z(b) + y(b) * z(a); }

using ClassFormula = double (*)(const ClassParameters&, const Vec3&, const Vec3&, const Vec3&);

constexpr std::array<ClassFormula, 7> kFormulas = {
    // F1
    [](const ClassParameters& p, const Vec3& x, const Vec3& y, const Vec3& z) {
      return (x(1) * p.theta1 - x(2) * p.theta2) * (y(1) * z(1) - y(2) * z(2));
    },
    // F4
    [](const ClassParameters& p, const Vec3& x, const Vec3& y, const Vec3& z) {
      return 0.5 * p.theta0 * (x(1) * sym(y, z, 0, 1) + x(2) * sym(y, z, 0, 2));
    },
    // F5
    [](const ClassParameters& p, const Vec3& x, const Vec3& y, const Vec3& z) {
      return 0.5 * p.theta_star0 * (x(1) * sym(y, z, 0, 2) + x(2) * sym(y, z, 0, 1));
    },
    // F8
    [](const ClassParameters& p, const Vec3& x, const Vec3& y, const Vec3& z) {
      return p.lambda * (x(1) * sym(y, z, 0, 1) - x(2) * sym(y, z, 0, 2));
    },
    // F9
    [](const ClassParameters& p, const Vec3& x, const Vec3& y, const Vec3& z) {
      return p.mu * (x(1) * sym(y, z, 0, 2) - x(2) * sym(y, z, 0, 1));
    },
    // F10
    [](const ClassParameters& p, const Vec3& x, const Vec3& y, const Vec3& z) {
      return p.nu * x(0) * (y(1) * z(1) - y(2) * z(2));
    },
    // F11
    [](const ClassParameters& p, const Vec3& x, const Vec3& y, const Vec3& z) {
      return x(0) * (p.omega1 * sym(y, z, 0, 1) + p.omega2 * sym(y, z, 0, 2));
    },
};

}  // namespace

const Tensor3& FDecomposition::component(int class_id) const {
  const auto it = std::find(kAdmissibleClasses.begin(), kAdmissibleClasses.end(), class_id);
  if (it == kAdmissibleClasses.end())
    throw std::out_of_range("no class F" + std::to_string(class_id) + " in dimension 3");
  return components[static_cast<std::size_t>(it - kAdmissibleClasses.begin())];
}

Tensor3 FDecomposition::sum() const {
  Tensor3 total;
  for (const auto& c : components) total += c;
  return total;
}

FDecomposition class_components(const Tensor3& f, const LeeForms& lee) {
  FDecomposition d;
  auto& p = d.params;
  p.theta0 = lee.theta(0);
  p.theta_star0 = lee.theta_star(0);
  p.theta1 = lee.theta(1);
  p.theta2 = lee.theta(2);
  p.lambda = 0.5 * (f(1, 1, 0) - f(2, 2, 0));
  p.mu = 0.5 * (f(1, 2, 0) - f(2, 1, 0));
  p.nu = 0.5 * (f(0, 1, 1) - f(0, 2, 2));
  p.omega1 = lee.omega(1);
  p.omega2 = lee.omega(2);

  for (std::size_t n = 0; n < kFormulas.size(); ++n) {
    Tensor3& t = d.components[n];
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          t(i, j, k) = kFormulas[n](p, basis_vector(i), basis_vector(j), basis_vector(k));
  }
  d.residual = max_diff(f, d.sum());
  d.f_norm = f.max_abs();
  return d;
}

std::string ClassLabel::to_string() const {
  if (classes.empty()) return "F0";
  std::string out;
  for (std::size_t n = 0; n < classes.size(); ++n) {
    if (n > 0) out += " ⊕ ";
    out += "F" + std::to_string(classes[n]);
  }
  return out;
}

double default_class_tolerance(const FDecomposition& d) {
  return 1e-8 * std::max(1.0, d.f_norm);
}

ClassLabel classify(const FDecomposition& d, double tol) {
  if (tol < 0.0) tol = default_class_tolerance(d);
  if (d.residual > tol)
    throw ClassificationError("F outside the admissible 3-dim class span (residual " +
                              std::to_string(d.residual) + ")");
  ClassLabel label;
  for (std::size_t n = 0; n < kAdmissibleClasses.size(); ++n)
    if (d.components[n].max_abs() > tol) label.classes.push_back(kAdmissibleClasses[n]);
  label.is_f0 = label.classes.empty();
  return label;
}

double check_nabla_eta_relation(const ConnectionCoeffs& conn, const Tensor3& f,
                                const AprStructure& s) {
  double res = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const double rhs = eval(f, basis_vector(i), phi_apply(s, basis_vector(j)), s.xi);
      res = std::max(res, std::abs(conn.gamma(i, 0, j) + rhs));
    }
  return res;
}

}  // namespace paraframe
