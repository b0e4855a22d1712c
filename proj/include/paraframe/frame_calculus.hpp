#pragma once

#include "paraframe/tensor.hpp"

namespace paraframe {

/// Structure constants of an orthonormal frame field at a point:
/// [e_i, e_j] = c(i, j, k) e_k, and dc(l, i, j, k) = e_l(c(i, j, k)).
struct StructureField {
  Tensor3 c;
  Tensor4 dc;
};

/// Levi-Civita connection in the frame: gamma(i, j, k) = g(∇_{e_i} e_j, e_k),
/// dgamma(l, i, j, k) = e_l(gamma(i, j, k)).
struct ConnectionCoeffs {
  Tensor3 gamma;
  Tensor4 dgamma;
};

enum class Checks { On, Off };

/// Largest violation of c(i,j,k) = -c(j,i,k) over c and every dc slice.
double bracket_antisymmetry_residual(const StructureField& sf);

/// Cyclic sum of c_ij^m c_mk^l - e_k(c_ij^l); zero for a genuine frame field.
double jacobi_residual(const StructureField& sf);

/// Koszul formula in an orthonormal frame:
/// gamma_ij^k = (c_ij^k + c_ki^j + c_kj^i) / 2, applied linearly to dc as well.
/// Throws std::invalid_argument if sf is not antisymmetric in (i, j).
ConnectionCoeffs koszul(const StructureField& sf, double tol = kDefaultTolerance);

/// gamma_ij^k + gamma_ik^j (value and derivative parts).
double metric_compatibility_residual(const ConnectionCoeffs& conn);

/// gamma_ij^k - gamma_ji^k - c_ij^k (value and derivative parts).
double torsion_residual(const ConnectionCoeffs& conn, const StructureField& sf);

/// R_ijkl = g(R(e_i, e_j) e_k, e_l) with R = [∇, ∇] - ∇_[ , ].
/// With checks on, a torsion mismatch above tol throws std::invalid_argument.
Tensor4 curvature(const ConnectionCoeffs& conn, const StructureField& sf,
                  Checks checks = Checks::On, double tol = kDefaultTolerance);

/// k(span{x, y}) = -2 R(x,y,y,x) / (g ∧ g)(x,y,y,x). Throws std::domain_error
/// for a degenerate plane.
double sectional(const Tensor4& r, const Tensor2& g, const Vec3& x, const Vec3& y);

/// max |R + (kappa / 2) g ∧ g|.
double space_form_residual(const Tensor4& r, const Tensor2& g, double kappa);

/// (∇_{e_i} eta)(e_j) = g(∇_{e_i} xi, e_j) = gamma(i, 0, j) for xi = e0.
Tensor2 nabla_xi(const ConnectionCoeffs& conn);

/// d eta(x, y) = (∇_x eta) y - (∇_y eta) x.
Tensor2 d_eta(const ConnectionCoeffs& conn);

/// (L_xi g)(x, y) = (∇_x eta) y + (∇_y eta) x.
Tensor2 lie_xi_g(const ConnectionCoeffs& conn);

}  // namespace paraframe
