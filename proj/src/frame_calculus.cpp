#include "paraframe/frame_calculus.hpp"

#include <stdexcept>

namespace paraframe {

double bracket_antisymmetry_residual(const StructureField& sf) {
  double res = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        res = std::max(res, std::abs(sf.c(i, j, k) + sf.c(j, i, k)));
        for (int l = 0; l < kDim; ++l)
          res = std::max(res, std::abs(sf.dc(l, i, j, k) + sf.dc(l, j, i, k)));
      }
  return res;
}

double jacobi_residual(const StructureField& sf) {
  // [[e_i,e_j],e_k] = (c_ij^m c_mk^l - e_k(c_ij^l)) e_l
  auto term = [&](int i, int j, int k, int l) {
    double s = -sf.dc(k, i, j, l);
    for (int m = 0; m < kDim; ++m) s += sf.c(i, j, m) * sf.c(m, k, l);
    return s;
  };
  double res = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l)
          res = std::max(res, std::abs(term(i, j, k, l) + term(j, k, i, l) + term(k, i, j, l)));
  return res;
}

ConnectionCoeffs koszul(const StructureField& sf, double tol) {
  if (bracket_antisymmetry_residual(sf) > tol * std::max(1.0, sf.c.max_abs()))
    throw std::invalid_argument("koszul: structure constants are not antisymmetric in (i, j)");

  ConnectionCoeffs conn;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        conn.gamma(i, j, k) = 0.5 * (sf.c(i, j, k) + sf.c(k, i, j) + sf.c(k, j, i));
        for (int l = 0; l < kDim; ++l)
          conn.dgamma(l, i, j, k) =
              0.5 * (sf.dc(l, i, j, k) + sf.dc(l, k, i, j) + sf.dc(l, k, j, i));
      }
  return conn;
}

double metric_compatibility_residual(const ConnectionCoeffs& conn) {
  double res = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        res = std::max(res, std::abs(conn.gamma(i, j, k) + conn.gamma(i, k, j)));
        for (int l = 0; l < kDim; ++l)
          res = std::max(res, std::abs(conn.dgamma(l, i, j, k) + conn.dgamma(l, i, k, j)));
      }
  return res;
}

double torsion_residual(const ConnectionCoeffs& conn, const StructureField& sf) {
  double res = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        res = std::max(res, std::abs(conn.gamma(i, j, k) - conn.gamma(j, i, k) - sf.c(i, j, k)));
        for (int l = 0; l < kDim; ++l)
          res = std::max(res, std::abs(conn.dgamma(l, i, j, k) - conn.dgamma(l, j, i, k) -
                                       sf.dc(l, i, j, k)));
      }
  return res;
}

Tensor4 curvature(const ConnectionCoeffs& conn, const StructureField& sf, Checks checks,
                  double tol) {
  if (checks == Checks::On) {
    const double scale = std::max({1.0, sf.c.max_abs(), sf.dc.max_abs()});
    if (torsion_residual(conn, sf) > tol * scale)
      throw std::invalid_argument(
          "curvature: connection is not torsion-free for the given structure field "
          "(gamma_ij^k - gamma_ji^k != c_ij^k)");
  }

  const auto& g = conn.gamma;
  Tensor4 r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          double s = conn.dgamma(i, j, k, l) - conn.dgamma(j, i, k, l);
          for (int m = 0; m < kDim; ++m)
            s += g(j, k, m) * g(i, m, l) - g(i, k, m) * g(j, m, l) - sf.c(i, j, m) * g(m, k, l);
          r(i, j, k, l) = s;
        }
  return r;
}

double sectional(const Tensor4& r, const Tensor2& g, const Vec3& x, const Vec3& y) {
  const Tensor4 gg = kulkarni_nomizu(g, g);
  const double den = eval(gg, x, y, y, x);
  const double scale = eval(g, x, x) * eval(g, y, y);
  if (!(std::abs(den) > 1e-12 * std::max(scale, 1e-300)))
    throw std::domain_error("sectional: the 2-plane is degenerate");
  return -2.0 * eval(r, x, y, y, x) / den;
}

double space_form_residual(const Tensor4& r, const Tensor2& g, double kappa) {
  return (r + 0.5 * kappa * kulkarni_nomizu(g, g)).max_abs();
}

Tensor2 nabla_xi(const ConnectionCoeffs& conn) {
  Tensor2 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) out(i, j) = conn.gamma(i, 0, j);
  return out;
}

Tensor2 d_eta(const ConnectionCoeffs& conn) {
  const Tensor2 n = nabla_xi(conn);
  return n - transpose(n);
}

Tensor2 lie_xi_g(const ConnectionCoeffs& conn) {
  const Tensor2 n = nabla_xi(conn);
  return n + transpose(n);
}

}  // namespace paraframe
