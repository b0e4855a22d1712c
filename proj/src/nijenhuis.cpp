#include "paraframe/nijenhuis.hpp"

namespace paraframe {

namespace {

// F(phi e_i, e_j, e_k) and friends, with phi(m, i) the m-th component of phi e_i.
struct FView {
  const Tensor3& f;
  const AprStructure& s;

  double phi_first(int i, int j, int k) const {
    double v = 0.0;
    for (int m = 0; m < kDim; ++m) v += s.phi(m, i) * f(m, j, k);
    return v;
  }
  double phi_third(int i, int j, int k) const {
    double v = 0.0;
    for (int m = 0; m < kDim; ++m) v += s.phi(m, k) * f(i, j, m);
    return v;
  }
  // F(e_i, phi e_j, xi)
  double phi_second_xi(int i, int j) const {
    return eval(f, basis_vector(i), phi_apply(s, basis_vector(j)), s.xi);
  }
};

Tensor3 from_F(const Tensor3& f, const AprStructure& s, double sign) {
  const FView v{f, s};
  Tensor3 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        double val = v.phi_first(i, j, k) + sign * v.phi_first(j, i, k) - v.phi_third(i, j, k) -
                     sign * v.phi_third(j, i, k);
        val += s.eta(k) * (v.phi_second_xi(i, j) + sign * v.phi_second_xi(j, i));
        out(i, j, k) = val;
      }
  return out;
}

// Given a (1,2) bilinear operation P(e_p, e_q) = P(p, q, k) e_k on frame fields
// with constant phi components, returns phi-torsion
// P(phi x, phi y) + phi^2 P(x, y) - phi P(phi x, y) - phi P(x, phi y).
Tensor3 phi_torsion(const Tensor3& p, const Tensor2& phi) {
  auto apply_phi = [&](const Vec3& v) { return apply(phi, v); };
  Tensor3 out;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      Vec3 pp, pab, p_phi_a, p_phi_b;
      for (int k = 0; k < kDim; ++k) {
        pab(k) = p(a, b, k);
        for (int m = 0; m < kDim; ++m) {
          p_phi_a(k) += phi(m, a) * p(m, b, k);
          p_phi_b(k) += phi(m, b) * p(a, m, k);
          for (int n = 0; n < kDim; ++n) pp(k) += phi(m, a) * phi(n, b) * p(m, n, k);
        }
      }
      const Vec3 total =
          pp + apply_phi(apply_phi(pab)) - apply_phi(p_phi_a) - apply_phi(p_phi_b);
      for (int k = 0; k < kDim; ++k) out(a, b, k) = total(k);
    }
  return out;
}

Tensor3 lower_with_xi(const Tensor3& vec_valued, const Tensor2& scalar_part, const AprStructure& s) {
  // g(V(x,y) - S(x,y) xi, z)
  Tensor3 out;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      Vec3 v;
      for (int k = 0; k < kDim; ++k) v(k) = vec_valued(a, b, k) - scalar_part(a, b) * s.xi(k);
      for (int c = 0; c < kDim; ++c) out(a, b, c) = eval(s.metric, v, basis_vector(c));
    }
  return out;
}

}  // namespace

Tensor3 nijenhuis_from_F(const Tensor3& f, const AprStructure& s) { return from_F(f, s, -1.0); }

Tensor3 assoc_nijenhuis_from_F(const Tensor3& f, const AprStructure& s) {
  return from_F(f, s, 1.0);
}

NijenhuisPair nijenhuis_direct(const ConnectionCoeffs& conn, const StructureField& sf,
                               const AprStructure& s) {
  Tensor3 sym_nabla;  // {e_p, e_q} = ∇_p e_q + ∇_q e_p
  for (int p = 0; p < kDim; ++p)
    for (int q = 0; q < kDim; ++q)
      for (int k = 0; k < kDim; ++k) sym_nabla(p, q, k) = conn.gamma(p, q, k) + conn.gamma(q, p, k);

  NijenhuisPair out;
  out.n = lower_with_xi(phi_torsion(sf.c, s.phi), d_eta(conn), s);
  out.n_hat = lower_with_xi(phi_torsion(sym_nabla, s.phi), lie_xi_g(conn), s);
  return out;
}

}  // namespace paraframe
