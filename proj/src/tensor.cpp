#include "paraframe/tensor.hpp"

#include <stdexcept>

namespace paraframe {

Tensor2 identity2() {
  Tensor2 t;
  for (int i = 0; i < kDim; ++i) t(i, i) = 1.0;
  return t;
}

double dot(const Vec3& x, const Vec3& y) {
  double s = 0.0;
  for (int i = 0; i < kDim; ++i) s += x(i) * y(i);
  return s;
}

Vec3 apply(const Tensor2& m, const Vec3& x) {
  Vec3 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) out(i) += m(i, j) * x(j);
  return out;
}

Tensor2 matmul(const Tensor2& a, const Tensor2& b) {
  Tensor2 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

Tensor2 transpose(const Tensor2& a) {
  Tensor2 out;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) out(i, j) = a(j, i);
  return out;
}

double eval(const Tensor2& h, const Vec3& x, const Vec3& y) {
  double s = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) s += h(i, j) * x(i) * y(j);
  return s;
}

double eval(const Tensor3& t, const Vec3& x, const Vec3& y, const Vec3& z) {
  double s = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) s += t(i, j, k) * x(i) * y(j) * z(k);
  return s;
}

double eval(const Tensor4& t, const Vec3& x, const Vec3& y, const Vec3& z, const Vec3& w) {
  double s = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) s += t(i, j, k, l) * x(i) * y(j) * z(k) * w(l);
  return s;
}

double trace2(const Tensor2& t) { return t(0, 0) + t(1, 1) + t(2, 2); }

double symmetry_residual(const Tensor2& t) { return (t - transpose(t)).max_abs(); }

Tensor4 kulkarni_nomizu(const Tensor2& g, const Tensor2& h, double tol) {
  if (symmetry_residual(g) > tol || symmetry_residual(h) > tol)
    throw std::invalid_argument("kulkarni_nomizu: both arguments must be symmetric");
  Tensor4 out;
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y)
      for (int z = 0; z < kDim; ++z)
        for (int w = 0; w < kDim; ++w)
          out(x, y, z, w) = g(x, z) * h(y, w) - g(y, z) * h(x, w) + g(y, w) * h(x, z) -
                            g(x, w) * h(y, z);
  return out;
}

CurvatureSymmetryReport curvature_symmetries(const Tensor4& t) {
  CurvatureSymmetryReport rep;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k)
        for (int l = 0; l < kDim; ++l) {
          const double v = t(i, j, k, l);
          rep.antisym_first_pair = std::max(rep.antisym_first_pair, std::abs(v + t(j, i, k, l)));
          rep.antisym_second_pair = std::max(rep.antisym_second_pair, std::abs(v + t(i, j, l, k)));
          rep.pair_symmetry = std::max(rep.pair_symmetry, std::abs(v - t(k, l, i, j)));
          rep.first_bianchi =
              std::max(rep.first_bianchi, std::abs(v + t(j, k, i, l) + t(k, i, j, l)));
        }
  return rep;
}

Tensor2 contract_metric(const Tensor4& t, Contraction mode, const Tensor2& phi, double tol) {
  const auto sym = curvature_symmetries(t);
  if (std::max(sym.antisym_first_pair, sym.antisym_second_pair) > tol * std::max(1.0, t.max_abs()))
    throw std::invalid_argument("contract_metric: tensor lacks curvature antisymmetries");

  Tensor2 out;
  for (int j = 0; j < kDim; ++j)
    for (int k = 0; k < kDim; ++k) {
      double s = 0.0;
      for (int i = 0; i < kDim; ++i) {
        if (mode == Contraction::Ricci) {
          s += t(i, j, k, i);
        } else {
          for (int m = 0; m < kDim; ++m) s += t(i, j, k, m) * phi(m, i);
        }
      }
      out(j, k) = s;
    }
  return out;
}

}  // namespace paraframe
