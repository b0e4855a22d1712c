#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

/// Dense tensors over a three-dimensional orthonormal frame {e0, e1, e2}.
///
/// Components follow T(i, j, k, l) = T(e_i, e_j, e_k, e_l). Every container is a
/// plain value type; nothing is shared or mutated after construction by the
/// library functions that return them.
namespace paraframe {

inline constexpr int kDim = 3;
inline constexpr double kDefaultTolerance = 1e-9;

namespace detail {
constexpr std::size_t ipow3(std::size_t rank) { return rank == 0 ? 1 : 3 * ipow3(rank - 1); }
}  // namespace detail

template <std::size_t Rank>
class Tensor {
 public:
  static constexpr std::size_t kRank = Rank;
  static constexpr std::size_t kSize = detail::ipow3(Rank);

  constexpr Tensor() = default;
  constexpr explicit Tensor(const std::array<double, kSize>& values) : c_(values) {}

  template <typename... I>
    requires(sizeof...(I) == Rank)
  constexpr double& operator()(I... idx) {
    return c_[flat(idx...)];
  }
  template <typename... I>
    requires(sizeof...(I) == Rank)
  constexpr double operator()(I... idx) const {
    return c_[flat(idx...)];
  }

  constexpr double& operator[](std::size_t n) { return c_[n]; }
  constexpr double operator[](std::size_t n) const { return c_[n]; }

  const std::array<double, kSize>& data() const { return c_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
  }

  Tensor& operator+=(const Tensor& o) {
    for (std::size_t n = 0; n < kSize; ++n) c_[n] += o.c_[n];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (std::size_t n = 0; n < kSize; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  Tensor& operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, double s) { return a *= s; }
  friend Tensor operator*(double s, Tensor a) { return a *= s; }
  friend Tensor operator-(Tensor a) { return a *= -1.0; }

  /// Converts a flat storage offset back to its index tuple.
  static std::array<int, Rank> unflatten(std::size_t n) {
    std::array<int, Rank> idx{};
    for (std::size_t r = Rank; r-- > 0;) {
      idx[r] = static_cast<int>(n % kDim);
      n /= kDim;
    }
    return idx;
  }

 private:
  template <typename... I>
  static constexpr std::size_t flat(I... idx) {
    std::size_t n = 0;
    ((n = n * kDim + static_cast<std::size_t>(idx)), ...);
    return n;
  }

  std::array<double, kSize> c_{};
};

using Vec3 = Tensor<1>;
using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;
using Tensor4 = Tensor<4>;

inline Vec3 basis_vector(int i) {
  Vec3 v;
  v(i) = 1.0;
  return v;
}

Tensor2 identity2();

/// Max-norm of the difference.
template <std::size_t Rank>
double max_diff(const Tensor<Rank>& a, const Tensor<Rank>& b) {
  return (a - b).max_abs();
}

double dot(const Vec3& x, const Vec3& y);

/// Matrix-vector product, (M x)_i = M_ij x^j.
Vec3 apply(const Tensor2& m, const Vec3& x);
Tensor2 matmul(const Tensor2& a, const Tensor2& b);
Tensor2 transpose(const Tensor2& a);

/// Bilinear form evaluation h(x, y) = h_ij x^i y^j.
double eval(const Tensor2& h, const Vec3& x, const Vec3& y);
double eval(const Tensor3& t, const Vec3& x, const Vec3& y, const Vec3& z);
double eval(const Tensor4& t, const Vec3& x, const Vec3& y, const Vec3& z, const Vec3& w);

double trace2(const Tensor2& t);

/// Largest |T_ij - T_ji|.
double symmetry_residual(const Tensor2& t);

/// (g ∧ h)(x,y,z,w) = g(x,z)h(y,w) - g(y,z)h(x,w) + g(y,w)h(x,z) - g(x,w)h(y,z).
/// Throws std::invalid_argument when either input is not symmetric.
Tensor4 kulkarni_nomizu(const Tensor2& g, const Tensor2& h, double tol = kDefaultTolerance);

enum class Contraction { Ricci, RicciStar };

/// rho_jk = sum_i T(e_i, e_j, e_k, e_i) in the orthonormal frame. RicciStar
/// replaces the last slot by phi e_i; phi(m, i) is the m-th component of phi e_i.
Tensor2 contract_metric(const Tensor4& t, Contraction mode, const Tensor2& phi = Tensor2{},
                        double tol = kDefaultTolerance);

/// Residuals of the algebraic curvature symmetries, each a max-norm.
struct CurvatureSymmetryReport {
  double antisym_first_pair = 0.0;   // T_ijkl + T_jikl
  double antisym_second_pair = 0.0;  // T_ijkl + T_ijlk
  double pair_symmetry = 0.0;        // T_ijkl - T_klij
  double first_bianchi = 0.0;        // T_ijkl + T_jkil + T_kijl

  double max() const {
    return std::max({antisym_first_pair, antisym_second_pair, pair_symmetry, first_bianchi});
  }
};

CurvatureSymmetryReport curvature_symmetries(const Tensor4& t);

}  // namespace paraframe
