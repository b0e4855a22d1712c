#pragma once

#include <array>
#include <cmath>
#include <cstddef>

/// Truncated multivariate Taylor polynomials in three variables.
///
/// A Jet<N> stores the Taylor coefficients c_a of f(u0 + h) = sum_a c_a h^a for
/// all multi-indices |a| <= N, so every partial derivative up to order N is
/// exact to rounding: d^a f = a! c_a. Arithmetic truncates at degree N.
namespace paraframe {

namespace detail {

constexpr int monomial_count(int order) { return (order + 1) * (order + 2) * (order + 3) / 6; }

template <int N>
struct MonomialTable {
  static constexpr int kSize = monomial_count(N);
  std::array<std::array<int, 3>, kSize> exps{};
  std::array<int, (N + 1) * (N + 1) * (N + 1)> index{};

  constexpr int lookup(int a, int b, int c) const {
    if (a < 0 || b < 0 || c < 0 || a + b + c > N) return -1;
    return index[(a * (N + 1) + b) * (N + 1) + c];
  }
};

template <int N>
constexpr MonomialTable<N> make_monomial_table() {
  MonomialTable<N> t;
  for (auto& v : t.index) v = -1;
  int n = 0;
  for (int deg = 0; deg <= N; ++deg)
    for (int a = deg; a >= 0; --a)
      for (int b = deg - a; b >= 0; --b) {
        const int c = deg - a - b;
        t.exps[n] = {a, b, c};
        t.index[(a * (N + 1) + b) * (N + 1) + c] = n;
        ++n;
      }
  return t;
}

template <int N>
inline constexpr MonomialTable<N> kMonomials = make_monomial_table<N>();

constexpr double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

}  // namespace detail

template <int N>
class Jet {
  static_assert(N >= 0);

 public:
  static constexpr int kOrder = N;
  static constexpr int kSize = detail::monomial_count(N);

  constexpr Jet() = default;
  constexpr Jet(double value) { c_[0] = value; }  // NOLINT: implicit constants

  /// The coordinate function u_var expanded about `value`.
  static Jet variable(int var, double value) {
    Jet j(value);
    if constexpr (N >= 1) {
      std::array<int, 3> e{0, 0, 0};
      e[var] = 1;
      j.c_[table().lookup(e[0], e[1], e[2])] = 1.0;
    }
    return j;
  }

  double value() const { return c_[0]; }

  /// Taylor coefficient of h^a; zero when |a| > N.
  double coeff(int a, int b, int c) const {
    const int n = table().lookup(a, b, c);
    return n < 0 ? 0.0 : c_[n];
  }
  void set_coeff(int a, int b, int c, double v) { c_[table().lookup(a, b, c)] = v; }

  /// Partial derivative d^a f at the expansion point.
  double partial(int a, int b, int c) const {
    return detail::factorial(a) * detail::factorial(b) * detail::factorial(c) * coeff(a, b, c);
  }

  /// d/du_var as a jet of one order less.
  Jet<N - 1> derivative(int var) const
    requires(N >= 1)
  {
    Jet<N - 1> out;
    for (int n = 0; n < Jet<N - 1>::kSize; ++n) {
      auto e = detail::kMonomials<N - 1>.exps[n];
      const int power = e[var] + 1;
      e[var] = power;
      out.raw()[n] = power * coeff(e[0], e[1], e[2]);
    }
    return out;
  }

  template <int M>
  Jet<M> truncate() const
    requires(M <= N)
  {
    Jet<M> out;
    for (int n = 0; n < Jet<M>::kSize; ++n) out.raw()[n] = c_[n];
    return out;
  }

  std::array<double, kSize>& raw() { return c_; }
  const std::array<double, kSize>& raw() const { return c_; }

  Jet& operator+=(const Jet& o) {
    for (int n = 0; n < kSize; ++n) c_[n] += o.c_[n];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int n = 0; n < kSize; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  Jet& operator*=(double s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet out;
    const auto& t = table();
    for (int p = 0; p < kSize; ++p) {
      if (a.c_[p] == 0.0) continue;
      const auto& ea = t.exps[p];
      for (int q = 0; q < kSize; ++q) {
        const auto& eb = t.exps[q];
        const int n = t.lookup(ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]);
        if (n >= 0) out.c_[n] += a.c_[p] * b.c_[q];
      }
    }
    return out;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
  friend Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
  friend Jet operator/(double s, const Jet& b) { return s * reciprocal(b); }

  /// f(x) for a univariate f whose Taylor coefficients f^(n)(x0)/n! at
  /// x0 = x.value() are given in `taylor`.
  friend Jet compose(const Jet& x, const std::array<double, N + 1>& taylor) {
    Jet h = x;
    h.c_[0] = 0.0;
    Jet out(taylor[N]);
    for (int n = N - 1; n >= 0; --n) {
      out = out * h;
      out.c_[0] += taylor[n];
    }
    return out;
  }

  friend Jet reciprocal(const Jet& x) {
    std::array<double, N + 1> t{};
    const double x0 = x.value();
    double p = 1.0 / x0;
    for (int n = 0; n <= N; ++n) {
      t[n] = p;
      p *= -1.0 / x0;
    }
    return compose(x, t);
  }

  friend Jet sqrt(const Jet& x) {
    std::array<double, N + 1> t{};
    const double x0 = x.value();
    double binom = 1.0;  // binomial(1/2, n)
    for (int n = 0; n <= N; ++n) {
      t[n] = binom * std::pow(x0, 0.5 - n);
      binom *= (0.5 - n) / (n + 1);
    }
    return compose(x, t);
  }

  friend Jet sin(const Jet& x) { return compose(x, cyclic(std::sin(x.value()), std::cos(x.value()), -1.0)); }
  friend Jet cos(const Jet& x) { return compose(x, cyclic(std::cos(x.value()), -std::sin(x.value()), -1.0)); }
  friend Jet sinh(const Jet& x) { return compose(x, cyclic(std::sinh(x.value()), std::cosh(x.value()), 1.0)); }
  friend Jet cosh(const Jet& x) { return compose(x, cyclic(std::cosh(x.value()), std::sinh(x.value()), 1.0)); }

  friend Jet exp(const Jet& x) {
    std::array<double, N + 1> t{};
    const double e = std::exp(x.value());
    for (int n = 0; n <= N; ++n) t[n] = e / detail::factorial(n);
    return compose(x, t);
  }

  friend Jet log(const Jet& x) {
    std::array<double, N + 1> t{};
    const double x0 = x.value();
    t[0] = std::log(x0);
    for (int n = 1; n <= N; ++n) t[n] = ((n % 2 == 1) ? 1.0 : -1.0) / (n * std::pow(x0, n));
    return compose(x, t);
  }

 private:
  static constexpr const detail::MonomialTable<N>& table() { return detail::kMonomials<N>; }

  // Taylor coefficients of f with f'' = sign * f, from f(x0) and f'(x0).
  static std::array<double, N + 1> cyclic(double f0, double f1, double sign) {
    std::array<double, N + 1> t{};
    double d[2] = {f0, f1};
    for (int n = 0; n <= N; ++n) {
      const double deriv = d[n % 2] * ((n / 2) % 2 == 1 && sign < 0 ? -1.0 : 1.0);
      t[n] = deriv / detail::factorial(n);
    }
    return t;
  }

  std::array<double, kSize> c_{};
};

}  // namespace paraframe
