#include "paraframe/hypersurface.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace paraframe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename J>
using Mat3 = std::array<std::array<J, 3>, 3>;

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Multi-index (a,b,c) to an ordered list of parameter directions.
std::vector<int> directions(int a, int b, int c) {
  std::vector<int> d;
  d.insert(d.end(), a, 0);
  d.insert(d.end(), b, 1);
  d.insert(d.end(), c, 2);
  return d;
}

double jet3_entry(const Jet3& j, const std::vector<int>& dirs, int comp) {
  switch (dirs.size()) {
    case 0: return j.value[comp];
    case 1: return j.d1[dirs[0]][comp];
    case 2: return j.d2[dirs[0]][dirs[1]][comp];
    default: return j.d3[dirs[0]][dirs[1]][dirs[2]][comp];
  }
}

std::array<Jet<3>, 4> to_jets(const Jet3& j) {
  std::array<Jet<3>, 4> z;
  for (int comp = 0; comp < 4; ++comp)
    for (int n = 0; n < Jet<3>::kSize; ++n) {
      const auto e = detail::kMonomials<3>.exps[n];
      const double fact =
          detail::factorial(e[0]) * detail::factorial(e[1]) * detail::factorial(e[2]);
      z[comp].raw()[n] = jet3_entry(j, directions(e[0], e[1], e[2]), comp) / fact;
    }
  return z;
}

Mat3<Jet<2>> metric_jets(const Jet3& j, AmbientSignature sig) {
  const auto z = to_jets(j);
  std::array<std::array<Jet<2>, 4>, 3> dz;
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 4; ++a) dz[i][a] = z[a].derivative(i);
  const double eps4 = static_cast<double>(static_cast<int>(sig));
  Mat3<Jet<2>> g;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) {
      Jet<2> s = dz[p][0] * dz[q][0] + dz[p][1] * dz[q][1] + dz[p][2] * dz[q][2];
      s += eps4 * (dz[p][3] * dz[q][3]);
      g[p][q] = s;
    }
  return g;
}

template <typename J>
void require_positive_definite(const Mat3<J>& g) {
  auto v = [&](int i, int k) { return g[i][k].value(); };
  const double m1 = v(0, 0);
  const double m2 = v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0);
  const double m3 = v(0, 0) * (v(1, 1) * v(2, 2) - v(1, 2) * v(2, 1)) -
                    v(0, 1) * (v(1, 0) * v(2, 2) - v(1, 2) * v(2, 0)) +
                    v(0, 2) * (v(1, 0) * v(2, 1) - v(1, 1) * v(2, 0));
  if (!(m1 > 0.0 && m2 > 0.0 && m3 > 0.0))
    throw GeometryError("induced metric not Riemannian");
}

// Coefficients smaller than this fraction of the largest one count as zero when
// picking the leading coefficient, so roundoff cannot choose the sign.
constexpr double kLeadingCutoff = 1e-8;

// Rows of the result are e_n in coordinate coefficients.
template <typename J>
Mat3<J> gram_schmidt(const Mat3<J>& g, const std::array<int, 3>& order, SignConvention convention,
                     const std::array<double, 3>& signs) {
  require_positive_definite(g);
  auto inner = [&](const std::array<J, 3>& x, const std::array<J, 3>& y) {
    J s(0.0);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) s += x[p] * (g[p][q] * y[q]);
    return s;
  };

  Mat3<J> e;
  for (int n = 0; n < 3; ++n) {
    std::array<J, 3> w{J(0.0), J(0.0), J(0.0)};
    w[order[n]] = J(1.0);
    for (int m = 0; m < n; ++m) {
      const J proj = inner(w, e[m]);
      for (int p = 0; p < 3; ++p) w[p] -= proj * e[m][p];
    }
    const J norm2 = inner(w, w);
    if (!(norm2.value() > 1e-14 * g[order[n]][order[n]].value()))
      throw GeometryError("degenerate coordinate vectors: d_" + std::to_string(order[n]) +
                          " lies in the span of the previous ones");
    const J inv_norm = reciprocal(sqrt(norm2));
    double flip = 1.0;
    if (convention == SignConvention::ChartAligned) {
      flip = signs[n];
    } else {
      double scale = 0.0;
      for (int p = 0; p < 3; ++p) scale = std::max(scale, std::abs(w[p].value()));
      for (int p = 0; p < 3; ++p)
        if (std::abs(w[p].value()) > kLeadingCutoff * scale) {
          flip = sign_of(w[p].value());
          break;
        }
    }
    for (int p = 0; p < 3; ++p) e[n][p] = flip * (w[p] * inv_norm);
  }
  return e;
}

template <typename J>
Mat3<J> inverse3(const Mat3<J>& a) {
  Mat3<J> cof;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      cof[i][j] = a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1];
    }
  const J det = a[0][0] * cof[0][0] + a[0][1] * cof[0][1] + a[0][2] * cof[0][2];
  const J inv_det = reciprocal(det);
  Mat3<J> out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = cof[j][i] * inv_det;
  return out;
}

std::array<double, 3> signs_for(const Immersion& imm, const Params& u) {
  return imm.chart_signs ? imm.chart_signs(u) : std::array<double, 3>{1.0, 1.0, 1.0};
}

void check_finite(const Jet3& j) {
  auto bad = [](double v) { return !std::isfinite(v); };
  for (double v : j.value)
    if (bad(v)) throw GeometryError("immersion produced a non-finite value");
  for (const auto& d : j.d1)
    for (double v : d)
      if (bad(v)) throw GeometryError("immersion produced a non-finite derivative");
}

// ---- finite-difference oracle -------------------------------------------

template <typename F>
auto richardson(const F& f, const Params& u, int dir, double h) {
  auto central = [&](double step) {
    Params up = u, dn = u;
    up[dir] += step;
    dn[dir] -= step;
    auto fu = f(up);
    const auto fd = f(dn);
    for (std::size_t n = 0; n < fu.size(); ++n) fu[n] = (fu[n] - fd[n]) / (2.0 * step);
    return fu;
  };
  auto coarse = central(h);
  const auto fine = central(0.5 * h);
  for (std::size_t n = 0; n < coarse.size(); ++n) coarse[n] = (4.0 * fine[n] - coarse[n]) / 3.0;
  return coarse;
}

std::array<double, 4> z_value(const Immersion& imm, const Params& u) {
  const auto z = imm.map({Jet<3>(u[0]), Jet<3>(u[1]), Jet<3>(u[2])});
  return {z[0].value(), z[1].value(), z[2].value(), z[3].value()};
}

std::array<double, 9> frame_value(const Immersion& imm, const Params& u, SignConvention conv,
                                  double h) {
  std::array<std::array<double, 4>, 3> dz;
  for (int i = 0; i < 3; ++i) dz[i] = richardson([&](const Params& v) { return z_value(imm, v); }, u, i, h);
  const double eps4 = static_cast<double>(static_cast<int>(imm.signature));
  Mat3<Jet<0>> g;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      g[p][q] = Jet<0>(dz[p][0] * dz[q][0] + dz[p][1] * dz[q][1] + dz[p][2] * dz[q][2] +
                       eps4 * dz[p][3] * dz[q][3]);
  const auto e = gram_schmidt(g, imm.frame_order, conv, signs_for(imm, u));
  std::array<double, 9> a{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) a[3 * i + k] = e[i][k].value();
  return a;
}

std::array<double, 27> bracket_value(const Immersion& imm, const Params& u, SignConvention conv,
                                     double h) {
  const auto a = frame_value(imm, u, conv, h);
  std::array<std::array<double, 9>, 3> da;
  for (int l = 0; l < 3; ++l)
    da[l] = richardson([&](const Params& v) { return frame_value(imm, v, conv, h); }, u, l,
                       10.0 * h);
  Mat3<Jet<0>> am;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) am[i][k] = Jet<0>(a[3 * i + k]);
  const auto b = inverse3(am);
  std::array<double, 27> c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        double bij = 0.0;
        for (int l = 0; l < 3; ++l)
          bij += a[3 * i + l] * da[l][3 * j + m] - a[3 * j + l] * da[l][3 * i + m];
        for (int k = 0; k < 3; ++k) c[9 * i + 3 * j + k] += bij * b[m][k].value();
      }
  return c;
}

}  // namespace

double ambient_inner(AmbientSignature sig, const AmbientVector& x, const AmbientVector& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] +
         static_cast<double>(static_cast<int>(sig)) * x[3] * y[3];
}

double Jet3::d2_symmetry_residual() const {
  double res = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 4; ++a) res = std::max(res, std::abs(d2[i][j][a] - d2[j][i][a]));
  return res;
}

double Jet3::d3_symmetry_residual() const {
  double res = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int a = 0; a < 4; ++a) {
          const double v = d3[i][j][k][a];
          for (double w : {d3[i][k][j][a], d3[j][i][k][a], d3[j][k][i][a], d3[k][i][j][a],
                           d3[k][j][i][a]})
            res = std::max(res, std::abs(v - w));
        }
  return res;
}

std::string model_name(ModelId id) {
  switch (id) {
    case ModelId::S1: return "s1";
    case ModelId::S2: return "s2";
    default: return "custom";
  }
}

Immersion builtin_immersion(ModelId model, double r) {
  Immersion imm;
  if (model == ModelId::S1) {
    imm.name = "s1";
    imm.signature = AmbientSignature::Euclidean;
    imm.map = [r](const std::array<Jet<3>, 3>& u) {
      const Jet<3> c1 = cos(u[1]), s1 = sin(u[1]);
      return std::array<Jet<3>, 4>{r * (c1 * cos(u[2])), r * (c1 * sin(u[2])),
                                   r * (s1 * cos(u[0])), r * (s1 * sin(u[0]))};
    };
    // e0 = eps2 / (r sin u1) d0, e2 = eps1 / (r cos u1) d2 with eps1 = sgn cos u1,
    // eps2 = sgn sin u1; relative to positive normalization the sign is
    // sgn(eps / trig).
    imm.chart_signs = [](const Params& u) {
      const double eps1 = sign_of(std::cos(u[1]));
      const double eps2 = sign_of(std::sin(u[1]));
      return std::array<double, 3>{sign_of(eps2 / std::sin(u[1])), 1.0,
                                   sign_of(eps1 / std::cos(u[1]))};
    };
  } else if (model == ModelId::S2) {
    imm.name = "s2";
    imm.signature = AmbientSignature::Minkowski;
    imm.map = [r](const std::array<Jet<3>, 3>& u) {
      const Jet<3> sh = sinh(u[0]), ch = cosh(u[0]);
      return std::array<Jet<3>, 4>{r * (sh * cos(u[1])), r * (sh * sin(u[1])),
                                   r * (ch * sinh(u[2])), r * (ch * cosh(u[2]))};
    };
    // e1 = 1 / (r sinh u1) d2, negatively oriented for u1 < 0.
    imm.chart_signs = [](const Params& u) {
      return std::array<double, 3>{1.0, sign_of(std::sinh(u[0])), 1.0};
    };
  } else {
    throw std::invalid_argument("builtin_immersion: custom models have no built-in map");
  }
  imm.default_convention = SignConvention::ChartAligned;
  imm.check_domain = [model, r](const Params& u) { validate(ModelPoint{model, r, u}); };
  return imm;
}

void validate(const ModelPoint& p) {
  if (!(std::isfinite(p.r) && p.r > 0.0))
    throw DomainError("radius r must be positive and finite, got " + fmt(p.r));
  for (double v : p.u)
    if (!std::isfinite(v)) throw DomainError("parameters must be finite");

  auto in_period = [](const char* name, double v) {
    if (v < 0.0 || v >= kTwoPi)
      throw DomainError(std::string(name) + " = " + fmt(v) + " outside [0, 2pi)");
  };

  if (p.model == ModelId::S1) {
    in_period("u0", p.u[0]);
    in_period("u1", p.u[1]);
    in_period("u2", p.u[2]);
    for (int k = 0; k <= 4; ++k)
      if (std::abs(p.u[1] - k * std::numbers::pi / 2.0) <= kDomainMargin)
        throw DomainError("u1 = " + fmt(p.u[1]) + " lies on the excluded locus u1 = " +
                          std::to_string(k) + "*pi/2");
  } else if (p.model == ModelId::S2) {
    if (std::abs(p.u[0]) <= kDomainMargin)
      throw DomainError("u1 = " + fmt(p.u[0]) + " lies on the excluded locus u1 = 0");
    in_period("u2", p.u[1]);
  } else {
    throw DomainError("custom models have no built-in domain");
  }
}

double on_sphere_residual(const ModelPoint& p, const Jet3& j) {
  const auto sig =
      p.model == ModelId::S2 ? AmbientSignature::Minkowski : AmbientSignature::Euclidean;
  const double target = p.model == ModelId::S2 ? -p.r * p.r : p.r * p.r;
  return std::abs(ambient_inner(sig, j.value, j.value) - target);
}

Jet3 immerse(const Immersion& imm, const Params& u) {
  if (imm.check_domain) imm.check_domain(u);
  const auto z = imm.map({Jet<3>::variable(0, u[0]), Jet<3>::variable(1, u[1]),
                          Jet<3>::variable(2, u[2])});
  Jet3 j;
  for (int a = 0; a < 4; ++a) {
    j.value[a] = z[a].value();
    for (int i = 0; i < 3; ++i) {
      int e1[3] = {0, 0, 0};
      ++e1[i];
      j.d1[i][a] = z[a].partial(e1[0], e1[1], e1[2]);
      for (int k = 0; k < 3; ++k) {
        int e2[3] = {e1[0], e1[1], e1[2]};
        ++e2[k];
        j.d2[i][k][a] = z[a].partial(e2[0], e2[1], e2[2]);
        for (int l = 0; l < 3; ++l) {
          int e3[3] = {e2[0], e2[1], e2[2]};
          ++e3[l];
          j.d3[i][k][l][a] = z[a].partial(e3[0], e3[1], e3[2]);
        }
      }
    }
  }
  check_finite(j);
  return j;
}

Jet3 immerse(const ModelPoint& p) {
  validate(p);
  return immerse(builtin_immersion(p.model, p.r), p.u);
}

Tensor2 induced_metric(const Jet3& j, AmbientSignature sig) {
  Tensor2 g;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) g(p, q) = ambient_inner(sig, j.d1[p], j.d1[q]);
  Mat3<Jet<0>> gj;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q) gj[p][q] = Jet<0>(g(p, q));
  require_positive_definite(gj);
  return g;
}

double FrameCoeffs::gram_residual(const Tensor2& g) const {
  return (matmul(matmul(a, g), transpose(a)) - identity2()).max_abs();
}

FrameCoeffs orthonormal_frame(const Jet3& j, AmbientSignature sig, SignConvention convention,
                              const std::array<int, 3>& frame_order,
                              const std::array<double, 3>& signs) {
  const auto e = gram_schmidt(metric_jets(j, sig), frame_order, convention, signs);
  FrameCoeffs f;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      f.a(i, k) = e[i][k].value();
      for (int l = 0; l < 3; ++l) {
        int el[3] = {0, 0, 0};
        ++el[l];
        f.da(l, i, k) = e[i][k].partial(el[0], el[1], el[2]);
        for (int m = 0; m < 3; ++m) {
          int elm[3] = {el[0], el[1], el[2]};
          ++elm[m];
          f.d2a(l, m, i, k) = e[i][k].partial(elm[0], elm[1], elm[2]);
        }
      }
    }
  return f;
}

FrameCoeffs orthonormal_frame(const Immersion& imm, const Params& u, SignConvention convention) {
  return orthonormal_frame(immerse(imm, u), imm.signature, convention, imm.frame_order,
                           signs_for(imm, u));
}

FrameCoeffs orthonormal_frame(const ModelPoint& p) {
  validate(p);
  const auto imm = builtin_immersion(p.model, p.r);
  return orthonormal_frame(imm, p.u, imm.default_convention);
}

StructureField structure_field(const FrameCoeffs& frame) {
  Mat3<Jet<2>> a;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      Jet<2>& j = a[i][k];
      j.set_coeff(0, 0, 0, frame.a(i, k));
      for (int l = 0; l < 3; ++l) {
        int el[3] = {0, 0, 0};
        ++el[l];
        j.set_coeff(el[0], el[1], el[2], frame.da(l, i, k));
        for (int m = l; m < 3; ++m) {
          int elm[3] = {el[0], el[1], el[2]};
          ++elm[m];
          j.set_coeff(elm[0], elm[1], elm[2], frame.d2a(l, m, i, k) / (l == m ? 2.0 : 1.0));
        }
      }
    }

  Mat3<Jet<1>> a1;
  std::array<Mat3<Jet<1>>, 3> da;  // da[l][i][k] = d_l a(i, k)
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      a1[i][k] = a[i][k].truncate<1>();
      for (int l = 0; l < 3; ++l) da[l][i][k] = a[i][k].derivative(l);
    }
  const auto b = inverse3(a1);  // d_m = b[m][k] e_k

  StructureField sf;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Jet<1> c(0.0);
        for (int m = 0; m < 3; ++m) {
          Jet<1> bracket_m(0.0);
          for (int l = 0; l < 3; ++l)
            bracket_m += a1[i][l] * da[l][j][m] - a1[j][l] * da[l][i][m];
          c += bracket_m * b[m][k];
        }
        sf.c(i, j, k) = c.value();
        for (int l = 0; l < 3; ++l) {
          double e_l = 0.0;
          for (int p = 0; p < 3; ++p) {
            int ep[3] = {0, 0, 0};
            ++ep[p];
            e_l += frame.a(l, p) * c.partial(ep[0], ep[1], ep[2]);
          }
          sf.dc(l, i, j, k) = e_l;
        }
      }
  return sf;
}

StructureField structure_field(const Immersion& imm, const Params& u, SignConvention convention) {
  return structure_field(orthonormal_frame(imm, u, convention));
}

StructureField structure_field(const ModelPoint& p) { return structure_field(orthonormal_frame(p)); }

StructureField closed_form_field(const ModelPoint& p) {
  if (p.model == ModelId::Custom)
    throw std::invalid_argument("closed_form_field: unsupported for custom models");
  validate(p);
  const double r = p.r;
  StructureField sf;
  auto set = [&sf](int i, int j, int k, double v) {
    sf.c(i, j, k) = v;
    sf.c(j, i, k) = -v;
  };
  auto set_d = [&sf](int l, int i, int j, int k, double v) {
    sf.dc(l, i, j, k) = v;
    sf.dc(l, j, i, k) = -v;
  };
  if (p.model == ModelId::S1) {
    const double u1 = p.u[1];
    const double s = std::sin(u1), c = std::cos(u1);
    set(0, 1, 0, c / s / r);
    set(1, 2, 2, s / c / r);
    // Only e1 = d_{u1} / r differentiates functions of u1.
    set_d(1, 0, 1, 0, -1.0 / (s * s) / (r * r));
    set_d(1, 1, 2, 2, 1.0 / (c * c) / (r * r));
  } else {
    const double u1 = p.u[0];
    const double sh = std::sinh(u1), ch = std::cosh(u1);
    set(0, 1, 1, -ch / sh / r);
    set(0, 2, 2, -sh / ch / r);
    // Only e0 = d_{u1} / r differentiates functions of u1.
    set_d(0, 0, 1, 1, 1.0 / (sh * sh) / (r * r));
    set_d(0, 0, 2, 2, -1.0 / (ch * ch) / (r * r));
  }
  return sf;
}

StructureField finite_difference_field(const Immersion& imm, const Params& u,
                                       SignConvention convention, double base_step) {
  if (imm.check_domain) imm.check_domain(u);
  const auto a = frame_value(imm, u, convention, base_step);
  const auto c = bracket_value(imm, u, convention, base_step);
  std::array<std::array<double, 27>, 3> dc_coord;
  for (int p = 0; p < 3; ++p)
    dc_coord[p] = richardson(
        [&](const Params& v) { return bracket_value(imm, v, convention, base_step); }, u, p,
        100.0 * base_step);

  StructureField sf;
  for (int n = 0; n < 27; ++n) {
    sf.c[n] = c[n];
    for (int l = 0; l < 3; ++l) {
      double v = 0.0;
      for (int p = 0; p < 3; ++p) v += a[3 * l + p] * dc_coord[p][n];
      sf.dc[27 * l + n] = v;
    }
  }
  return sf;
}

}  // namespace paraframe
