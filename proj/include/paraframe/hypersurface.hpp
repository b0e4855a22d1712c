#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include "paraframe/frame_calculus.hpp"
#include "paraframe/jet.hpp"
#include "paraframe/tensor.hpp"

/// Hypersurfaces of (pseudo-)Euclidean 4-space, their induced metrics and
/// orthonormal frames, and the structure constants those frames produce.
namespace paraframe {

using Params = std::array<double, 3>;
using AmbientVector = std::array<double, 4>;

/// Sign of the fourth term of the ambient inner product.
enum class AmbientSignature : int { Euclidean = 1, Minkowski = -1 };

double ambient_inner(AmbientSignature sig, const AmbientVector& x, const AmbientVector& y);

/// Parameter point outside the model's chart.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Non-Riemannian induced metric or degenerate coordinate vectors.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// z and its parameter derivatives up to third order at a point.
/// d1[i][a] = d_i z^a, d2[i][j][a] = d_i d_j z^a, d3[i][j][k][a] likewise.
struct Jet3 {
  AmbientVector value{};
  std::array<AmbientVector, 3> d1{};
  std::array<std::array<AmbientVector, 3>, 3> d2{};
  std::array<std::array<std::array<AmbientVector, 3>, 3>, 3> d3{};

  double d2_symmetry_residual() const;
  double d3_symmetry_residual() const;
};

using ImmersionMap = std::function<std::array<Jet<3>, 4>(const std::array<Jet<3>, 3>&)>;

enum class SignConvention {
  /// Model-supplied signs, reproducing the frame formulas the built-in models
  /// were written with.
  ChartAligned,
  /// First nonzero coordinate coefficient of each e_i is positive.
  LeadingPositive,
};

/// A parametrized hypersurface. `map` is evaluated on jets, so any closed form
/// written with +, -, *, /, sqrt, sin, cos, sinh, cosh, exp, log works.
struct Immersion {
  std::string name;
  AmbientSignature signature = AmbientSignature::Euclidean;
  ImmersionMap map;
  /// frame_order[n] is the coordinate direction orthonormalized into e_n.
  std::array<int, 3> frame_order{0, 1, 2};
  /// Sign multipliers for SignConvention::ChartAligned, relative to the positively
  /// normalized Gram-Schmidt frame. Empty means all +1.
  std::function<std::array<double, 3>(const Params&)> chart_signs;
  /// Throws DomainError for points outside the chart. Empty means unrestricted.
  std::function<void(const Params&)> check_domain;
  SignConvention default_convention = SignConvention::LeadingPositive;
};

enum class ModelId { S1, S2, Custom };

std::string model_name(ModelId id);

/// A point of a built-in model: S1 uses (u0, u1, u2), S2 uses (u1, u2, u3)
/// stored in that order.
struct ModelPoint {
  ModelId model = ModelId::S1;
  double r = 1.0;
  Params u{};
};

/// Excluded loci are widened by this margin.
inline constexpr double kDomainMargin = 1e-6;

/// S1: <z,z> = r^2 in Euclidean 4-space.
/// S2: <z,z> = -r^2 in Minkowski 4-space (time-like hypersphere).
Immersion builtin_immersion(ModelId model, double r);

/// Throws DomainError naming the violated bound.
void validate(const ModelPoint& p);

/// <z,z> = +r^2 for S1 and -r^2 for S2.
double on_sphere_residual(const ModelPoint& p, const Jet3& j);

Jet3 immerse(const Immersion& imm, const Params& u);
Jet3 immerse(const ModelPoint& p);

/// G_ij = <d_i z, d_j z>. Throws GeometryError unless positive definite.
Tensor2 induced_metric(const Jet3& j, AmbientSignature sig);

/// e_i = a(i, k) d_k; da(l, i, k) = d_l a(i, k); d2a(l, m, i, k) = d_l d_m a(i, k).
struct FrameCoeffs {
  Tensor2 a;
  Tensor3 da;
  Tensor4 d2a;

  /// max |A G A^T - I|.
  double gram_residual(const Tensor2& g) const;
};

/// Gram-Schmidt on the coordinate vectors in frame_order, differentiated
/// through the jet. `signs` applies only to SignConvention::ChartAligned.
FrameCoeffs orthonormal_frame(const Jet3& j, AmbientSignature sig, SignConvention convention,
                              const std::array<int, 3>& frame_order = {0, 1, 2},
                              const std::array<double, 3>& signs = {1.0, 1.0, 1.0});
FrameCoeffs orthonormal_frame(const Immersion& imm, const Params& u, SignConvention convention);
FrameCoeffs orthonormal_frame(const ModelPoint& p);

/// [e_i, e_j] from the frame coefficients, expressed back in the frame.
StructureField structure_field(const FrameCoeffs& frame);
StructureField structure_field(const Immersion& imm, const Params& u, SignConvention convention);
StructureField structure_field(const ModelPoint& p);

/// Hand-differentiated brackets of the built-in frames:
///   S1: [e0,e1] = cot(u1)/r e0, [e0,e2] = 0, [e1,e2] = tan(u1)/r e2
///   S2: [e0,e1] = -coth(u1)/r e1, [e0,e2] = -tanh(u1)/r e2, [e1,e2] = 0
/// Throws std::invalid_argument for custom models.
StructureField closed_form_field(const ModelPoint& p);

/// Nested Richardson-extrapolated central differences: d z with step
/// `base_step`, d A with 10x that, d C with 100x that. Debug oracle only; its
/// dc entries are good to roughly 1e-6.
StructureField finite_difference_field(const Immersion& imm, const Params& u,
                                       SignConvention convention, double base_step = 1e-4);

}  // namespace paraframe
