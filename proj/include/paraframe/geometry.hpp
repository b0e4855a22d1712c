#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "paraframe/classifier.hpp"
#include "paraframe/frame_calculus.hpp"
#include "paraframe/hypersurface.hpp"
#include "paraframe/nijenhuis.hpp"
#include "paraframe/structure.hpp"

/// Whole-pipeline evaluation at a point, seeded sampling of the built-in
/// charts, and the identity suite behind `paraframe verify`.
namespace paraframe {

struct PointGeometry {
  ModelPoint point;
  AprStructure structure;
  AxiomReport axioms;
  Jet3 jet;
  Tensor2 coordinate_metric;
  FrameCoeffs frame;
  StructureField field;
  ConnectionCoeffs conn;
  Tensor3 f;
  LeeForms lee;
  FDecomposition decomposition;
  ClassLabel label;
  Tensor3 n;
  Tensor3 n_hat;
  Tensor4 r;
  Tensor2 ricci;
  Tensor2 ricci_star;
  double tau = 0.0;
  double tau_star = 0.0;
  std::array<double, 3> sectional{};  // k01, k02, k12
  double kappa = 0.0;                 // +1/r^2 for S1, -1/r^2 for S2
  double space_form_residual = 0.0;
  Tensor2 nabla_eta;
  Tensor2 d_eta;
  Tensor2 lie_xi_g;
};

/// Runs immersion -> frame -> brackets -> connection -> F, N, R at a point of a
/// built-in model. Throws DomainError off-chart and ClassificationError if F
/// leaves the admissible span.
PointGeometry analyze(const ModelPoint& p, double tol = kDefaultTolerance);

/// Uniform doubles in [0, 1) built from the raw mt19937_64 stream, whose
/// output is fixed by the standard (unlike the std distributions).
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Distance kept from every excluded locus when sampling.
inline constexpr double kSampleMargin = 0.1;

/// `count` points of the model at radius r. S1 draws u1 from the four open
/// quadrants shrunk by kSampleMargin; S2 draws |u1| in [0.1, 2] on both
/// branches and u3 in [-2, 2].
std::vector<ModelPoint> sample_points(ModelId model, double r, int count, std::uint64_t seed);

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  bool pass = true;
};

struct VerifyReport {
  ModelId model = ModelId::S1;
  double r = 1.0;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Name of the first failing check, or empty.
  std::string first_failure() const;
};

/// Evaluates every structural invariant and every closed-form identity of the
/// model at `samples` seeded points. Curvature scalars are compared relative to
/// their magnitude; everything else is an absolute max-norm.
VerifyReport run_verification(ModelId model, double r, int samples, std::uint64_t seed,
                              double tol = kDefaultTolerance);

}  // namespace paraframe
