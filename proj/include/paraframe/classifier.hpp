#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "paraframe/frame_calculus.hpp"
#include "paraframe/structure.hpp"

namespace paraframe {

/// F(x, y, z) = g((∇_x phi) y, z) in the adapted frame:
/// F_ijk = phi^m_j gamma_im^k - gamma_ij^m phi^k_m.
Tensor3 fundamental_tensor(const ConnectionCoeffs& conn, const AprStructure& s);

/// Max-norm violations of F(x,y,z) = F(x,z,y) and of
/// F(x,y,z) = -F(x,phi y,phi z) + eta(y) F(x,xi,z) + eta(z) F(x,y,xi).
struct FSymmetryResiduals {
  double yz_symmetry = 0.0;
  double phi_property = 0.0;
};

FSymmetryResiduals f_symmetry_residuals(const Tensor3& f, const AprStructure& s);

/// Lee forms as covector components on the frame. The traces run over the
/// paracontact distribution {e1, e2} with g^ij = delta^ij.
struct LeeForms {
  Vec3 theta;
  Vec3 theta_star;
  Vec3 omega;
};

LeeForms lee_forms(const Tensor3& f);

/// Basic classes admissible in dimension three. F2, F3, F6, F7 vanish
/// identically there and have no representation.
inline constexpr std::array<int, 7> kAdmissibleClasses = {1, 4, 5, 8, 9, 10, 11};

struct ClassParameters {
  double theta0 = 0.0;       // theta(e0)
  double theta_star0 = 0.0;  // theta*(e0)
  double theta1 = 0.0;
  double theta2 = 0.0;
  double lambda = 0.0;  // (F_110 - F_220) / 2
  double mu = 0.0;      // (F_120 - F_210) / 2
  double nu = 0.0;      // (F_011 - F_022) / 2
  double omega1 = 0.0;
  double omega2 = 0.0;
};

struct FDecomposition {
  /// components[n] is F^s for s = kAdmissibleClasses[n].
  std::array<Tensor3, 7> components;
  double residual = 0.0;  // max |F - sum F^s|
  double f_norm = 0.0;    // max |F|
  ClassParameters params;

  const Tensor3& component(int class_id) const;
  Tensor3 sum() const;
};

FDecomposition class_components(const Tensor3& f, const LeeForms& lee);

struct ClassLabel {
  std::vector<int> classes;  // ascending
  bool is_f0 = false;

  /// "F1 ⊕ F11", or "F0" for the trivial class.
  std::string to_string() const;
  bool operator==(const ClassLabel&) const = default;
};

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default zero threshold 1e-8 * max(1, |F|).
double default_class_tolerance(const FDecomposition& d);

/// classes = { s : |F^s| > tol }. Throws ClassificationError when the residual
/// exceeds tol. A negative tol selects default_class_tolerance.
ClassLabel classify(const FDecomposition& d, double tol = -1.0);

/// max_ij |gamma_i0^j + F(e_i, phi e_j, xi)|.
double check_nabla_eta_relation(const ConnectionCoeffs& conn, const Tensor3& f,
                                const AprStructure& s);

}  // namespace paraframe
