#include "paraframe/geometry.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "paraframe/reference.hpp"

namespace paraframe {

PointGeometry analyze(const ModelPoint& p, double tol) {
  validate(p);
  const Immersion imm = builtin_immersion(p.model, p.r);

  PointGeometry pg;
  pg.point = p;
  pg.structure = standard_structure();
  pg.axioms = verify_axioms(pg.structure, tol);
  pg.jet = immerse(imm, p.u);
  pg.coordinate_metric = induced_metric(pg.jet, imm.signature);
  pg.frame = orthonormal_frame(pg.jet, imm.signature, imm.default_convention, imm.frame_order,
                               imm.chart_signs(p.u));
  pg.field = structure_field(pg.frame);
  pg.conn = koszul(pg.field, tol);

  pg.f = fundamental_tensor(pg.conn, pg.structure);
  pg.lee = lee_forms(pg.f);
  pg.decomposition = class_components(pg.f, pg.lee);
  pg.label = classify(pg.decomposition);

  pg.n = nijenhuis_from_F(pg.f, pg.structure);
  pg.n_hat = assoc_nijenhuis_from_F(pg.f, pg.structure);

  pg.r = curvature(pg.conn, pg.field, Checks::On, tol);
  pg.ricci = contract_metric(pg.r, Contraction::Ricci);
  pg.ricci_star = contract_metric(pg.r, Contraction::RicciStar, pg.structure.phi);
  pg.tau = trace2(pg.ricci);
  pg.tau_star = trace2(pg.ricci_star);
  const Tensor2& g = pg.structure.metric;
  pg.sectional = {sectional(pg.r, g, basis_vector(0), basis_vector(1)),
                  sectional(pg.r, g, basis_vector(0), basis_vector(2)),
                  sectional(pg.r, g, basis_vector(1), basis_vector(2))};
  pg.kappa = (p.model == ModelId::S2 ? -1.0 : 1.0) / (p.r * p.r);
  pg.space_form_residual = space_form_residual(pg.r, g, pg.kappa);

  pg.nabla_eta = nabla_xi(pg.conn);
  pg.d_eta = d_eta(pg.conn);
  pg.lie_xi_g = lie_xi_g(pg.conn);
  return pg;
}

std::vector<ModelPoint> sample_points(ModelId model, double r, int count, std::uint64_t seed) {
  constexpr double kPi = std::numbers::pi;
  SampleStream rng(seed);
  std::vector<ModelPoint> points;
  points.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int n = 0; n < count; ++n) {
    ModelPoint p{model, r, {}};
    if (model == ModelId::S1) {
      p.u[0] = rng.uniform(0.0, 2.0 * kPi);
      const double quadrant = std::floor(4.0 * rng.uniform());
      p.u[1] = quadrant * kPi / 2.0 + rng.uniform(kSampleMargin, kPi / 2.0 - kSampleMargin);
      p.u[2] = rng.uniform(0.0, 2.0 * kPi);
    } else if (model == ModelId::S2) {
      const double branch = rng.uniform() < 0.5 ? -1.0 : 1.0;
      p.u[0] = branch * rng.uniform(kSampleMargin, 2.0);
      p.u[1] = rng.uniform(0.0, 2.0 * kPi);
      p.u[2] = rng.uniform(-2.0, 2.0);
    } else {
      throw std::invalid_argument("sample_points: only built-in models can be sampled");
    }
    points.push_back(p);
  }
  return points;
}

bool VerifyReport::passed() const { return first_failure().empty(); }

std::string VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return c.name;
  return {};
}

namespace {

// Accumulates the worst residual of each named check across sample points,
// preserving first-seen order.
class CheckTable {
 public:
  void record(const std::string& name, double residual) {
    for (auto& c : checks_)
      if (c.name == name) {
        c.max_residual = worst(c.max_residual, residual);
        return;
      }
    checks_.push_back({name, residual, true});
  }

  std::vector<CheckResult> finish(double tol) && {
    for (auto& c : checks_) c.pass = c.max_residual <= tol;
    return std::move(checks_);
  }

 private:
  static double worst(double a, double b) {
    if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::infinity();
    return std::max(a, b);
  }
  std::vector<CheckResult> checks_;
};

double scaled(double value, double expected) {
  return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

double bool_residual(bool ok) { return ok ? 0.0 : 1.0; }

double antisym12(const Tensor3& t) {
  double res = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) res = std::max(res, std::abs(t(i, j, k) + t(j, i, k)));
  return res;
}

double sym12(const Tensor3& t) {
  double res = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) res = std::max(res, std::abs(t(i, j, k) - t(j, i, k)));
  return res;
}

void check_point(const PointGeometry& pg, double tol, CheckTable& t) {
  const ModelPoint& p = pg.point;
  const ModelReference ref = reference_values(p);
  const bool s1 = p.model == ModelId::S1;

  t.record("structure_axioms", pg.axioms.max());

  double z_scale = 0.0;
  for (double v : pg.jet.value) z_scale += v * v;
  t.record("on_sphere", on_sphere_residual(p, pg.jet) / std::max(1.0, z_scale));
  t.record("jet_mixed_partials",
           std::max(pg.jet.d2_symmetry_residual(), pg.jet.d3_symmetry_residual()));
  t.record("frame_orthonormality", pg.frame.gram_residual(pg.coordinate_metric));

  t.record("bracket_antisymmetry", bracket_antisymmetry_residual(pg.field));
  t.record("jacobi_identity", jacobi_residual(pg.field));
  const StructureField closed = closed_form_field(p);
  t.record("structure_constants_vs_closed_form", max_diff(pg.field.c, closed.c));
  t.record("structure_derivatives_vs_closed_form", max_diff(pg.field.dc, closed.dc));

  t.record("connection_metric_compatibility", metric_compatibility_residual(pg.conn));
  t.record("connection_torsion_free", torsion_residual(pg.conn, pg.field));
  t.record("connection_vs_closed_form", max_diff(pg.conn.gamma, ref.gamma));

  t.record("fundamental_tensor_vs_closed_form", max_diff(pg.f, ref.f));
  const auto fsym = f_symmetry_residuals(pg.f, pg.structure);
  t.record("F_yz_symmetry", fsym.yz_symmetry);
  t.record("F_phi_property", fsym.phi_property);
  t.record("lee_omega0", std::abs(pg.lee.omega(0)));
  t.record("lee_theta1_theta_star2", std::abs(pg.lee.theta(1) + pg.lee.theta_star(2)));
  t.record("lee_theta2_theta_star1", std::abs(pg.lee.theta(2) + pg.lee.theta_star(1)));
  t.record("nabla_eta_F_relation", check_nabla_eta_relation(pg.conn, pg.f, pg.structure));

  t.record("decomposition_residual", pg.decomposition.residual);
  std::vector<int> expected_classes;
  double component_err = 0.0;
  for (std::size_t n = 0; n < kAdmissibleClasses.size(); ++n) {
    const int id = kAdmissibleClasses[n];
    const auto it = ref.class_components.find(id);
    const Tensor3 expected = it == ref.class_components.end() ? Tensor3{} : it->second;
    if (it != ref.class_components.end()) expected_classes.push_back(id);
    component_err = std::max(component_err, max_diff(pg.decomposition.components[n], expected));
  }
  t.record("class_components_vs_closed_form", component_err);
  t.record("class_label", bool_residual(pg.label.classes == expected_classes));

  t.record("nijenhuis_vs_closed_form", max_diff(pg.n, ref.n));
  t.record("assoc_nijenhuis_vs_closed_form", max_diff(pg.n_hat, ref.n_hat));
  const NijenhuisPair direct = nijenhuis_direct(pg.conn, pg.field, pg.structure);
  t.record("nijenhuis_F_vs_direct", max_diff(pg.n, direct.n));
  t.record("assoc_nijenhuis_F_vs_direct", max_diff(pg.n_hat, direct.n_hat));
  t.record("nijenhuis_antisymmetry", antisym12(pg.n));
  t.record("assoc_nijenhuis_symmetry", sym12(pg.n_hat));

  Vec3 nabla_xi_xi;
  for (int k = 0; k < kDim; ++k) nabla_xi_xi(k) = pg.nabla_eta(0, k);
  t.record("d_eta_vs_closed_form", max_diff(pg.d_eta, ref.d_eta));
  t.record("nabla_xi_xi_vs_closed_form", max_diff(nabla_xi_xi, ref.nabla_xi_xi));
  if (s1) {
    double res = 0.0;  // N + d eta ⊗ xi
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k)
          res = std::max(res, std::abs(pg.n(i, j, k) + pg.d_eta(i, j) * pg.structure.xi(k)));
    t.record("N_equals_minus_d_eta_xi", res);
    t.record("nabla_xi_xi_nonzero", bool_residual(nabla_xi_xi.max_abs() > tol));
  } else {
    t.record("d_eta_zero", pg.d_eta.max_abs());
    t.record("nabla_xi_xi_zero", nabla_xi_xi.max_abs());
  }

  const auto sym = curvature_symmetries(pg.r);
  t.record("curvature_antisymmetry", std::max(sym.antisym_first_pair, sym.antisym_second_pair));
  t.record("curvature_pair_symmetry", sym.pair_symmetry);
  t.record("first_bianchi", sym.first_bianchi);
  t.record("curvature_vs_closed_form", max_diff(pg.r, ref.r));
  t.record("ricci_vs_closed_form", max_diff(pg.ricci, ref.ricci));
  t.record("ricci_symmetry", symmetry_residual(pg.ricci));
  t.record("ricci_star_vs_closed_form", max_diff(pg.ricci_star, ref.ricci_star));
  t.record("scalar_curvature", scaled(pg.tau, ref.tau));
  t.record("star_scalar_curvature", scaled(pg.tau_star, ref.tau_star));
  t.record("scalar_curvature_sign", bool_residual(s1 ? pg.tau > 0.0 : pg.tau < 0.0));
  double k_err = 0.0;
  for (double k : pg.sectional) k_err = std::max(k_err, scaled(k, ref.sectional));
  t.record("sectional_curvatures", k_err);
  t.record("space_form", pg.space_form_residual);
}

}  // namespace

VerifyReport run_verification(ModelId model, double r, int samples, std::uint64_t seed,
                              double tol) {
  VerifyReport rep;
  rep.model = model;
  rep.r = r;
  rep.samples = samples;
  rep.seed = seed;
  rep.tolerance = tol;

  CheckTable table;
  table.record("pipeline", 0.0);
  for (const ModelPoint& p : sample_points(model, r, samples, seed)) {
    try {
      check_point(analyze(p, kDefaultTolerance), tol, table);
    } catch (const std::exception&) {
      table.record("pipeline", std::numeric_limits<double>::infinity());
    }
  }
  rep.checks = std::move(table).finish(tol);
  return rep;
}

}  // namespace paraframe
