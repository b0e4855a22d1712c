// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails. The only argument is the path of the paraframe
// executable, used for the determinism criterion.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "paraframe/geometry.hpp"
#include "paraframe/reference.hpp"

using namespace paraframe;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kPoints = 100;
constexpr double kTol = 1e-9;
constexpr std::array<double, 3> kRadii = {0.5, 1.0, 2.0};

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string note;

  void bound(double value, double limit, const std::string& what) {
    if (!std::isfinite(value)) value = INFINITY;
    worst = std::max(worst, value);
    if (value > limit && pass) {
      pass = false;
      note = what;
    }
  }
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

std::string where(const ModelPoint& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s r=%g u=(%.6g, %.6g, %.6g)", model_name(p.model).c_str(), p.r,
                p.u[0], p.u[1], p.u[2]);
  return buf;
}

// Fixed-radius seeded points, each analyzed once.
std::vector<PointGeometry> analyzed(ModelId model, double r = 1.0) {
  std::vector<PointGeometry> out;
  for (const ModelPoint& p : sample_points(model, r, kPoints, kSeed)) out.push_back(analyze(p));
  return out;
}

// u1 samples spread across the four quadrants of S1, or both branches of S2.
std::vector<double> u1_samples(ModelId model, int count) {
  std::vector<double> u;
  const double margin = kSampleMargin;
  for (int n = 0; n < count; ++n) {
    const double t = (n + 0.5) / count;
    if (model == ModelId::S1) {
      const int quadrant = (4 * n) / count;
      const double local = std::fmod(4.0 * t, 1.0);
      u.push_back(quadrant * std::numbers::pi / 2 + margin +
                  local * (std::numbers::pi / 2 - 2 * margin));
    } else {
      const double mag = margin + (2.0 - margin) * std::fmod(2.0 * t, 1.0);
      u.push_back(n % 2 == 0 ? mag : -mag);
    }
  }
  return u;
}

Outcome connection(ModelId model) {
  Outcome o;
  bool positive = false, negative = false;
  for (double r : kRadii)
    for (double u1 : u1_samples(model, 20)) {
      ModelPoint p{model, r, {0.4, u1, 1.3}};
      if (model == ModelId::S2) p.u = {u1, 1.3, -0.7};
      (u1 > 0 ? positive : negative) = true;
      const PointGeometry pg = analyze(p);
      o.bound(max_diff(pg.conn.gamma, reference_values(p).gamma), kTol, where(p));
    }
  if (model == ModelId::S2) o.require(positive && negative, "both branches sampled");
  return o;
}

Outcome f_and_class(ModelId model) {
  Outcome o;
  const std::vector<int> expected =
      model == ModelId::S1 ? std::vector<int>{1, 11} : std::vector<int>{5, 9};
  for (const PointGeometry& pg : analyzed(model)) {
    const ModelReference ref = reference_values(pg.point);
    o.bound(max_diff(pg.f, ref.f), kTol, "F at " + where(pg.point));
    o.bound(pg.decomposition.residual, kTol, "residual at " + where(pg.point));
    const ClassLabel label = classify(pg.decomposition, kTol);
    o.require(label.classes == expected && !label.is_f0, "class at " + where(pg.point));
    for (int id : expected) {
      o.require(pg.decomposition.component(id).max_abs() > kTol,
                "vanishing F" + std::to_string(id) + " at " + where(pg.point));
      o.bound(max_diff(pg.decomposition.component(id), ref.class_components.at(id)), kTol,
              "F" + std::to_string(id) + " at " + where(pg.point));
    }
    if (model == ModelId::S2) {
      o.bound(pg.d_eta.max_abs(), kTol, "d eta at " + where(pg.point));
      double nabla_xi_xi = 0.0;
      for (int k = 0; k < 3; ++k) nabla_xi_xi = std::max(nabla_xi_xi, std::abs(pg.conn.gamma(0, 0, k)));
      o.bound(nabla_xi_xi, kTol, "nabla_xi xi at " + where(pg.point));
    }
  }
  return o;
}

Outcome nijenhuis_routes() {
  Outcome o;
  for (ModelId model : {ModelId::S1, ModelId::S2})
    for (const PointGeometry& pg : analyzed(model)) {
      const NijenhuisPair direct = nijenhuis_direct(pg.conn, pg.field, pg.structure);
      const ModelReference ref = reference_values(pg.point);
      o.bound(max_diff(pg.n, direct.n), kTol, "N routes at " + where(pg.point));
      o.bound(max_diff(pg.n_hat, direct.n_hat), kTol, "N hat routes at " + where(pg.point));
      o.bound(max_diff(pg.n, ref.n), kTol, "N closed form at " + where(pg.point));
      o.bound(max_diff(pg.n_hat, ref.n_hat), kTol, "N hat closed form at " + where(pg.point));
    }
  return o;
}

double relative(double value, double expected) {
  return std::abs(value - expected) / std::abs(expected);
}

Outcome curvature_scalars() {
  Outcome o;
  constexpr double kRel = 1e-8;
  for (ModelId model : {ModelId::S1, ModelId::S2})
    for (double r : kRadii)
      for (const PointGeometry& pg : analyzed(model, r)) {
        const double sign = model == ModelId::S1 ? 1.0 : -1.0;
        const double k = sign / (r * r);
        o.bound(relative(pg.tau, 6.0 * k), kRel, "tau at " + where(pg.point));
        // tau* vanishes, so it is measured against the scale of tau.
        o.bound(std::abs(pg.tau_star) / std::abs(6.0 * k), kRel, "tau* at " + where(pg.point));
        for (double kij : pg.sectional) o.bound(relative(kij, k), kRel, "k at " + where(pg.point));
        o.require(sign * pg.tau > 0, "sign of tau at " + where(pg.point));
      }
  return o;
}

Outcome space_forms() {
  Outcome o;
  for (ModelId model : {ModelId::S1, ModelId::S2})
    for (double r : kRadii)
      for (const PointGeometry& pg : analyzed(model, r)) {
        const double kappa = (model == ModelId::S1 ? 1.0 : -1.0) / (r * r);
        o.bound(space_form_residual(pg.r, pg.structure.metric, kappa), kTol, where(pg.point));
      }
  return o;
}

Outcome jet_vs_closed_form() {
  Outcome o;
  for (ModelId model : {ModelId::S1, ModelId::S2})
    for (const ModelPoint& p : sample_points(model, 1.0, kPoints, kSeed)) {
      const StructureField jet = structure_field(p);
      const StructureField closed = closed_form_field(p);
      o.bound(max_diff(jet.c, closed.c), 1e-10, "C at " + where(p));
      o.bound(max_diff(jet.dc, closed.dc), 1e-10, "dC at " + where(p));
    }
  return o;
}

Outcome properties() {
  Outcome o;
  for (ModelId model : {ModelId::S1, ModelId::S2})
    for (const PointGeometry& pg : analyzed(model)) {
      const std::string at = where(pg.point);
      o.bound(curvature_symmetries(pg.r).max(), kTol, "R symmetries at " + at);
      const FSymmetryResiduals fs = f_symmetry_residuals(pg.f, pg.structure);
      o.bound(std::max(fs.yz_symmetry, fs.phi_property), kTol, "F symmetries at " + at);
      o.bound(std::abs(pg.lee.omega(0)), kTol, "omega0 at " + at);
      o.bound(std::abs(pg.lee.theta(1) + pg.lee.theta_star(2)), kTol, "theta1 at " + at);
      o.bound(std::abs(pg.lee.theta(2) + pg.lee.theta_star(1)), kTol, "theta2 at " + at);
      o.bound(check_nabla_eta_relation(pg.conn, pg.f, pg.structure), kTol, "nabla eta at " + at);
    }
  return o;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return c;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) c.out.append(buf.data(), n);
  c.status = pclose(pipe);
  return c;
}

Outcome cli_determinism(const std::string& exe) {
  Outcome o;
  if (exe.empty()) {
    o.require(false, "no executable path given");
    return o;
  }
  for (const char* model : {"s1", "s2"}) {
    const std::string cmd =
        "'" + exe + "' verify --model " + model + " --samples 100 --seed 42 2>/dev/null";
    const Captured a = capture(cmd);
    const Captured b = capture(cmd);
    o.require(a.status == 0 && b.status == 0, std::string(model) + " exit status");
    o.require(!a.out.empty() && a.out == b.out, std::string(model) + " output differs");
    o.require(a.out.find("\"result\": \"PASS\"") != std::string::npos,
              std::string(model) + " did not report PASS");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"structure axioms",
       [] {
         Outcome o;
         for (ModelId model : {ModelId::S1, ModelId::S2})
           for (const PointGeometry& pg : analyzed(model))
             o.bound(verify_axioms(pg.structure).max(), kTol, where(pg.point));
         return o;
       }},
      {"connection reproduction (S1)", [] { return connection(ModelId::S1); }},
      {"connection reproduction (S2)", [] { return connection(ModelId::S2); }},
      {"fundamental tensor and class (S1)", [] { return f_and_class(ModelId::S1); }},
      {"fundamental tensor and class (S2)", [] { return f_and_class(ModelId::S2); }},
      {"Nijenhuis cross-check", nijenhuis_routes},
      {"curvature scalars", curvature_scalars},
      {"space-form identities", space_forms},
      {"jet vs closed-form oracle", jet_vs_closed_form},
      {"property suite", properties},
      {"CLI determinism", [&exe] { return cli_determinism(exe); }},
  };

  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    failures += !o.pass;
    std::printf("%s  %2zu  %-36s max residual %.3e%s%s\n", o.pass ? "PASS" : "FAIL", n + 1,
                criteria[n].first.c_str(), o.worst, o.pass ? "" : "  first failure: ",
                o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
