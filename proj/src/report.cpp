#include "paraframe/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace paraframe {

namespace {

template <std::size_t Rank>
std::string component_key(const std::string& prefix, std::size_t flat) {
  std::string key = prefix + "_";
  for (int idx : Tensor<Rank>::unflatten(flat)) key += static_cast<char>('0' + idx);
  return key;
}

template <std::size_t Rank>
Record sparse(const Tensor<Rank>& t, const std::string& prefix, double tol) {
  Record obj = Record::object();
  const double cutoff = tol * std::max(1.0, t.max_abs());
  for (std::size_t n = 0; n < Tensor<Rank>::kSize; ++n)
    if (std::abs(t[n]) > cutoff) obj[component_key<Rank>(prefix, n)] = t[n];
  return obj;
}

template <std::size_t Rank>
Record dense(const Tensor<Rank>& t, const std::string& prefix) {
  Record obj = Record::object();
  for (std::size_t n = 0; n < Tensor<Rank>::kSize; ++n) obj[component_key<Rank>(prefix, n)] = t[n];
  return obj;
}

Record vec(const Vec3& v) { return Record::array({v(0), v(1), v(2)}); }

Record class_list(const ClassLabel& label) {
  Record arr = Record::array();
  for (int c : label.classes) arr.push_back("F" + std::to_string(c));
  return arr;
}

// Scalar parameters of the classes present in the label.
Record class_parameters(const FDecomposition& d, const ClassLabel& label) {
  Record obj = Record::object();
  const auto& p = d.params;
  for (int c : label.classes) {
    switch (c) {
      case 1: obj["theta1"] = p.theta1; obj["theta2"] = p.theta2; break;
      case 4: obj["theta0"] = p.theta0; break;
      case 5: obj["theta_star0"] = p.theta_star0; break;
      case 8: obj["lambda"] = p.lambda; break;
      case 9: obj["mu"] = p.mu; break;
      case 10: obj["nu"] = p.nu; break;
      case 11: obj["omega1"] = p.omega1; obj["omega2"] = p.omega2; break;
      default: break;
    }
  }
  return obj;
}

Record all_parameters(const FDecomposition& d) {
  const auto& p = d.params;
  Record obj = Record::object();
  obj["theta0"] = p.theta0;
  obj["theta_star0"] = p.theta_star0;
  obj["theta1"] = p.theta1;
  obj["theta2"] = p.theta2;
  obj["lambda"] = p.lambda;
  obj["mu"] = p.mu;
  obj["nu"] = p.nu;
  obj["omega1"] = p.omega1;
  obj["omega2"] = p.omega2;
  return obj;
}

void merge(Record& into, const Record& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = it.value();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string scalar_text(const Record& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "null";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void json_value(std::ostream& os, const Record& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad << '"' << escape(it.key()) << "\": ";
      json_value(os, it.value(), indent + 2);
    }
    os << '\n' << close_pad << '}';
  } else if (v.is_array()) {
    bool nested = false;
    for (const auto& e : v) nested = nested || e.is_structured();
    if (v.empty()) {
      os << "[]";
    } else if (!nested) {
      os << '[';
      for (std::size_t n = 0; n < v.size(); ++n) {
        if (n > 0) os << ", ";
        json_value(os, v[n], indent);
      }
      os << ']';
    } else {
      os << "[\n";
      for (std::size_t n = 0; n < v.size(); ++n) {
        if (n > 0) os << ",\n";
        os << pad;
        json_value(os, v[n], indent + 2);
      }
      os << '\n' << close_pad << ']';
    }
  } else if (v.is_string()) {
    os << '"' << escape(v.get<std::string>()) << '"';
  } else if (v.is_number_float()) {
    const double d = v.get<double>();
    os << (std::isfinite(d) ? format_number(d) : "null");
  } else {
    os << scalar_text(v);
  }
}

void text_value(std::ostream& os, const Record& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const Record& e = it.value();
    if (e.is_object()) {
      os << pad << it.key() << ":\n";
      if (e.empty()) os << pad << "  (none)\n";
      text_value(os, e, indent + 2);
    } else if (e.is_array() && !e.empty() && e.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& item : e) {
        text_value(os, item, indent + 2);
        os << '\n';
      }
    } else if (e.is_array()) {
      os << pad << it.key() << ": ";
      for (std::size_t n = 0; n < e.size(); ++n) os << (n ? ", " : "") << scalar_text(e[n]);
      os << '\n';
    } else {
      os << pad << it.key() << ": " << scalar_text(e) << '\n';
    }
  }
}

std::string csv_cell(const Record& v) {
  std::string s;
  if (v.is_array()) {
    for (std::size_t n = 0; n < v.size(); ++n) s += (n ? " " : "") + scalar_text(v[n]);
  } else {
    s = scalar_text(v);
  }
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char ch : s) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return s;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::array<std::string, 3> parameter_names(ModelId model) {
  if (model == ModelId::S2) return {"u1", "u2", "u3"};
  return {"u0", "u1", "u2"};
}

Record point_record(const PointGeometry& pg, const ReportSections& sections, double tol) {
  Record doc = Record::object();
  const auto names = parameter_names(pg.point.model);
  Record point = Record::object();
  for (int i = 0; i < 3; ++i) point[names[i]] = pg.point.u[i];
  doc["point"] = point;

  if (sections.classification) {
    doc["classes"] = class_list(pg.label);
    doc["label"] = pg.label.to_string();
    doc["is_f0"] = pg.label.is_f0;
    doc["parameters"] = class_parameters(pg.decomposition, pg.label);
    doc["decomposition_residual"] = pg.decomposition.residual;
  }
  if (sections.tensors) {
    doc["F"] = sparse(pg.f, "F", tol);
    Record lee = Record::object();
    lee["theta"] = vec(pg.lee.theta);
    lee["theta_star"] = vec(pg.lee.theta_star);
    lee["omega"] = vec(pg.lee.omega);
    doc["lee_forms"] = lee;
    Record comps = Record::object();
    for (std::size_t n = 0; n < kAdmissibleClasses.size(); ++n) {
      const std::string name = "F" + std::to_string(kAdmissibleClasses[n]);
      const Record entries = sparse(pg.decomposition.components[n], name, tol);
      if (!entries.empty()) comps[name] = entries;
    }
    doc["class_components"] = comps;
    doc["N"] = sparse(pg.n, "N", tol);
    doc["N_hat"] = sparse(pg.n_hat, "Nhat", tol);
  }
  if (sections.curvature) {
    doc["R"] = sparse(pg.r, "R", tol);
    doc["rho"] = dense(pg.ricci, "rho");
    doc["rho_star"] = dense(pg.ricci_star, "rho_star");
    doc["tau"] = pg.tau;
    doc["tau_star"] = pg.tau_star;
    Record k = Record::object();
    k["k01"] = pg.sectional[0];
    k["k02"] = pg.sectional[1];
    k["k12"] = pg.sectional[2];
    doc["sectional"] = k;
    doc["kappa"] = pg.kappa;
    doc["space_form_residual"] = pg.space_form_residual;
  }
  if (sections.residuals) {
    Record res = Record::object();
    res["axioms"] = pg.axioms.max();
    res["decomposition"] = pg.decomposition.residual;
    res["space_form"] = pg.space_form_residual;
    res["curvature_symmetries"] = curvature_symmetries(pg.r).max();
    doc["residuals"] = res;
  }
  return doc;
}

Record flat_point_record(const PointGeometry& pg, const ReportSections& sections) {
  Record row = Record::object();
  const auto names = parameter_names(pg.point.model);
  for (int i = 0; i < 3; ++i) row[names[i]] = pg.point.u[i];
  if (sections.classification) {
    row["label"] = pg.label.to_string();
    merge(row, all_parameters(pg.decomposition));
    row["decomposition_residual"] = pg.decomposition.residual;
  }
  if (sections.tensors) {
    merge(row, dense(pg.f, "F"));
    merge(row, dense(pg.n, "N"));
    merge(row, dense(pg.n_hat, "Nhat"));
  }
  if (sections.curvature) {
    merge(row, dense(pg.r, "R"));
    merge(row, dense(pg.ricci, "rho"));
    merge(row, dense(pg.ricci_star, "rho_star"));
    row["tau"] = pg.tau;
    row["tau_star"] = pg.tau_star;
    row["k01"] = pg.sectional[0];
    row["k02"] = pg.sectional[1];
    row["k12"] = pg.sectional[2];
    row["space_form_residual"] = pg.space_form_residual;
  }
  if (sections.residuals) row["axiom_residual"] = pg.axioms.max();
  return row;
}

Record verify_record(const VerifyReport& rep) {
  Record doc = Record::object();
  doc["command"] = "verify";
  doc["model"] = model_name(rep.model);
  doc["r"] = rep.r;
  doc["samples"] = rep.samples;
  doc["seed"] = rep.seed;
  doc["tolerance"] = rep.tolerance;
  Record checks = Record::array();
  for (const auto& c : rep.checks) {
    Record item = Record::object();
    item["name"] = c.name;
    item["max_residual"] = c.max_residual;
    item["pass"] = c.pass;
    checks.push_back(item);
  }
  doc["checks"] = checks;
  const std::string failure = rep.first_failure();
  doc["first_failure"] = failure.empty() ? Record(nullptr) : Record(failure);
  doc["result"] = rep.passed() ? "PASS" : "FAIL";
  return doc;
}

void write_json(std::ostream& os, const Record& doc) {
  json_value(os, doc, 0);
  os << '\n';
}

void write_csv(std::ostream& os, const Record& header, const std::vector<Record>& rows) {
  bool first = true;
  for (auto it = header.begin(); it != header.end(); ++it) {
    os << (first ? "" : ",") << it.key();
    first = false;
  }
  os << '\n';
  for (const auto& row : rows) {
    first = true;
    for (auto it = header.begin(); it != header.end(); ++it) {
      os << (first ? "" : ",");
      first = false;
      if (row.contains(it.key())) os << csv_cell(row[it.key()]);
    }
    os << '\n';
  }
}

void write_text(std::ostream& os, const Record& doc) { text_value(os, doc, 0); }

}  // namespace paraframe
