#include "paraframe/cli.hpp"

#include <algorithm>
#include <atomic>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "paraframe/geometry.hpp"

namespace paraframe::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& s, const std::string& whole) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw std::invalid_argument("cannot parse number '" + whole + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

std::vector<double> parse_axis(const std::string& axis) {
  if (axis.find(':') != std::string::npos) {
    const auto parts = split(axis, ':');
    if (parts.size() != 3) throw std::invalid_argument("range axis must be start:stop:count");
    const double lo = parse_scalar(parts[0]);
    const double hi = parse_scalar(parts[1]);
    const double count = parse_plain(parts[2], parts[2]);
    if (count < 0 || count != std::floor(count))
      throw std::invalid_argument("range count must be a non-negative integer");
    const int n = static_cast<int>(count);
    std::vector<double> vals;
    for (int k = 0; k < n; ++k) vals.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
    return vals;
  }
  std::vector<double> vals;
  for (const auto& tok : split(axis, ',')) vals.push_back(parse_scalar(tok));
  return vals;
}

ModelId parse_model(const std::string& name) {
  if (name == "s1") return ModelId::S1;
  if (name == "s2") return ModelId::S2;
  throw std::invalid_argument("unknown model '" + name + "' (expected s1 or s2)");
}

Record header(const RunConfig& cfg) {
  Record doc = Record::object();
  doc["command"] = cfg.command;
  doc["model"] = model_name(cfg.model);
  doc["r"] = cfg.r;
  return doc;
}

void emit(std::ostream& out, OutputFormat format, const Record& doc) {
  if (format == OutputFormat::Text)
    write_text(out, doc);
  else
    write_json(out, doc);
}

ModelPoint require_point(const RunConfig& cfg) {
  if (!cfg.point) throw std::invalid_argument("--point is required for " + cfg.command);
  return ModelPoint{cfg.model, cfg.r, *cfg.point};
}

int cmd_point(const RunConfig& cfg, const ReportSections& sections, std::ostream& out) {
  const PointGeometry pg = analyze(require_point(cfg), cfg.tol);
  if (cfg.format == OutputFormat::Csv) {
    const Record row = flat_point_record(pg, sections);
    write_csv(out, row, {row});
    return kExitOk;
  }
  Record doc = header(cfg);
  const Record body = point_record(pg, sections, cfg.tol);
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  emit(out, cfg.format, doc);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const VerifyReport rep = run_verification(cfg.model, cfg.r, cfg.samples, cfg.seed, cfg.tol);
  if (cfg.format == OutputFormat::Csv) {
    std::vector<Record> rows;
    for (const auto& c : rep.checks) {
      Record row = Record::object();
      row["check"] = c.name;
      row["max_residual"] = c.max_residual;
      row["pass"] = c.pass;
      rows.push_back(row);
    }
    Record head = Record::object();
    head["check"] = "";
    head["max_residual"] = 0.0;
    head["pass"] = true;
    write_csv(out, head, rows);
  } else {
    emit(out, cfg.format, verify_record(rep));
  }
  return rep.passed() ? kExitOk : kExitFailure;
}

struct SweepRow {
  ModelPoint point;
  std::optional<PointGeometry> geometry;
  std::string warning;
};

void evaluate_row(SweepRow& row, double tol) {
  try {
    row.geometry = analyze(row.point, tol);
  } catch (const DomainError& e) {
    row.warning = e.what();
  }
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  std::vector<Params> grid;
  if (!cfg.grid.empty())
    grid = parse_grid(cfg.grid);
  else if (cfg.point)
    grid = {*cfg.point};
  else
    throw std::invalid_argument("sweep needs --grid or --point");

  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& u : grid) rows.push_back({ModelPoint{cfg.model, cfg.r, u}, std::nullopt, {}});

  if (cfg.parallel && rows.size() > 1) {
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(rows.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t n = next++; n < rows.size(); n = next++) evaluate_row(rows[n], cfg.tol);
      });
    for (auto& t : pool) t.join();
  } else {
    for (auto& row : rows) evaluate_row(row, cfg.tol);
  }

  const ReportSections sections{true, true, true, true};
  const auto names = parameter_names(cfg.model);
  auto params_record = [&](const ModelPoint& p) {
    Record rec = Record::object();
    for (int i = 0; i < 3; ++i) rec[names[i]] = p.u[i];
    return rec;
  };

  if (cfg.format == OutputFormat::Csv) {
    PointGeometry blank;
    blank.point.model = cfg.model;
    Record head = params_record(blank.point);
    head["status"] = "";
    head["warning"] = "";
    const Record flat = flat_point_record(blank, sections);
    for (auto it = flat.begin(); it != flat.end(); ++it) head[it.key()] = it.value();

    std::vector<Record> table;
    for (const auto& row : rows) {
      Record rec = params_record(row.point);
      rec["status"] = row.geometry ? "ok" : "skipped";
      rec["warning"] = row.warning;
      if (row.geometry) {
        const Record values = flat_point_record(*row.geometry, sections);
        for (auto it = values.begin(); it != values.end(); ++it) rec[it.key()] = it.value();
      }
      table.push_back(rec);
    }
    write_csv(out, head, table);
    return kExitOk;
  }

  Record doc = header(cfg);
  Record list = Record::array();
  for (const auto& row : rows) {
    Record rec = Record::object();
    if (row.geometry) {
      rec["status"] = "ok";
      const Record body = point_record(*row.geometry, sections, cfg.tol);
      for (auto it = body.begin(); it != body.end(); ++it) rec[it.key()] = it.value();
    } else {
      rec["status"] = "skipped";
      rec["point"] = params_record(row.point);
      rec["warning"] = row.warning;
    }
    list.push_back(rec);
  }
  doc["rows"] = list;
  emit(out, cfg.format, doc);
  return kExitOk;
}

}  // namespace

double parse_scalar(const std::string& token) {
  const std::string s = trim(token);
  if (s.empty()) throw std::invalid_argument("empty number");
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return parse_plain(s, token);

  std::string factor = s.substr(0, pos);
  if (!factor.empty() && factor.back() == '*') factor.pop_back();
  double v = std::numbers::pi;
  if (factor == "-")
    v = -v;
  else if (!factor.empty() && factor != "+")
    v *= parse_plain(factor, token);

  const std::string rest = s.substr(pos + 2);
  if (!rest.empty()) {
    if (rest.front() != '/') throw std::invalid_argument("cannot parse number '" + token + "'");
    v /= parse_plain(rest.substr(1), token);
  }
  return v;
}

Params parse_point(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3)
    throw std::invalid_argument("a point needs exactly three comma-separated parameters");
  return {parse_scalar(parts[0]), parse_scalar(parts[1]), parse_scalar(parts[2])};
}

std::vector<Params> parse_grid(const std::string& text) {
  const auto axes = split(text, ';');
  if (axes.size() != 3) throw std::invalid_argument("a grid needs three ';'-separated axes");
  const auto a0 = parse_axis(axes[0]);
  const auto a1 = parse_axis(axes[1]);
  const auto a2 = parse_axis(axes[2]);
  std::vector<Params> pts;
  for (double x : a0)
    for (double y : a1)
      for (double z : a2) pts.push_back({x, y, z});
  return pts;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost paracontact almost paracomplex structures on hyperspheres in 4-space",
               "paraframe"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "Read options from a 'key = value' file; flags override it");

  std::string model = "s1";
  std::vector<std::string> point;
  std::string format = "json";
  RunConfig cfg;

  app.add_option("--model", model, "Built-in model: s1 (Euclidean) or s2 (Minkowski)")
      ->check(CLI::IsMember({"s1", "s2"}));
  app.add_option("--r", cfg.r, "Hypersphere radius (> 0)");
  app.add_option("--point", point, "Chart parameters, e.g. 0.3,0.7,1.1 or 0,pi/4,0")
      ->delimiter(',')
      ->expected(3);
  app.add_option("--grid", cfg.grid, "Sweep grid: axis;axis;axis with start:stop:count or lists");
  app.add_option("--samples", cfg.samples, "Number of seeded sample points for verify")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "Sampling seed");
  app.add_option("--tol", cfg.tol, "Absolute tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--parallel", cfg.parallel, "Evaluate sweep rows on all hardware threads");

  app.add_subcommand("classify", "Class of F at a point and its scalar parameters");
  app.add_subcommand("curvature", "Curvature tensor, Ricci tensors, scalar and sectional curvatures");
  app.add_subcommand("verify", "Check every identity of the model at seeded sample points");
  app.add_subcommand("sweep", "One full report per grid point");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.model = parse_model(model);
    cfg.format = parse_format(format);
    if (!point.empty()) {
      std::string joined;
      for (std::size_t n = 0; n < point.size(); ++n) joined += (n ? "," : "") + point[n];
      cfg.point = parse_point(joined);
    }
    if (!(cfg.r > 0.0) || !std::isfinite(cfg.r))
      throw DomainError("radius r must be positive and finite");

    if (cfg.command == "classify")
      return cmd_point(cfg, ReportSections{true, false, false, false}, out);
    if (cfg.command == "curvature")
      return cmd_point(cfg, ReportSections{false, false, true, false}, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    return cmd_sweep(cfg, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace paraframe::cli
