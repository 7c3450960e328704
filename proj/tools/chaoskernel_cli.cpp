// chaoskernel command-line front door: evaluation, simulation, validation,
// and plot-data export.  Subcommands: density, alpha, transform, roots,
// simulate, validate, export.
//
// Config precedence: flags > CHAOSKERNEL_* environment > --config JSON file
// > built-in defaults.  Exit codes: 0 success, 1 numeric failure (operation
// named on stderr), 2 usage error.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chaoskernel/acceptance.hpp"
#include "chaoskernel/alpha.hpp"
#include "chaoskernel/density.hpp"
#include "chaoskernel/errors.hpp"
#include "chaoskernel/model.hpp"
#include "chaoskernel/numerics.hpp"
#include "chaoskernel/special.hpp"
#include "chaoskernel/transforms.hpp"
#include "chaoskernel/version.hpp"

using json = nlohmann::ordered_json;
using namespace chaoskernel;

namespace {

// ---------------------------------------------------------------------------
// Output plumbing

void flatten(const json& node, const std::string& prefix,
             std::vector<std::pair<std::string, json>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else {
    out.emplace_back(prefix, node);
  }
}

std::string csv_field(const json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else {
    s = v.dump();  // numbers, booleans, null
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

// Streams schema objects row by row: JSON lines / CSV with a header row /
// aligned human-readable lines.  Rows are flushed as they are produced so
// long sweeps remain interruptible.
class RowSink {
 public:
  explicit RowSink(std::string format) : format_(std::move(format)) {}

  void emit(const json& row) {
    if (format_ == "json") {
      std::cout << row.dump() << "\n" << std::flush;
      return;
    }
    std::vector<std::pair<std::string, json>> flat;
    flatten(row, "", flat);
    if (format_ == "csv") {
      if (!header_done_) {
        for (std::size_t i = 0; i < flat.size(); ++i) {
          std::cout << (i ? "," : "") << csv_field(flat[i].first);
        }
        std::cout << "\n";
        header_done_ = true;
      }
      for (std::size_t i = 0; i < flat.size(); ++i) {
        std::cout << (i ? "," : "") << csv_field(flat[i].second);
      }
      std::cout << "\n" << std::flush;
      return;
    }
    // human: skip schema plumbing, print key = value lines per row
    for (const auto& [key, value] : flat) {
      if (key == "schema_version" || key == "version" || key == "command") {
        continue;
      }
      std::cout << "  " << key << " = "
                << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    }
    std::cout << "\n" << std::flush;
  }

 private:
  std::string format_;
  bool header_done_ = false;
};

// Single-result emission: pretty JSON object / one-row CSV / human block.
void emit_single(const std::string& format, const json& obj) {
  if (format == "json") {
    std::cout << obj.dump(2) << "\n";
    return;
  }
  RowSink sink(format);
  sink.emit(obj);
}

json base_report(const std::string& command, json inputs,
                 std::uint64_t seed = 0) {
  json obj;
  obj["schema_version"] = kSchemaVersion;
  obj["command"] = command;
  obj["inputs"] = std::move(inputs);
  obj["value"] = nullptr;
  obj["error_estimate"] = nullptr;
  obj["method"] = "";
  obj["flags"] = json::object();
  obj["seed"] = seed;
  obj["version"] = kVersion;
  return obj;
}

json cval(ComplexValue v) {
  if (v.imag() == 0.0) return v.real();
  return json{{"re", v.real()}, {"im", v.imag()}};
}

// ---------------------------------------------------------------------------
// Argument helpers

std::vector<double> parse_doubles(const std::string& text, std::size_t n,
                                  const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) +
                                 ": not a number: " + item);
    }
  }
  if (out.size() != n) {
    throw CLI::ValidationError(std::string(what) + ": expected " +
                               std::to_string(n) + " comma-separated values");
  }
  return out;
}

struct GridSpec {
  std::string coord;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n = 0;
};

GridSpec parse_grid(const std::string& text, bool with_coord) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  const std::size_t want = with_coord ? 4 : 3;
  if (parts.size() != want) {
    throw CLI::ValidationError(
        with_coord ? "--grid: expected coord:lo:hi:count"
                   : "--grid: expected lo:hi:count");
  }
  GridSpec g;
  std::size_t i = 0;
  if (with_coord) g.coord = parts[i++];
  try {
    g.lo = std::stod(parts[i]);
    g.hi = std::stod(parts[i + 1]);
    const long n = std::stol(parts[i + 2]);
    if (n < 1) throw std::invalid_argument("count");
    g.n = static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid: malformed numeric field in " + text);
  }
  return g;
}

double grid_point(const GridSpec& g, std::size_t i) {
  if (g.n == 1) return g.lo;
  return g.lo + (g.hi - g.lo) * static_cast<double>(i) /
                    static_cast<double>(g.n - 1);
}

// Contiguous-range fan-out with deterministic (worker-index-ordered)
// reduction; results are reproducible for a fixed --workers value.
void parallel_ranges(std::size_t n, unsigned workers,
                     const std::function<void(std::size_t, std::size_t,
                                              unsigned)>& body) {
  const unsigned w = std::max(1u, std::min<unsigned>(workers,
                                                     static_cast<unsigned>(n)));
  if (w == 1) {
    body(0, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < w; ++i) {
    pool.emplace_back(body, n * i / w, n * (i + 1) / w, i);
  }
  for (auto& t : pool) t.join();
}

const char* regime_name(RegimeCondition c) {
  switch (c) {
    case RegimeCondition::condition22: return "condition22";
    case RegimeCondition::condition23: return "condition23";
    default: return "none";
  }
}

// ---------------------------------------------------------------------------
// Subcommand state

struct DensityArgs {
  std::string point;
  double s = 1.0;
  double tol = 1e-9;
  double eps = 0.5;
  bool exact = false;
  bool asymptotic = false;
  std::string grid;
};

struct AlphaArgs {
  double x = 1.0;
  bool have_x = false;
  double s = 1.0;
  std::string method = "auto";
  std::string grid;
};

struct TransformArgs {
  std::string kind;
  double s = 1.0, r = 0.0, c = 0.0, b = 0.0, rho = 0.0, gamma = 0.0;
  double w = 0.0, z = 0.0;
  std::string point;
  double lambda_re = 0.0, lambda_im = 0.0;
};

struct RootsArgs {
  std::size_t tan_n = 0;
  std::size_t sh_n = 0;
};

struct SimulateArgs {
  std::string kind = "tangent";
  std::size_t paths = 1000;
  std::size_t steps = 4096;
  double s = 1.0;
  std::uint64_t seed = 0;
  std::string scheme = "exact";
};

struct ValidateArgs {
  std::vector<int> criteria;
};

struct ExportArgs {
  std::string curve;
  std::string point;
  double s = 1.0;
  double tol = 1e-9;
  double lo = 0.0, hi = 1.0;
  std::size_t n = 101;
  double re = 0.0;
};

// ---------------------------------------------------------------------------
// Subcommand implementations (throw NumericError / domain_error on failure)

int run_density(const DensityArgs& a, const std::string& format) {
  const std::vector<double> pv = parse_doubles(a.point, 5, "--point");
  const bool want_asym = a.asymptotic;
  RowSink sink(format);

  auto evaluate = [&](const ChaosPoint& p, double s, bool stream) {
    json inputs{{"w", p.w},    {"beta", p.beta}, {"x", p.x},
                {"zeta", p.zeta}, {"z", p.z},    {"s", s},
                {"tol", a.tol}};
    json obj = base_report("density", inputs);
    if (!want_asym) {
      const QuadResult q = q_exact(p, s, a.tol);
      obj["value"] = q.value.real();
      obj["error_estimate"] = q.total_error();
      obj["method"] = "q_exact";
      obj["flags"] = {{"certifiably_zero", consistent_with_zero(q)},
                      {"panels", q.panels_used},
                      {"units", "density over (w, beta, x, zeta, z)"}};
    } else {
      const AsymptoticResult r = q_asymptotic(p, s, a.eps);
      if (!std::isfinite(r.log_value)) {
        throw NumericError(
            "q_asymptotic: undefined at the requested point (mu_s <= 0)");
      }
      obj["inputs"]["eps"] = a.eps;
      obj["value"] = r.value;
      // Error scale of the leading correction, O(mu^(eps-1)) relative.
      obj["error_estimate"] =
          std::abs(r.value) * std::pow(r.report.mu, a.eps - 1.0);
      obj["method"] = "q_asymptotic";
      obj["flags"] = {{"regime", regime_name(r.report.satisfied)},
                      {"mu", r.report.mu},
                      {"log_value", r.log_value},
                      {"units", "density over (w, beta, x, zeta, z)"}};
    }
    if (stream) sink.emit(obj);
    else emit_single(format, obj);
  };

  if (a.grid.empty()) {
    evaluate({pv[0], pv[1], pv[2], pv[3], pv[4]}, a.s, false);
    return 0;
  }
  const GridSpec g = parse_grid(a.grid, true);
  static const std::map<std::string, int> kCoord = {
      {"w", 0}, {"beta", 1}, {"x", 2}, {"zeta", 3}, {"z", 4}, {"s", 5}};
  const auto it = kCoord.find(g.coord);
  if (it == kCoord.end()) {
    throw CLI::ValidationError("--grid: unknown coordinate " + g.coord);
  }
  for (std::size_t i = 0; i < g.n; ++i) {
    std::vector<double> v = pv;
    double s = a.s;
    const double t = grid_point(g, i);
    if (it->second == 5) s = t;
    else v[static_cast<std::size_t>(it->second)] = t;
    evaluate({v[0], v[1], v[2], v[3], v[4]}, s, true);
  }
  return 0;
}

// alpha_s(x) = s^{-2} alpha_1(x / s^2), with the method's own error estimate
// rescaled alongside the value.
json alpha_report(double x, double s, const std::string& method) {
  json inputs{{"x", x}, {"s", s}, {"method", method}};
  json obj = base_report("alpha", inputs);
  obj["flags"]["units"] = "density over x";
  const double xs = x / (s * s);
  const double scale = 1.0 / (s * s);
  if (xs <= 0.0) {
    obj["value"] = 0.0;
    obj["error_estimate"] = 0.0;
    obj["method"] = "support";  // alpha_s vanishes for x <= 0
    return obj;
  }
  auto eval_series = [&] { return alpha1_series(xs); };
  auto eval_integral = [&] { return alpha1_integral(xs); };
  if (method == "both") {
    const AlphaEval es = eval_series();
    const AlphaEval ei = eval_integral();
    const double diff = std::abs(es.value - ei.value);
    obj["value"] = scale * es.value;
    obj["error_estimate"] = scale * std::max({es.est_error, ei.est_error, diff});
    obj["method"] = "both";
    obj["flags"]["value_series"] = scale * es.value;
    obj["flags"]["value_integral"] = scale * ei.value;
    obj["flags"]["rel_diff"] = diff / std::abs(es.value);
    return obj;
  }
  AlphaEval e;
  if (method == "series") e = eval_series();
  else if (method == "integral") e = eval_integral();
  else e = (xs >= 0.15) ? eval_series() : eval_integral();  // auto
  obj["value"] = scale * e.value;
  obj["error_estimate"] = scale * e.est_error;
  obj["method"] = (e.method == AlphaMethod::series) ? "series" : "integral";
  return obj;
}

int run_alpha(const AlphaArgs& a, const std::string& format) {
  if (a.grid.empty()) {
    if (!a.have_x) throw CLI::ValidationError("alpha: need --x or --grid");
    emit_single(format, alpha_report(a.x, a.s, a.method));
    return 0;
  }
  const GridSpec g = parse_grid(a.grid, false);
  RowSink sink(format);
  for (std::size_t i = 0; i < g.n; ++i) {
    sink.emit(alpha_report(grid_point(g, i), a.s, a.method));
  }
  return 0;
}

int run_transform(const TransformArgs& a, const std::string& format) {
  json obj;
  // Closed-form evaluations: the error estimate is a conservative rounding
  // allowance (the series/closed-form branches agree to ~1e-13 relative).
  const double kRelRounding = 1e-13;
  if (a.kind == "flt-z") {
    const FLQueryZ q{a.s, a.r, a.c, a.b};
    const ComplexValue v = flt_Z(q);
    obj = base_report("transform", {{"kind", a.kind}, {"s", a.s}, {"r", a.r},
                                    {"c", a.c}, {"b", a.b}});
    obj["value"] = cval(v);
    obj["error_estimate"] = kRelRounding * std::abs(v);
    obj["method"] = "flt_Z";
  } else if (a.kind == "flt-y") {
    const FLQueryY q{a.s, a.r, a.rho, a.gamma, a.c, a.b};
    const ComplexValue v = flt_Y(q);
    obj = base_report("transform",
                      {{"kind", a.kind}, {"s", a.s}, {"r", a.r},
                       {"rho", a.rho}, {"gamma", a.gamma}, {"c", a.c},
                       {"b", a.b}});
    obj["value"] = cval(v);
    obj["error_estimate"] = kRelRounding * std::abs(v);
    obj["method"] = "flt_Y";
  } else if (a.kind == "laplace-z1") {
    const double v = laplace_Z1(a.w, a.z, a.b);
    obj = base_report("transform",
                      {{"kind", a.kind}, {"w", a.w}, {"z", a.z}, {"b", a.b}});
    obj["value"] = v;
    obj["error_estimate"] = kRelRounding * std::abs(v);
    obj["method"] = "laplace_Z1";
  } else if (a.kind == "psi") {
    const std::vector<double> pv = parse_doubles(a.point, 4, "--point");
    const MarginalPoint p{pv[0], pv[1], pv[2], pv[3]};
    const double v = psi(p, a.b);
    obj = base_report("transform",
                      {{"kind", a.kind}, {"w", p.w}, {"beta", p.beta},
                       {"zeta", p.zeta}, {"z", p.z}, {"b", a.b}});
    obj["value"] = v;
    obj["error_estimate"] = kRelRounding * std::abs(v);
    obj["method"] = "psi";
  } else if (a.kind == "phi") {
    const std::vector<double> pv = parse_doubles(a.point, 4, "--point");
    const MarginalPoint p{pv[0], pv[1], pv[2], pv[3]};
    const ComplexValue v = phi(p, {a.lambda_re, a.lambda_im});
    obj = base_report("transform",
                      {{"kind", a.kind}, {"w", p.w}, {"beta", p.beta},
                       {"zeta", p.zeta}, {"z", p.z},
                       {"lambda_re", a.lambda_re},
                       {"lambda_im", a.lambda_im}});
    obj["value"] = cval(v);
    obj["error_estimate"] = kRelRounding * std::abs(v);
    obj["method"] = "phi";
  } else {
    throw CLI::ValidationError("transform: unknown --kind " + a.kind);
  }
  obj["flags"]["units"] = "dimensionless transform value";
  emit_single(format, obj);
  return 0;
}

int run_roots(const RootsArgs& a, const std::string& format) {
  if (a.tan_n == 0 && a.sh_n == 0) {
    throw CLI::ValidationError(
        "roots: need --tan-fixed-points and/or --sh2cos2-zeros");
  }
  RowSink sink(format);
  if (a.tan_n > 0) {
    const auto ys = tan_fixed_points(a.tan_n);
    for (std::size_t n = 0; n < ys.size(); ++n) {
      const long double y = ys[n];
      const double residual =
          static_cast<double>(std::fabs(std::tan(y) - y));
      json obj = base_report("roots", {{"family", "tan-fixed-points"},
                                       {"n", n}});
      obj["value"] = static_cast<double>(y);
      obj["error_estimate"] = residual;
      obj["method"] = "bisection+newton";
      obj["flags"] = {{"residual", residual}, {"units", "radians"}};
      sink.emit(obj);
    }
  }
  if (a.sh_n > 0) {
    const auto zs = sh2cos2_zeros(a.sh_n);
    for (std::size_t k = 0; k < zs.size(); ++k) {
      const auto z = zs[k];
      const auto sh = std::sinh(z);
      const auto co = std::cos(z);
      const double residual = static_cast<double>(std::abs(sh * sh + co * co));
      json obj = base_report("roots", {{"family", "sh2cos2-zeros"}, {"k", k}});
      obj["value"] = json{{"re", static_cast<double>(z.real())},
                          {"im", static_cast<double>(z.imag())}};
      obj["error_estimate"] = residual;
      obj["method"] = "closed-form";
      obj["flags"] = {{"residual", residual}, {"units", "radians"}};
      sink.emit(obj);
    }
  }
  return 0;
}

int run_simulate(const SimulateArgs& a, const std::string& format,
                 unsigned workers) {
  if (a.paths == 0) throw CLI::ValidationError("simulate: --paths must be > 0");
  const Scheme scheme = (a.scheme == "euler")
                            ? Scheme::euler
                            : Scheme::exact_gaussian_plus_trapezoid;
  const PathConfig cfg{a.s, a.steps, a.seed, scheme};
  const unsigned w = std::max(1u, workers);
  static const std::array<const char*, 5> kTangentNames = {"w", "beta", "x",
                                                           "zeta", "z"};
  static const std::array<const char*, 5> kDudleyNames = {"lambda", "mu", "x",
                                                          "y", "z"};
  const bool tangent = a.kind == "tangent";
  // Accumulate into a fixed set of logical chunks and reduce in chunk order,
  // so the emitted bytes do not depend on the worker count.
  const std::size_t chunks = std::min<std::size_t>(a.paths, 64);
  std::vector<std::array<double, 5>> sum(chunks, {0, 0, 0, 0, 0});
  std::vector<std::array<double, 5>> sumsq(chunks, {0, 0, 0, 0, 0});
  std::vector<double> shell_max(chunks, 0.0);
  parallel_ranges(chunks, w, [&](std::size_t clo, std::size_t chi, unsigned) {
    for (std::size_t c = clo; c < chi; ++c) {
      const std::size_t lo = a.paths * c / chunks;
      const std::size_t hi = a.paths * (c + 1) / chunks;
      for (std::size_t j = lo; j < hi; ++j) {
        std::array<double, 5> v{};
        if (tangent) {
          const ChaosPoint y = simulate_tangent(cfg, j);
          v = {y.w, y.beta, y.x, y.zeta, y.z};
        } else {
          const PhasePoint p = simulate_dudley(cfg, j).back();
          v = {p.lambda, p.mu, p.x, p.y, p.z};
          const double chl = std::cosh(p.lambda);
          const double shell = chl * chl * std::pow(std::cosh(p.mu), 2) -
                               chl * chl * std::pow(std::sinh(p.mu), 2) -
                               std::pow(std::sinh(p.lambda), 2);
          shell_max[c] = std::max(shell_max[c], std::abs(shell - 1.0));
        }
        for (int d = 0; d < 5; ++d) {
          const auto dd = static_cast<std::size_t>(d);
          sum[c][dd] += v[dd];
          sumsq[c][dd] += v[dd] * v[dd];
        }
      }
    }
  });
  RowSink sink(format);
  const double n = static_cast<double>(a.paths);
  json inputs{{"kind", a.kind},     {"paths", a.paths}, {"steps", a.steps},
              {"s", a.s},           {"scheme", a.scheme},
              {"workers", w}};
  for (std::size_t d = 0; d < 5; ++d) {
    double total = 0.0, total_sq = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
      total += sum[c][d];
      total_sq += sumsq[c][d];
    }
    const double mean = total / n;
    const double var = std::max(0.0, total_sq / n - mean * mean);
    const double se = std::sqrt(var / n);
    json obj = base_report("simulate", inputs, a.seed);
    obj["inputs"]["coordinate"] =
        tangent ? kTangentNames[d] : kDudleyNames[d];
    obj["value"] = mean;
    obj["error_estimate"] = se;  // MC standard error
    obj["method"] = "monte-carlo";
    obj["flags"] = {{"stddev", std::sqrt(var)},
                    {"units", tangent ? "chaos coordinates"
                                      : "phase coordinates"}};
    sink.emit(obj);
  }
  if (!tangent) {
    double shell = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) shell = std::max(shell, shell_max[c]);
    json obj = base_report("simulate", inputs, a.seed);
    obj["inputs"]["coordinate"] = "mass_shell_residual_max";
    obj["value"] = shell;
    obj["error_estimate"] = 0.0;
    obj["method"] = "monte-carlo";
    obj["flags"] = {{"stddev", 0.0}, {"units", "dimensionless"}};
    sink.emit(obj);
  }
  return 0;
}

int run_validate(const ValidateArgs& a, const std::string& format,
                 unsigned workers) {
  std::vector<int> ids = a.criteria;
  if (ids.empty()) {
    for (const auto& c : acceptance_registry()) ids.push_back(c.id);
  }
  RowSink sink(format);
  int failures = 0;
  for (int id : ids) {
    const CriterionResult r = run_criterion(id, workers);
    failures += r.passed ? 0 : 1;
    if (format == "human") {
      std::cout << format_criterion_line(r) << "\n";
      if (!r.detail.empty()) {
        std::istringstream lines(r.detail);
        std::string line;
        while (std::getline(lines, line)) {
          std::cout << "     | " << line << "\n";
        }
      }
      std::cout << std::flush;
      continue;
    }
    json obj = base_report("validate", {{"criterion", r.id}});
    obj["value"] = r.measured;
    obj["error_estimate"] = 0.0;
    obj["method"] = r.name;
    obj["flags"] = {{"passed", r.passed},
                    {"threshold", r.threshold},
                    {"detail", r.detail}};
    sink.emit(obj);
  }
  if (format == "human") {
    std::cout << (failures ? std::to_string(failures) + " criterion(s) failed"
                           : std::string("all criteria passed"))
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}

int run_export(const ExportArgs& a, const std::string& format) {
  RowSink sink(format);
  if (a.curve == "alpha1") {
    for (std::size_t i = 0; i < a.n; ++i) {
      const double x =
          a.lo + (a.hi - a.lo) * static_cast<double>(i) /
                     static_cast<double>(std::max<std::size_t>(1, a.n - 1));
      sink.emit(alpha_report(x, a.s, "auto"));
    }
    return 0;
  }
  if (a.curve == "density-x") {
    const std::vector<double> pv = parse_doubles(a.point, 5, "--point");
    for (std::size_t i = 0; i < a.n; ++i) {
      const double x =
          a.lo + (a.hi - a.lo) * static_cast<double>(i) /
                     static_cast<double>(std::max<std::size_t>(1, a.n - 1));
      const ChaosPoint p{pv[0], pv[1], x, pv[3], pv[4]};
      const QuadResult q = q_exact(p, a.s, a.tol);
      json obj = base_report("export", {{"curve", a.curve}, {"x", x},
                                        {"s", a.s}, {"tol", a.tol}});
      obj["value"] = q.value.real();
      obj["error_estimate"] = q.total_error();
      obj["method"] = "q_exact";
      obj["flags"] = {{"certifiably_zero", consistent_with_zero(q)},
                      {"units", "density over (w, beta, x, zeta, z)"}};
      sink.emit(obj);
    }
    return 0;
  }
  if (a.curve == "phi-line") {
    const std::vector<double> pv = parse_doubles(a.point, 4, "--point");
    const MarginalPoint p{pv[0], pv[1], pv[2], pv[3]};
    for (std::size_t i = 0; i < a.n; ++i) {
      const double im =
          a.lo + (a.hi - a.lo) * static_cast<double>(i) /
                     static_cast<double>(std::max<std::size_t>(1, a.n - 1));
      const ComplexValue v = phi(p, {a.re, im});
      json obj = base_report("export", {{"curve", a.curve},
                                        {"lambda_re", a.re},
                                        {"lambda_im", im}});
      obj["value"] = cval(v);
      obj["error_estimate"] = 1e-13 * std::abs(v);
      obj["method"] = "phi";
      obj["flags"] = {{"units", "dimensionless transform value"}};
      sink.emit(obj);
    }
    return 0;
  }
  throw CLI::ValidationError("export: unknown --curve " + a.curve);
}

// ---------------------------------------------------------------------------
// Config file prescan: --config file supplies a defaults layer below
// environment variables and flags.

json load_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) path = argv[i + 1];
    else if (arg.rfind("--config=", 0) == 0) path = arg.substr(9);
  }
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) {
    std::cerr << "usage error: cannot open config file " << path << "\n";
    std::exit(2);
  }
  json cfg;
  try {
    in >> cfg;
  } catch (const std::exception& e) {
    std::cerr << "usage error: bad JSON in " << path << ": " << e.what()
              << "\n";
    std::exit(2);
  }
  static const std::vector<std::string> kKnown = {
      "format", "workers", "seed", "tol", "eps", "s"};
  for (const auto& [key, value] : cfg.items()) {
    (void)value;
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      std::cerr << "usage error: unknown config key \"" << key << "\"\n";
      std::exit(2);
    }
  }
  return cfg;
}

template <typename T>
void apply_config(const json& cfg, const char* key, CLI::Option* opt) {
  if (opt != nullptr && cfg.contains(key)) {
    opt->default_val(cfg.at(key).get<T>());
  }
}

}  // namespace

int main(int argc, char** argv) {
  const json cfg = load_config(argc, argv);

  CLI::App app{"chaoskernel: exact and small-time densities of the "
               "second-chaos tangent process of the relativistic diffusion"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format = "human";
  unsigned workers = 1;
  std::string config_path;
  auto* format_opt =
      app.add_option("--format", format, "Output format")
          ->check(CLI::IsMember({"json", "csv", "human"}))
          ->envname("CHAOSKERNEL_FORMAT");
  auto* workers_opt =
      app.add_option("--workers", workers, "Worker threads for fan-out")
          ->check(CLI::Range(1u, 256u))
          ->envname("CHAOSKERNEL_WORKERS");
  app.add_option("--config", config_path,
                 "JSON config file (defaults layer: flags > env > config)");
  apply_config<std::string>(cfg, "format", format_opt);
  apply_config<unsigned>(cfg, "workers", workers_opt);

  DensityArgs density_args;
  auto* density = app.add_subcommand(
      "density", "Evaluate q_exact / q_asymptotic at a point or along a grid");
  density->fallthrough();
  density->add_option("--point", density_args.point,
                      "w,beta,x,zeta,z (comma-separated)")->required();
  auto* density_s = density->add_option("--s", density_args.s, "Proper time");
  auto* density_tol =
      density->add_option("--tol", density_args.tol,
                          "Quadrature tolerance (relative to the integral's "
                          "a-priori scale)")
          ->envname("CHAOSKERNEL_TOL");
  auto* density_eps = density->add_option(
      "--eps", density_args.eps, "Regime epsilon for the asymptotic check");
  auto* exact_flag = density->add_flag("--exact", density_args.exact,
                                      "Exact inversion value (default)");
  density->add_flag("--asymptotic", density_args.asymptotic,
                    "Small-time closed form (requires mu_s > 0)")
      ->excludes(exact_flag);
  density->add_option("--grid", density_args.grid,
                      "Sweep coord:lo:hi:count over one of w,beta,x,zeta,z,s");
  apply_config<double>(cfg, "tol", density_tol);
  apply_config<double>(cfg, "eps", density_eps);
  apply_config<double>(cfg, "s", density_s);

  AlphaArgs alpha_args;
  auto* alpha = app.add_subcommand(
      "alpha", "Scalar chaos density alpha_s by series and/or integral");
  alpha->fallthrough();
  auto* alpha_x = alpha->add_option("--x", alpha_args.x, "Evaluation point");
  auto* alpha_s = alpha->add_option("--s", alpha_args.s, "Proper time");
  alpha->add_option("--method", alpha_args.method, "Evaluation method")
      ->check(CLI::IsMember({"auto", "series", "integral", "both"}));
  alpha->add_option("--grid", alpha_args.grid, "Sweep lo:hi:count over x");
  apply_config<double>(cfg, "s", alpha_s);

  TransformArgs transform_args;
  auto* transform = app.add_subcommand(
      "transform", "Fourier-Laplace transforms flt_Z / flt_Y / laplace-z1 / "
                   "psi / phi");
  transform->fallthrough();
  transform->add_option("--kind", transform_args.kind, "Transform to evaluate")
      ->required()
      ->check(CLI::IsMember({"flt-z", "flt-y", "laplace-z1", "psi", "phi"}));
  transform->add_option("--s", transform_args.s, "Proper time (flt-z, flt-y)");
  transform->add_option("--r", transform_args.r, "Frequency dual to w_s");
  transform->add_option("--rho", transform_args.rho,
                        "Frequency dual to beta_s (flt-y)");
  transform->add_option("--gamma", transform_args.gamma,
                        "Frequency dual to zeta_s (flt-y)");
  transform->add_option("--c", transform_args.c, "Frequency dual to z_s");
  transform->add_option("--b", transform_args.b, "Laplace rate");
  transform->add_option("--w", transform_args.w, "Velocity coordinate "
                        "(laplace-z1)");
  transform->add_option("--z", transform_args.z, "Integrated coordinate "
                        "(laplace-z1)");
  transform->add_option("--point", transform_args.point,
                        "w,beta,zeta,z (psi, phi)");
  transform->add_option("--lambda-re", transform_args.lambda_re,
                        "Re lambda (phi)");
  transform->add_option("--lambda-im", transform_args.lambda_im,
                        "Im lambda (phi)");

  RootsArgs roots_args;
  auto* roots = app.add_subcommand(
      "roots", "Root sequences: tan fixed points, sh^2+cos^2 zeros");
  roots->fallthrough();
  roots->add_option("--tan-fixed-points", roots_args.tan_n,
                    "First n fixed points of tan y = y");
  roots->add_option("--sh2cos2-zeros", roots_args.sh_n,
                    "First n complex zeros of sh^2 z + cos^2 z");

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand(
      "simulate", "Monte Carlo ensembles of the diffusion or its tangent");
  simulate->fallthrough();
  simulate->add_option("--kind", simulate_args.kind, "Process")
      ->check(CLI::IsMember({"dudley", "tangent"}));
  simulate->add_option("--paths", simulate_args.paths, "Number of paths");
  simulate->add_option("--steps", simulate_args.steps, "Steps per path");
  auto* simulate_s =
      simulate->add_option("--s", simulate_args.s, "Final proper time");
  auto* simulate_seed =
      simulate->add_option("--seed", simulate_args.seed,
                           "Seed (fully determines the ensemble)")
          ->envname("CHAOSKERNEL_SEED");
  simulate->add_option("--scheme", simulate_args.scheme, "Integration scheme")
      ->check(CLI::IsMember({"euler", "exact"}));
  apply_config<double>(cfg, "s", simulate_s);
  apply_config<std::uint64_t>(cfg, "seed", simulate_seed);

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand(
      "validate", "Run the acceptance criteria (machine-readable pass/fail)");
  validate->fallthrough();
  validate->add_option("--criterion", validate_args.criteria,
                       "Criterion id (repeatable; default all)");

  ExportArgs export_args;
  auto* export_cmd = app.add_subcommand(
      "export", "Sample a curve to CSV/JSON rows for external plotting");
  export_cmd->fallthrough();
  export_cmd->add_option("--curve", export_args.curve, "Curve family")
      ->required()
      ->check(CLI::IsMember({"alpha1", "density-x", "phi-line"}));
  export_cmd->add_option("--point", export_args.point,
                         "Base point (density-x: 5 comps; phi-line: 4)");
  auto* export_s =
      export_cmd->add_option("--s", export_args.s, "Proper time");
  auto* export_tol =
      export_cmd->add_option("--tol", export_args.tol, "Quadrature tolerance")
          ->envname("CHAOSKERNEL_TOL");
  export_cmd->add_option("--lo", export_args.lo, "Sweep start");
  export_cmd->add_option("--hi", export_args.hi, "Sweep end");
  export_cmd->add_option("--n", export_args.n, "Sample count");
  export_cmd->add_option("--re", export_args.re,
                         "Fixed Re lambda (phi-line)");
  apply_config<double>(cfg, "s", export_s);
  apply_config<double>(cfg, "tol", export_tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  alpha_args.have_x = alpha_x->count() > 0;

  const char* op = "chaoskernel";
  try {
    if (density->parsed()) {
      op = "density";
      return run_density(density_args, format);
    }
    if (alpha->parsed()) {
      op = "alpha";
      return run_alpha(alpha_args, format);
    }
    if (transform->parsed()) {
      op = "transform";
      return run_transform(transform_args, format);
    }
    if (roots->parsed()) {
      op = "roots";
      return run_roots(roots_args, format);
    }
    if (simulate->parsed()) {
      op = "simulate";
      return run_simulate(simulate_args, format, workers);
    }
    if (validate->parsed()) {
      op = "validate";
      return run_validate(validate_args, format, workers);
    }
    if (export_cmd->parsed()) {
      op = "export";
      return run_export(export_args, format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure in " << op << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure in " << op << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
