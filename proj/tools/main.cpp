// Command-line front end: scans, critical orders, nonclassicality reports and
// the self-verification suite, emitted as CSV curves or JSON reports with a
// reproducibility manifest alongside.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quncert/analysis.hpp"
#include "quncert/gaussian.hpp"
#include "quncert/version.hpp"

using nlohmann::json;
using namespace quncert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kQuarterPi = 0.25 * std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_manifest(const std::string& command, const json& parameters) {
  return json{{"command", command}, {"version", kVersion}, {"parameters", parameters}};
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  out << body;
}

// Data goes to --output (or stdout); the manifest is written next to the file
// as <output>.manifest.json, or to stderr when writing to stdout.
void emit(const std::string& body, const json& manifest, const std::string& output) {
  json sidecar = manifest;
  sidecar["generated_at"] = timestamp_utc();
  if (output.empty()) {
    std::cout << body;
    std::cerr << sidecar.dump() << "\n";
  } else {
    write_file(output, body);
    write_file(output + ".manifest.json", sidecar.dump(2) + "\n");
  }
}

void emit_report(json report, const json& manifest, const std::string& output) {
  report["manifest"] = manifest;
  emit(report.dump(2) + "\n", manifest, output);
}

std::string csv_curve(const std::string& axis, const std::vector<CurvePoint>& points) {
  std::string out = axis + ",value\n";
  for (const CurvePoint& p : points) {
    out += format_double(p.theta) + "," + format_double(p.value) + "\n";
  }
  return out;
}

json json_curve(const std::string& axis, const std::vector<CurvePoint>& points) {
  json rows = json::array();
  for (const CurvePoint& p : points) {
    rows.push_back({p.theta, p.value});
  }
  return json{{"columns", {axis, "value"}}, {"rows", rows}};
}

EntropyFamily parse_family(const std::string& name) {
  if (name == "tsallis" || name == "shannon") return EntropyFamily::Tsallis;
  if (name == "renyi") return EntropyFamily::Renyi;
  throw std::invalid_argument("unknown family: " + name);
}

// --family shannon pins q = 1; an explicit conflicting --q is a usage error.
double resolve_order(const std::string& family, double q, bool q_given) {
  if (family == "shannon") {
    if (q_given && q != 1.0) {
      throw std::invalid_argument("--family shannon fixes q = 1");
    }
    return 1.0;
  }
  return q;
}

ScanTarget parse_entropy_target(const std::string& name) {
  if (name == "joint") return ScanTarget::Joint;
  if (name == "product-operational") return ScanTarget::ProductOperational;
  if (name == "product-intrinsic") return ScanTarget::ProductIntrinsic;
  throw std::invalid_argument("unknown target: " + name);
}

SumMode parse_mode(const std::string& name) {
  if (name == "intrinsic") return SumMode::Intrinsic;
  if (name == "operational") return SumMode::Operational;
  throw std::invalid_argument("unknown mode: " + name);
}

const char* winner_name(Winner w) {
  switch (w) {
    case Winner::ExtremeMin:
      return "extreme-min";
    case Winner::IntermediateMin:
      return "intermediate-min";
    case Winner::Tie:
      return "tie";
  }
  return "tie";
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::domain_error& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

// ---------------------------------------------------------------- scan ----

struct ScanOptions {
  std::string target;
  std::string family = "tsallis";
  double q = 0.5;
  double delta = kQuarterPi;
  double theta_min = 0.0;
  double theta_max = kHalfPi;
  int theta_steps = 1000;
  double dx_min = 0.1;
  double dx_max = 4.0;
  int dx_steps = 1000;
  std::string mode = "intrinsic";
  bool normalize = false;
  bool degrees = false;
  std::string format = "csv";
  std::string output;
  int seed = 0;
  bool q_given = false;
  bool theta_range_given = false;
};

int run_scan(const ScanOptions& opt) {
  ScanOptions o = opt;
  if (o.degrees) {
    o.delta *= kDegToRad;
    o.theta_min *= kDegToRad;
    o.theta_max *= kDegToRad;
  }
  o.q = resolve_order(o.family, o.q, o.q_given);
  // Fisher scans default to the interior grid where the information is finite.
  if (o.target == "fisher" && !o.theta_range_given) {
    o.theta_min = 0.01;
    o.theta_max = kHalfPi - 0.01;
  }

  std::vector<CurvePoint> points;
  std::string axis = "theta";
  json params{{"target", o.target},       {"family", o.family},
              {"q", o.q},                 {"normalize", o.normalize},
              {"format", o.format},       {"seed", o.seed}};
  if (o.target == "gaussian-sum") {
    axis = "dx";
    const SumMode mode = parse_mode(o.mode);
    for (double dx : linspace(o.dx_min, o.dx_max, o.dx_steps)) {
      points.push_back({dx, gaussian_entropy_sum(GaussianPair(dx), o.q, mode)});
    }
    params["mode"] = o.mode;
    params["dx_min"] = o.dx_min;
    params["dx_max"] = o.dx_max;
    params["dx_steps"] = o.dx_steps;
  } else if (o.target == "fisher") {
    points = fisher_curve(o.q, linspace(o.theta_min, o.theta_max, o.theta_steps));
    params["theta_min"] = o.theta_min;
    params["theta_max"] = o.theta_max;
    params["theta_steps"] = o.theta_steps;
  } else {
    ScanConfig config;
    config.theta_min = o.theta_min;
    config.theta_max = o.theta_max;
    config.theta_steps = o.theta_steps;
    config.delta = o.delta;
    config.q = o.q;
    config.family = parse_family(o.family);
    config.target = parse_entropy_target(o.target);
    config.normalize = o.normalize;
    points = entropy_curve(config);
    params["delta"] = o.delta;
    params["theta_min"] = o.theta_min;
    params["theta_max"] = o.theta_max;
    params["theta_steps"] = o.theta_steps;
  }

  if (o.normalize && o.target != "joint" && o.target != "product-operational" &&
      o.target != "product-intrinsic") {
    std::vector<double> values;
    values.reserve(points.size());
    for (const CurvePoint& p : points) values.push_back(p.value);
    const NormalizedCurve normalized = normalize_curve(values);
    for (std::size_t i = 0; i < points.size(); ++i) points[i].value = normalized.values[i];
  }

  const json manifest = make_manifest("scan", params);
  if (o.format == "json") {
    json body = json_curve(axis, points);
    emit_report(std::move(body), manifest, o.output);
  } else if (o.format == "csv") {
    emit(csv_curve(axis, points), manifest, o.output);
  } else {
    throw std::invalid_argument("unknown format: " + o.format);
  }
  return kExitOk;
}

// ---------------------------------------------------------- critical-q ----

struct CriticalOptions {
  std::string target;
  std::string family = "tsallis";
  double delta = kQuarterPi;
  std::vector<double> bracket;
  std::string mode = "intrinsic";
  bool degrees = false;
  std::string output;
};

int run_critical(const CriticalOptions& opt) {
  CriticalOptions o = opt;
  if (o.degrees) o.delta *= kDegToRad;
  const EntropyFamily family = parse_family(o.family);

  RootResult result{};
  json params{{"target", o.target}, {"family", o.family}, {"delta", o.delta}};
  if (o.target == "gaussian-sum") {
    const SumMode mode = parse_mode(o.mode);
    result = gaussian_critical_q(mode);
    params["mode"] = o.mode;
  } else if (o.target == "difference") {
    result = difference_critical_q(o.delta, family);
  } else {
    double lo = 1.0;
    double hi = 2.0;
    if (o.target == "joint") {
      lo = 1.5;
      hi = 2.5;
    }
    if (o.bracket.size() == 2) {
      lo = o.bracket[0];
      hi = o.bracket[1];
    }
    result = critical_q(o.delta, family, parse_entropy_target(o.target), lo, hi);
    params["bracket"] = {lo, hi};
  }

  const json manifest = make_manifest("critical-q", params);
  json report{{"target", o.target},
              {"family", o.family},
              {"delta", o.delta},
              {"root", result.root},
              {"bracket", {result.bracket_lo, result.bracket_hi}},
              {"iterations", result.iterations},
              {"residual", result.residual}};
  if (o.target == "gaussian-sum") report["mode"] = o.mode;
  emit_report(std::move(report), manifest, o.output);
  return kExitOk;
}

// ---------------------------------------------------------- competition ----

struct CompetitionOptions {
  double q = 0.0;
  std::string target;
  std::string family = "tsallis";
  double delta = kQuarterPi;
  bool degrees = false;
  std::string output;
};

int run_competition(const CompetitionOptions& opt) {
  CompetitionOptions o = opt;
  if (o.degrees) o.delta *= kDegToRad;
  const CompetitionResult result =
      competition(o.q, o.delta, parse_family(o.family), parse_entropy_target(o.target));
  const json params{{"q", o.q}, {"target", o.target}, {"family", o.family}, {"delta", o.delta}};
  const json manifest = make_manifest("competition", params);
  emit_report(json{{"q", result.q},
                   {"target", o.target},
                   {"family", o.family},
                   {"delta", o.delta},
                   {"delta_t", result.delta_t},
                   {"winner", winner_name(result.winner)}},
              manifest, o.output);
  return kExitOk;
}

// ---------------------------------------------------------- mutual-info ----

struct MutualInfoOptions {
  double theta = 0.0;
  double q = 1.0;
  std::string family = "tsallis";
  double delta = kQuarterPi;
  bool degrees = false;
  bool q_given = false;
  std::string output;
};

int run_mutual_info(const MutualInfoOptions& opt) {
  MutualInfoOptions o = opt;
  if (o.degrees) {
    o.theta *= kDegToRad;
    o.delta *= kDegToRad;
  }
  o.q = resolve_order(o.family, o.q, o.q_given);
  const JointDistribution joint =
      joint_statistics(BlochState(1.0, o.theta), MeasurementSetup(o.delta));
  const double value = mutual_information(joint, parse_family(o.family), o.q);
  const json params{{"theta", o.theta}, {"q", o.q}, {"family", o.family}, {"delta", o.delta}};
  emit_report(json{{"theta", o.theta},
                   {"delta", o.delta},
                   {"q", o.q},
                   {"family", o.family},
                   {"value", value}},
              make_manifest("mutual-info", params), o.output);
  return kExitOk;
}

// --------------------------------------------------------------- fisher ----

struct FisherOptions {
  double q = 0.5;
  double theta_min = 0.01;
  double theta_max = kHalfPi - 0.01;
  int theta_steps = 1000;
  bool degrees = false;
  std::string output;
};

int run_fisher(const FisherOptions& opt) {
  FisherOptions o = opt;
  if (o.degrees) {
    o.theta_min *= kDegToRad;
    o.theta_max *= kDegToRad;
  }
  const std::vector<double> grid = linspace(o.theta_min, o.theta_max, o.theta_steps);
  const double step = grid[1] - grid[0];
  const auto curve = fisher_curve(o.q, grid);
  std::size_t imax = 0;
  std::size_t imin = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if (curve[i].value > curve[imax].value) imax = i;
    if (curve[i].value < curve[imin].value) imin = i;
  }
  std::string classification = "other";
  if (curve[imax].value - curve[imin].value < 1e-9) {
    classification = "constant";
  } else if (std::abs(curve[imax].theta - kQuarterPi) <= step) {
    classification = "maximum-at-intermediate";
  } else if (std::abs(curve[imin].theta - kQuarterPi) <= step) {
    classification = "minimum-at-intermediate";
  }
  const json params{{"q", o.q},
                    {"theta_min", o.theta_min},
                    {"theta_max", o.theta_max},
                    {"theta_steps", o.theta_steps}};
  emit_report(json{{"q", o.q},
                   {"argmax_theta", curve[imax].theta},
                   {"argmax_theta_refined", refine_extremum(curve, imax)},
                   {"argmin_theta", curve[imin].theta},
                   {"argmin_theta_refined", refine_extremum(curve, imin)},
                   {"max_value", curve[imax].value},
                   {"min_value", curve[imin].value},
                   {"classification", classification}},
              make_manifest("fisher", params), o.output);
  return kExitOk;
}

// ------------------------------------------------------------- gaussian ----

struct GaussianOptions {
  double dx = 1.0;
  double q = 2.0;
  std::string output;
};

int run_gaussian(const GaussianOptions& o) {
  const GaussianPair pair(o.dx);
  const json params{{"dx", o.dx}, {"q", o.q}};
  emit_report(json{{"dx", o.dx},
                   {"q", o.q},
                   {"tsallis_product", gaussian_tsallis_product(pair, o.q)},
                   {"renyi_product", gaussian_renyi_product(pair, o.q)},
                   {"operational_joint_tsallis", gaussian_operational_joint_tsallis(pair, o.q)},
                   {"intrinsic_sum", gaussian_entropy_sum(pair, o.q, SumMode::Intrinsic)},
                   {"operational_sum", gaussian_entropy_sum(pair, o.q, SumMode::Operational)}},
              make_manifest("gaussian", params), o.output);
  return kExitOk;
}

// --------------------------------------------------------- nonclassical ----

struct NonclassicalOptions {
  double theta = 0.0;
  double s = 1.0;
  bool degrees = false;
  std::string output;
};

int run_nonclassical(const NonclassicalOptions& opt) {
  NonclassicalOptions o = opt;
  if (o.degrees) o.theta *= kDegToRad;
  const BlochState state(o.s, o.theta);
  const QuasiDistribution quasi = infer_true_joint(state);
  json entries = json::array();
  for (double v : quasi.flat()) entries.push_back(v);
  const json params{{"theta", o.theta}, {"s", o.s}};
  emit_report(json{{"theta", o.theta},
                   {"s", o.s},
                   {"entries", entries},
                   {"min_entry", quasi.min_value()},
                   {"nonclassical", is_nonclassical(state)}},
              make_manifest("nonclassical", params), o.output);
  return kExitOk;
}

// --------------------------------------------------------------- verify ----

struct VerifyOptions {
  std::string check;
  int samples = 1000;
  int seed = 42;
  double delta = -1.0;
  bool delta_given = false;
  bool degrees = false;
};

struct CheckOutcome {
  bool pass;
  json line;
};

CheckOutcome check_coupling(const VerifyOptions& o) {
  if (o.delta_given && o.delta <= 0.0) {
    return {false,
            json{{"check", "coupling"},
                 {"status", "rejected"},
                 {"error", "coupling simulation is singular at delta = 0"}}};
  }
  std::vector<double> deltas;
  if (o.delta_given) {
    deltas.push_back(o.delta);
  } else {
    for (int j = 1; j <= 25; ++j) deltas.push_back(std::min(kHalfPi, kHalfPi * j / 25.0));
  }
  double worst = 0.0;
  for (double delta : deltas) {
    const MeasurementSetup setup(delta);
    for (int i = 0; i < 60; ++i) {
      const double theta = 2.0 * kPi * i / 60.0;
      const JointDistribution sim = simulate_coupling(BlochState(1.0, theta), setup);
      const JointDistribution closed = joint_statistics(BlochState(1.0, theta), setup);
      for (int x : {1, -1}) {
        for (int z : {1, -1}) worst = std::max(worst, std::abs(sim.at(x, z) - closed.at(x, z)));
      }
    }
  }
  const bool pass = worst < 1e-12;
  return {pass, json{{"check", "coupling"},
                     {"status", pass ? "pass" : "fail"},
                     {"max_error", worst},
                     {"tolerance", 1e-12}}};
}

CheckOutcome check_eq62(const VerifyOptions& o) {
  std::mt19937 rng(static_cast<unsigned>(o.seed));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int n = 0; n < o.samples; ++n) {
    const BlochState state(unit(rng), 2.0 * kPi * unit(rng));
    const MeasurementSetup setup(kHalfPi * unit(rng));
    const JointDistribution joint = joint_statistics(state, setup);
    const JointDistribution prod = operational_product(state, setup);
    const CorrelationDefect defect = correlation_defect(state, setup);
    for (int x : {1, -1}) {
      for (int z : {1, -1}) {
        worst = std::max(worst, std::abs(joint.at(x, z) - prod.at(x, z) - defect(x, z)));
      }
    }
  }
  const bool pass = worst < 1e-15;
  return {pass, json{{"check", "eq62"},
                     {"status", pass ? "pass" : "fail"},
                     {"samples", o.samples},
                     {"max_error", worst},
                     {"tolerance", 1e-15}}};
}

CheckOutcome check_apparatus(const VerifyOptions&) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double delta = std::min(kHalfPi, kHalfPi * i / 99.0);
    worst = std::max(worst, std::abs(2.0 * optimize_apparatus(delta) - (kHalfPi - delta)));
  }
  const bool pass = worst < 1e-8;
  return {pass, json{{"check", "appendix-a"},
                     {"status", pass ? "pass" : "fail"},
                     {"max_error", worst},
                     {"tolerance", 1e-8}}};
}

CheckOutcome check_inversion(const VerifyOptions&) {
  double worst = 0.0;
  for (double s : {0.4, 1.0}) {
    for (int i = 0; i < 40; ++i) {
      const double theta = 2.0 * kPi * i / 40.0;
      const BlochState state(s, theta);
      const QuasiDistribution closed = infer_true_joint(state);
      for (int j = 0; j < 15; ++j) {
        const double delta = 0.05 + (kHalfPi - 0.1) * j / 14.0;
        const MeasurementSetup setup(delta);
        const QuasiDistribution inverted =
            invert_joint_statistics(joint_statistics(state, setup), setup);
        for (int x : {1, -1}) {
          for (int z : {1, -1}) {
            worst = std::max(worst, std::abs(inverted.at(x, z) - closed.at(x, z)));
          }
        }
      }
    }
  }
  const bool pass = worst < 1e-10;
  return {pass, json{{"check", "appendix-b"},
                     {"status", pass ? "pass" : "fail"},
                     {"max_error", worst},
                     {"tolerance", 1e-10}}};
}

CheckOutcome check_pseudo_additivity(const VerifyOptions& o) {
  std::mt19937 rng(static_cast<unsigned>(o.seed));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> order(0.05, 4.0);
  double worst = 0.0;
  for (int n = 0; n < o.samples; ++n) {
    const double px0 = unit(rng);
    const double pz0 = unit(rng);
    const std::vector<double> px{px0, 1.0 - px0};
    const std::vector<double> pz{pz0, 1.0 - pz0};
    const std::vector<double> prod{px[0] * pz[0], px[0] * pz[1], px[1] * pz[0], px[1] * pz[1]};
    const double q = order(rng);
    worst = std::max(
        worst,
        std::abs(tsallis(prod, q) - tsallis_pseudo_additive(tsallis(px, q), tsallis(pz, q), q)));
    worst = std::max(worst, std::abs(renyi(prod, q) - (renyi(px, q) + renyi(pz, q))));
  }
  const bool pass = worst < 1e-12;
  return {pass, json{{"check", "pseudo-additivity"},
                     {"status", pass ? "pass" : "fail"},
                     {"samples", o.samples},
                     {"max_error", worst},
                     {"tolerance", 1e-12}}};
}

int run_verify(const VerifyOptions& opt) {
  VerifyOptions o = opt;
  if (o.degrees && o.delta_given) o.delta *= kDegToRad;
  using CheckFn = CheckOutcome (*)(const VerifyOptions&);
  const std::vector<std::pair<std::string, CheckFn>> all{
      {"coupling", check_coupling},
      {"eq62", check_eq62},
      {"appendix-a", check_apparatus},
      {"appendix-b", check_inversion},
      {"pseudo-additivity", check_pseudo_additivity},
  };
  std::vector<std::pair<std::string, CheckFn>> selected;
  if (o.check.empty()) {
    selected = all;
  } else {
    for (const auto& entry : all) {
      if (entry.first == o.check) selected.push_back(entry);
    }
    if (selected.empty()) {
      throw std::invalid_argument("unknown check: " + o.check);
    }
  }
  bool all_pass = true;
  for (const auto& [name, fn] : selected) {
    const CheckOutcome outcome = fn(o);
    std::cout << outcome.line.dump() << "\n";
    all_pass = all_pass && outcome.pass;
  }
  return all_pass ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic joint-uncertainty toolkit for qubit complementary observables"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  ScanOptions scan;
  auto* scan_cmd = app.add_subcommand("scan", "Scan an uncertainty measure over a grid");
  scan_cmd->add_option("--target", scan.target, "joint|product-operational|product-intrinsic|fisher|gaussian-sum")
      ->required();
  scan_cmd->add_option("--family", scan.family, "tsallis|renyi|shannon");
  auto* scan_q = scan_cmd->add_option("--q", scan.q, "entropy order");
  scan_cmd->add_option("--delta", scan.delta, "overlap angle (radians)");
  auto* scan_tmin = scan_cmd->add_option("--theta-min", scan.theta_min, "grid start");
  scan_cmd->add_option("--theta-max", scan.theta_max, "grid end");
  scan_cmd->add_option("--theta-steps", scan.theta_steps, "grid points (default 1000)");
  scan_cmd->add_option("--dx-min", scan.dx_min, "gaussian grid start");
  scan_cmd->add_option("--dx-max", scan.dx_max, "gaussian grid end");
  scan_cmd->add_option("--dx-steps", scan.dx_steps, "gaussian grid points");
  scan_cmd->add_option("--mode", scan.mode, "intrinsic|operational (gaussian-sum)");
  scan_cmd->add_flag("--normalize", scan.normalize, "rescale the curve to [0, 1]");
  scan_cmd->add_flag("--deg", scan.degrees, "angles are given in degrees");
  scan_cmd->add_option("--format", scan.format, "csv|json");
  scan_cmd->add_option("--output", scan.output, "output path (default stdout)");
  scan_cmd->add_option("--seed", scan.seed, "seed recorded in the manifest");
  scan_cmd->callback([&] {
    scan.q_given = scan_q->count() > 0;
    scan.theta_range_given = scan_tmin->count() > 0;
    exit_code = run_guarded([&] { return run_scan(scan); });
  });

  CriticalOptions critical;
  auto* critical_cmd = app.add_subcommand("critical-q", "Locate a critical entropy order");
  critical_cmd
      ->add_option("--target", critical.target,
                   "product-intrinsic|product-operational|joint|difference|gaussian-sum")
      ->required();
  critical_cmd->add_option("--family", critical.family, "tsallis|renyi");
  critical_cmd->add_option("--delta", critical.delta, "overlap angle (radians)");
  critical_cmd->add_option("--bracket", critical.bracket, "bisection bracket")->expected(2);
  critical_cmd->add_option("--mode", critical.mode, "intrinsic|operational (gaussian-sum)");
  critical_cmd->add_flag("--deg", critical.degrees, "angles are given in degrees");
  critical_cmd->add_option("--output", critical.output, "output path (default stdout)");
  critical_cmd->callback([&] { exit_code = run_guarded([&] { return run_critical(critical); }); });

  CompetitionOptions comp;
  auto* comp_cmd = app.add_subcommand("competition", "Extreme-vs-intermediate competition value");
  comp_cmd->add_option("--q", comp.q, "entropy order")->required();
  comp_cmd->add_option("--target", comp.target, "joint|product-operational|product-intrinsic")
      ->required();
  comp_cmd->add_option("--family", comp.family, "tsallis|renyi");
  comp_cmd->add_option("--delta", comp.delta, "overlap angle (radians)");
  comp_cmd->add_flag("--deg", comp.degrees, "angles are given in degrees");
  comp_cmd->add_option("--output", comp.output, "output path (default stdout)");
  comp_cmd->callback([&] { exit_code = run_guarded([&] { return run_competition(comp); }); });

  MutualInfoOptions mi;
  auto* mi_cmd = app.add_subcommand("mutual-info", "Generalized mutual information");
  mi_cmd->add_option("--theta", mi.theta, "state angle (radians)")->required();
  auto* mi_q = mi_cmd->add_option("--q", mi.q, "entropy order")->required();
  mi_cmd->add_option("--family", mi.family, "tsallis|renyi|shannon");
  mi_cmd->add_option("--delta", mi.delta, "overlap angle (radians)");
  mi_cmd->add_flag("--deg", mi.degrees, "angles are given in degrees");
  mi_cmd->add_option("--output", mi.output, "output path (default stdout)");
  mi_cmd->callback([&] {
    mi.q_given = mi_q->count() > 0;
    exit_code = run_guarded([&] { return run_mutual_info(mi); });
  });

  FisherOptions fisher;
  auto* fisher_cmd = app.add_subcommand("fisher", "Classify the generalized Fisher information");
  fisher_cmd->add_option("--q", fisher.q, "entropy order")->required();
  fisher_cmd->add_option("--theta-min", fisher.theta_min, "grid start");
  fisher_cmd->add_option("--theta-max", fisher.theta_max, "grid end");
  fisher_cmd->add_option("--theta-steps", fisher.theta_steps, "grid points");
  fisher_cmd->add_flag("--deg", fisher.degrees, "angles are given in degrees");
  fisher_cmd->add_option("--output", fisher.output, "output path (default stdout)");
  fisher_cmd->callback([&] { exit_code = run_guarded([&] { return run_fisher(fisher); }); });

  GaussianOptions gaussian;
  auto* gaussian_cmd = app.add_subcommand("gaussian", "Gaussian quadrature-pair entropies");
  gaussian_cmd->add_option("--dx", gaussian.dx, "quadrature width (dy = 1/dx)");
  gaussian_cmd->add_option("--q", gaussian.q, "entropy order")->required();
  gaussian_cmd->add_option("--output", gaussian.output, "output path (default stdout)");
  gaussian_cmd->callback([&] { exit_code = run_guarded([&] { return run_gaussian(gaussian); }); });

  NonclassicalOptions nonclassical;
  auto* nc_cmd = app.add_subcommand("nonclassical", "Noise-inverted joint distribution report");
  nc_cmd->add_option("--theta", nonclassical.theta, "state angle (radians)")->required();
  nc_cmd->add_option("--s", nonclassical.s, "Bloch vector length");
  nc_cmd->add_flag("--deg", nonclassical.degrees, "angles are given in degrees");
  nc_cmd->add_option("--output", nonclassical.output, "output path (default stdout)");
  nc_cmd->callback(
      [&] { exit_code = run_guarded([&] { return run_nonclassical(nonclassical); }); });

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle-equivalence checks");
  verify_cmd->add_option("--check", verify.check,
                         "coupling|eq62|appendix-a|appendix-b|pseudo-additivity");
  verify_cmd->add_option("--samples", verify.samples, "sample count for randomized checks");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  auto* verify_delta = verify_cmd->add_option("--delta", verify.delta, "restrict coupling check");
  verify_cmd->add_flag("--deg", verify.degrees, "angles are given in degrees");
  verify_cmd->callback([&] {
    verify.delta_given = verify_delta->count() > 0;
    exit_code = run_guarded([&] { return run_verify(verify); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return exit_code;
}
