// End-to-end checks of the command-line tool: exit codes, CSV/JSON shapes,
// manifest round-trips and byte-level determinism. The tool path arrives as
// argv[1].

#include <sys/wait.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

int failures = 0;

#define EXPECT(cond)                                                           \
  do {                                                                         \
    if (!(cond)) {                                                             \
      ++failures;                                                              \
      std::fprintf(stderr, "FAILED %s:%d: %s\n", __FILE__, __LINE__, #cond);   \
    }                                                                          \
  } while (0)

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string g_tool;
std::string g_dir;
int g_counter = 0;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = g_dir + "/stdout." + std::to_string(g_counter);
  const std::string err_path = g_dir + "/stderr." + std::to_string(g_counter);
  ++g_counter;
  const std::string cmd = "'" + g_tool + "' " + args + " > '" + out_path + "' 2> '" + err_path + "'";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out_path), slurp(err_path)};
}

struct Row {
  double x;
  double value;
  std::string x_token;
  std::string value_token;
};

std::vector<Row> parse_csv(const std::string& body, const std::string& expected_header) {
  std::vector<Row> rows;
  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line) || line != expected_header) {
    ++failures;
    std::fprintf(stderr, "FAILED: bad CSV header '%s'\n", line.c_str());
    return rows;
  }
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) continue;
    Row row;
    row.x_token = line.substr(0, comma);
    row.value_token = line.substr(comma + 1);
    row.x = std::stod(row.x_token);
    row.value = std::stod(row.value_token);
    rows.push_back(row);
  }
  return rows;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

constexpr double kQuarterPi = 0.25 * std::numbers::pi;

void test_scan_joint() {
  const RunResult r = run(
      "scan --target joint --family tsallis --q 0.5 --delta 0.7853981633974483 --normalize");
  EXPECT(r.exit_code == 0);
  const auto rows = parse_csv(r.out, "theta,value");
  EXPECT(rows.size() == 1000);
  if (rows.size() != 1000) return;
  std::size_t imin = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].value < rows[imin].value) imin = i;
  }
  EXPECT(rows[imin].value == 0.0);
  const double step = rows[1].x - rows[0].x;
  EXPECT(std::abs(rows[imin].x - kQuarterPi) <= step);
  // Values parse back to full precision.
  for (std::size_t i = 0; i < rows.size(); i += 97) {
    EXPECT(format_double(rows[i].value) == rows[i].value_token);
    EXPECT(format_double(rows[i].x) == rows[i].x_token);
  }
  // Manifest accompanies stdout output on stderr.
  const json manifest = json::parse(r.err);
  EXPECT(manifest.at("command") == "scan");
  EXPECT(manifest.at("parameters").at("q").get<double>() == 0.5);
}

void test_scan_determinism_and_manifest() {
  const std::string first = g_dir + "/scan-a.csv";
  const std::string second = g_dir + "/scan-b.csv";
  const std::string flags =
      "scan --target product-operational --family renyi --q 1.7 --delta 0.61 --theta-steps 200";
  EXPECT(run(flags + " --output '" + first + "'").exit_code == 0);
  EXPECT(run(flags + " --output '" + second + "'").exit_code == 0);
  const std::string body_a = slurp(first);
  EXPECT(!body_a.empty());
  EXPECT(body_a == slurp(second));

  const json manifest = json::parse(slurp(first + ".manifest.json"));
  EXPECT(manifest.at("command") == "scan");
  EXPECT(manifest.at("parameters").at("q").get<double>() == 1.7);
  EXPECT(manifest.at("parameters").at("delta").get<double>() == 0.61);
  EXPECT(manifest.at("parameters").at("theta_steps").get<int>() == 200);
  EXPECT(manifest.at("parameters").at("family") == "renyi");
  EXPECT(manifest.contains("generated_at"));
  EXPECT(manifest.at("version").is_string());

  // JSON reports are byte-identical across reruns as well.
  const std::string report_a = g_dir + "/crit-a.json";
  const std::string report_b = g_dir + "/crit-b.json";
  EXPECT(run("critical-q --target joint --bracket 1.5 2.5 --output '" + report_a + "'").exit_code ==
         0);
  EXPECT(run("critical-q --target joint --bracket 1.5 2.5 --output '" + report_b + "'").exit_code ==
         0);
  const std::string report_body = slurp(report_a);
  EXPECT(!report_body.empty());
  EXPECT(report_body == slurp(report_b));
}

void test_scan_fisher_constant() {
  const RunResult r = run("scan --target fisher --q 0.5");
  EXPECT(r.exit_code == 0);
  const auto rows = parse_csv(r.out, "theta,value");
  EXPECT(rows.size() == 1000);
  for (const Row& row : rows) {
    EXPECT(std::abs(row.value - 4.0) < 1e-9);
  }
}

void test_scan_gaussian_sum() {
  const RunResult r = run("scan --target gaussian-sum --mode intrinsic --q 2 --dx-steps 800");
  EXPECT(r.exit_code == 0);
  const auto rows = parse_csv(r.out, "dx,value");
  EXPECT(rows.size() == 800);
  if (rows.empty()) return;
  std::size_t imax = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].value > rows[imax].value) imax = i;
  }
  const double step = rows[1].x - rows[0].x;
  EXPECT(std::abs(rows[imax].x - 1.0) <= step);
}

void test_scan_json_format() {
  const RunResult r = run("scan --target joint --q 2 --theta-steps 50 --format json");
  EXPECT(r.exit_code == 0);
  const json body = json::parse(r.out);
  EXPECT(body.at("rows").size() == 50);
  EXPECT(body.at("columns")[0] == "theta");
  EXPECT(body.at("manifest").at("parameters").at("theta_steps").get<int>() == 50);
}

void test_critical_q() {
  const RunResult intrinsic = run("critical-q --target product-intrinsic");
  EXPECT(intrinsic.exit_code == 0);
  const json a = json::parse(intrinsic.out);
  EXPECT(std::abs(a.at("root").get<double>() - 1.4313) < 5e-4);
  EXPECT(a.at("iterations").get<int>() > 0);

  const RunResult operational = run("critical-q --target product-operational");
  EXPECT(operational.exit_code == 0);
  EXPECT(std::abs(json::parse(operational.out).at("root").get<double>() - 1.3439) < 5e-4);

  const RunResult joint = run("critical-q --target joint --bracket 1.5 2.5");
  EXPECT(joint.exit_code == 0);
  EXPECT(std::abs(json::parse(joint.out).at("root").get<double>() - 2.0) < 1e-8);

  const RunResult difference = run("critical-q --target difference");
  EXPECT(difference.exit_code == 0);
  EXPECT(std::abs(json::parse(difference.out).at("root").get<double>() - 1.60) < 0.01);

  const RunResult gaussian = run("critical-q --target gaussian-sum --mode operational");
  EXPECT(gaussian.exit_code == 0);
  EXPECT(std::abs(json::parse(gaussian.out).at("root").get<double>() - 3.0) < 1e-3);

  // Bracket without a sign change: structured numerical error, exit 3.
  const RunResult bad = run("critical-q --target joint --bracket 3.5 5.5");
  EXPECT(bad.exit_code == 3);
  EXPECT(json::parse(bad.out).contains("error"));
}

void test_competition_and_mutual_info() {
  const RunResult comp = run("competition --q 2.5 --target joint");
  EXPECT(comp.exit_code == 0);
  const json c = json::parse(comp.out);
  EXPECT(c.at("winner") == "extreme-min");
  EXPECT(c.at("delta_t").get<double>() > 0.0);

  const RunResult tie = run("competition --q 2 --target joint");
  EXPECT(json::parse(tie.out).at("winner") == "tie");

  const RunResult mi = run("mutual-info --theta 0.7853981633974483 --q 2");
  EXPECT(mi.exit_code == 0);
  EXPECT(std::abs(json::parse(mi.out).at("value").get<double>() - 1.0 / 9.0) < 1e-12);

  const RunResult shannon = run("mutual-info --theta 0.6 --q 1 --family shannon");
  EXPECT(shannon.exit_code == 0);
  EXPECT(json::parse(shannon.out).at("value").get<double>() >= 0.0);
}

void test_fisher_and_gaussian_reports() {
  const RunResult high = run("fisher --q 2");
  EXPECT(high.exit_code == 0);
  EXPECT(json::parse(high.out).at("classification") == "maximum-at-intermediate");

  const RunResult low = run("fisher --q 0.25");
  EXPECT(json::parse(low.out).at("classification") == "minimum-at-intermediate");

  const RunResult standard = run("fisher --q 0.5");
  EXPECT(json::parse(standard.out).at("classification") == "constant");

  const RunResult gaussian = run("gaussian --q 2 --dx 1");
  EXPECT(gaussian.exit_code == 0);
  const json g = json::parse(gaussian.out);
  EXPECT(std::abs(g.at("tsallis_product").get<double>() - 0.9204225284540524) < 1e-12);
  EXPECT(std::abs(g.at("operational_joint_tsallis").get<double>() - 0.9602112642270262) < 1e-12);
  EXPECT(std::abs(g.at("intrinsic_sum").get<double>()) < 1e-14);
}

void test_nonclassical() {
  const RunResult intermediate = run("nonclassical --theta 0.7853981633974483");
  EXPECT(intermediate.exit_code == 0);
  const json a = json::parse(intermediate.out);
  EXPECT(a.at("nonclassical").get<bool>());
  EXPECT(std::abs(a.at("min_entry").get<double>() - (1.0 - std::sqrt(2.0)) / 4.0) < 1e-12);

  const json b = json::parse(run("nonclassical --theta 0").out);
  EXPECT(!b.at("nonclassical").get<bool>());
  EXPECT(std::abs(b.at("min_entry").get<double>()) < 1e-15);

  const json c = json::parse(run("nonclassical --theta 0.3 --s 0.5").out);
  EXPECT(!c.at("nonclassical").get<bool>());

  // Degrees flag converts the angle.
  const json d = json::parse(run("nonclassical --theta 45 --deg").out);
  EXPECT(d.at("nonclassical").get<bool>());
  EXPECT(std::abs(d.at("min_entry").get<double>() - (1.0 - std::sqrt(2.0)) / 4.0) < 1e-9);
}

void test_verify() {
  const RunResult all = run("verify");
  EXPECT(all.exit_code == 0);
  std::istringstream lines(all.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const json entry = json::parse(line);
    EXPECT(entry.at("status") == "pass");
    ++count;
  }
  EXPECT(count == 5);

  const RunResult eq62 = run("verify --check eq62 --samples 1000 --seed 42");
  EXPECT(eq62.exit_code == 0);
  const json e = json::parse(eq62.out);
  EXPECT(e.at("max_error").get<double>() < 1e-15);

  const RunResult rejected = run("verify --check coupling --delta 0.0");
  EXPECT(rejected.exit_code == 3);
  EXPECT(json::parse(rejected.out).at("status") == "rejected");
}

void test_usage_errors() {
  EXPECT(run("scan --target bogus").exit_code == 2);
  EXPECT(run("").exit_code == 2);
  EXPECT(run("scan").exit_code == 2);
  EXPECT(run("verify --check bogus").exit_code == 2);
  EXPECT(run("scan --target joint --q -1").exit_code == 2);
  EXPECT(run("nonclassical --theta 0.3 --s 1.5").exit_code == 2);
  EXPECT(run("--help").exit_code == 0);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-tool>\n");
    return 1;
  }
  g_tool = argv[1];
  char tmpl[] = "/tmp/quncert-cli-XXXXXX";
  if (!mkdtemp(tmpl)) {
    std::fprintf(stderr, "cannot create temp dir\n");
    return 1;
  }
  g_dir = tmpl;

  test_scan_joint();
  test_scan_determinism_and_manifest();
  test_scan_fisher_constant();
  test_scan_gaussian_sum();
  test_scan_json_format();
  test_critical_q();
  test_competition_and_mutual_info();
  test_fisher_and_gaussian_reports();
  test_nonclassical();
  test_verify();
  test_usage_errors();

  if (failures == 0) {
    std::printf("cli tests passed\n");
  } else {
    std::printf("cli tests: %d failures\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
