// End-to-end exercises of the gk binary: exit-code contract, report
// round-trips, determinism.  argv[1] is the path to the binary.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gk/io.hpp"

namespace {

int checks = 0;
int failures = 0;

void expect(bool cond, const std::string& what) {
  ++checks;
  if (!cond) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

std::string g_bin;
std::string g_dir;

int run(const std::string& args) {
  const std::string cmd = g_bin + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <gk binary>\n";
    return 2;
  }
  g_bin = argv[1];
  g_dir = "/tmp/gk_cli_test_" + std::to_string(::getpid());
  if (std::system(("mkdir -p " + g_dir).c_str()) != 0) return 2;

  const std::string chsh = g_dir + "/chsh.json";
  write_file(chsh, R"({"m":2,"n":2,"field":"real","entries":[1,1,1,-1]})");
  const std::string cplx = g_dir + "/cid.json";
  write_file(cplx, R"({"m":2,"n":2,"field":"complex","entries":[[1,0],[0,0],[0,0],[1,0]]})");
  const std::string broken = g_dir + "/broken.json";
  write_file(broken, "{\"m\":2");

  // --- exit code 0 paths ---------------------------------------------------
  const std::string creport = g_dir + "/constants.json";
  expect(run("constants --no-timestamp --out " + creport) == 0,
         "constants exits 0");
  {
    const auto doc = nlohmann::json::parse(slurp(creport));
    gk::io::validate_report(doc);
    expect(std::abs(doc["k_real"].get<double>() - 1.7822139) < 1e-6,
           "constants k_real value");
    expect(std::abs(doc["k_complex"].get<double>() - 1.40491) < 1e-5,
           "constants k_complex value");
    expect(!doc.contains("timestamp"), "--no-timestamp omits the field");
  }

  const std::string sreport = g_dir + "/solve.json";
  expect(run("solve --input " + chsh + " --mode both --no-timestamp --out " +
             sreport) == 0,
         "solve exits 0");
  {
    const auto doc = nlohmann::json::parse(slurp(sreport));
    gk::io::validate_report(doc);
    expect(std::abs(doc["ratio"].get<double>() - std::sqrt(2.0)) < 1e-6,
           "CHSH ratio is sqrt 2");
    expect(doc["ratio_within_bound"].get<bool>(), "ratio within K bound");
  }

  const std::string one = g_dir + "/one.json";
  write_file(one, R"({"m":1,"n":1,"field":"real","entries":[1]})");
  const std::string oreport = g_dir + "/one_solve.json";
  expect(run("solve --input " + one + " --mode both --no-timestamp --out " +
             oreport) == 0,
         "1x1 solve exits 0");
  {
    const auto doc = nlohmann::json::parse(slurp(oreport));
    expect(std::abs(doc["ratio"].get<double>() - 1.0) < 1e-9, "1x1 ratio is 1");
  }

  const std::string rreport = g_dir + "/round.json";
  expect(run("round --input " + chsh +
             " --scheme krivine --samples 50000 --no-timestamp --out " +
             rreport) == 0,
         "round exits 0");
  {
    const auto doc = nlohmann::json::parse(slurp(rreport));
    gk::io::validate_report(doc);
    expect(doc["expectation_within_5sigma"].get<bool>(), "5 sigma check");
  }

  expect(run("round --input " + cplx +
             " --scheme haagerup --samples 50000 --no-timestamp --out " +
             g_dir + "/round2.json") == 0,
         "haagerup round on complex instance exits 0");

  // field promotion: real entries solved as a complex instance
  expect(run("solve --input " + chsh +
             " --field complex --mode relaxation --no-timestamp --out " +
             g_dir + "/promoted.json") == 0,
         "field promotion exits 0");

  const std::string vreport = g_dir + "/verify.json";
  expect(run("verify coeffs --kmax 12 --no-timestamp --out " + vreport) == 0,
         "verify coeffs exits 0");
  {
    const auto doc = nlohmann::json::parse(slurp(vreport));
    gk::io::validate_report(doc);
    expect(doc["passed"].get<bool>(), "coeffs suite passes");
  }

  const std::string curves = g_dir + "/curves.csv";
  expect(run("curves --grid 0:4:0 --out " + curves) == 0,
         "header-only curves exits 0");
  expect(slurp(curves) == "x,h,h_inv,h1,h2,theta\n", "header-only content");
  expect(run("curves --grid 1:1.4142135623730951:2 --out " + curves) == 0,
         "two-point curves exits 0");
  {
    const std::string csv = slurp(curves);
    expect(csv.find("\n1,1,") != std::string::npos, "h(1) = 1 column");
    expect(csv.find("1.35064388") != std::string::npos,
           "h1 at sqrt 2 in the table");
  }

  // --- exit code 1 paths ---------------------------------------------------
  expect(run("solve --input " + g_dir + "/missing.json --mode both") == 1,
         "missing input exits 1");
  expect(run("solve --input " + broken + " --mode both") == 1,
         "malformed JSON exits 1");
  expect(run("solve --input " + chsh + " --mode sideways") == 1,
         "unknown mode exits 1");
  expect(run("round --input " + cplx + " --scheme krivine") == 1,
         "scheme/field mismatch exits 1");
  expect(run("verify bogus") == 1, "unknown verify target exits 1");
  expect(run("curves --grid nope --out " + curves) == 1, "bad grid exits 1");
  expect(run("constants --out /nonexistent-dir/x.json") == 1,
         "unwritable output exits 1");
  expect(run("definitely-not-a-subcommand") == 1, "unknown subcommand exits 1");
  {
    std::string wide = R"({"m":1,"n":31,"field":"real","entries":[)";
    for (int i = 0; i < 31; ++i) wide += i ? ",1" : "1";
    wide += "]}";
    const std::string wide_path = g_dir + "/wide.json";
    write_file(wide_path, wide);
    expect(run("solve --input " + wide_path + " --mode discrete") == 1,
           "enumeration budget exceeded exits 1");
  }

  // --- exit code 2 paths ---------------------------------------------------
  // with only 1000 midpoint panels the phase identity misses 1e-10
  expect(run("verify phase --samples 1000 --no-timestamp") == 2,
         "failed verification exits 2");

  // --- determinism ----------------------------------------------------------
  const std::string d1 = g_dir + "/d1.json", d2 = g_dir + "/d2.json";
  expect(run("verify coeffs --kmax 12 --seed 9 --no-timestamp --out " + d1) == 0,
         "determinism run 1");
  expect(run("verify coeffs --kmax 12 --seed 9 --no-timestamp --out " + d2) == 0,
         "determinism run 2");
  expect(slurp(d1) == slurp(d2), "byte-identical verify reports");

  const std::string r1 = g_dir + "/r1.json", r2 = g_dir + "/r2.json";
  expect(run("round --input " + chsh +
             " --scheme krivine --samples 40000 --seed 3 --no-timestamp "
             "--threads 1 --out " + r1) == 0,
         "round determinism run 1");
  expect(run("round --input " + chsh +
             " --scheme krivine --samples 40000 --seed 3 --no-timestamp "
             "--threads 2 --out " + r2) == 0,
         "round determinism run 2");
  // identical up to the echoed threads value in the config block
  auto strip_threads = [](std::string s) {
    const auto pos = s.find("\"threads\"");
    if (pos != std::string::npos) s.erase(pos, s.find('\n', pos) - pos);
    return s;
  };
  expect(strip_threads(slurp(r1)) == strip_threads(slurp(r2)),
         "thread count does not change the numbers");

  // GK_THREADS env var overrides --threads
  const std::string e1 = g_dir + "/e1.json";
  const std::string env_cmd = "GK_THREADS=1 " + g_bin + " round --input " +
                              chsh +
                              " --scheme krivine --samples 40000 --seed 3 "
                              "--no-timestamp --threads 7 --out " +
                              e1 + " >/dev/null 2>&1";
  expect(WEXITSTATUS(std::system(env_cmd.c_str())) == 0, "GK_THREADS accepted");
  expect(slurp(e1) == slurp(r1), "GK_THREADS=1 matches --threads 1");

  (void)!std::system(("rm -rf " + g_dir).c_str());
  std::printf("test_cli: %d checks, %d failures\n", checks, failures);
  return failures == 0 ? 0 : 1;
}
