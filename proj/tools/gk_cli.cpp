// Command-line front end for the Grothendieck toolkit.  All computation goes
// through the C API in grothendieck.h; this file only parses arguments,
// moves bytes between files and the library, and maps outcomes to the exit
// code contract: 0 success, 1 usage/IO error, 2 verification failure.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "grothendieck.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

struct ConfigDeleter {
  void operator()(gk_config* c) const { gk_config_free(c); }
};
struct InstanceDeleter {
  void operator()(gk_instance* i) const { gk_instance_free(i); }
};
struct ResultDeleter {
  void operator()(gk_result* r) const { gk_result_free(r); }
};

using ConfigPtr = std::unique_ptr<gk_config, ConfigDeleter>;
using InstancePtr = std::unique_ptr<gk_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<gk_result, ResultDeleter>;

struct Options {
  std::string input;
  std::string out;
  std::string field;
  std::string scheme = "krivine";
  std::string mode = "both";
  std::uint64_t seed = 42;
  std::int64_t samples = 100000;
  int starts = 16;
  int series_order = 256;
  int kmax = 17;
  int threads = 0;
  bool no_timestamp = false;
  std::string grid = "0:4:401";
};

int complain(const std::string& msg) {
  std::cerr << "gk: " << msg << "\n";
  return kExitUsage;
}

int complain_status(const char* what) {
  std::cerr << "gk: " << what << ": " << gk_last_error() << "\n";
  return kExitUsage;
}

bool read_file(const std::string& path, std::string& out_text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out_text = ss.str();
  return in.good() || in.eof();
}

// Reports go to --out when given, stdout otherwise.
int emit(const Options& opt, const gk_result* res) {
  const char* text = gk_result_text(res);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(opt.out, std::ios::binary);
    if (!os) return complain("cannot open output path: " + opt.out);
    os << text;
    if (!os.good()) return complain("write failed: " + opt.out);
  }
  return gk_result_ok(res) ? kExitOk : kExitVerify;
}

ConfigPtr build_config(const Options& opt) {
  ConfigPtr cfg(gk_config_new());
  gk_config_set_seed(cfg.get(), opt.seed);
  gk_config_set_samples(cfg.get(), opt.samples);
  gk_config_set_starts(cfg.get(), opt.starts);
  gk_config_set_series_order(cfg.get(), opt.series_order);
  gk_config_set_kmax(cfg.get(), opt.kmax);
  int threads = opt.threads;
  if (const char* env = std::getenv("GK_THREADS")) {
    // Environment overrides the flag so wrapper scripts can pin workers.
    threads = std::atoi(env);
    if (threads < 0) threads = 0;
  }
  gk_config_set_threads(cfg.get(), threads);
  gk_config_set_timestamp(cfg.get(), opt.no_timestamp ? 0 : 1);
  return cfg;
}

int load_instance(const Options& opt, InstancePtr& inst) {
  if (opt.input.empty()) return complain("--input is required");
  std::string text;
  if (!read_file(opt.input, text))
    return complain("cannot read input: " + opt.input);
  gk_instance* raw = nullptr;
  if (gk_instance_from_json(text.c_str(), &raw) != GK_OK)
    return complain_status("invalid instance");
  inst.reset(raw);
  if (!opt.field.empty() &&
      gk_instance_set_field(inst.get(), opt.field.c_str()) != GK_OK)
    return complain_status("field promotion failed");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck inequality toolkit: solvers, randomized "
               "rounding, and numerical verification"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
    cmd->add_option("--seed", opt.seed, "RNG seed (default 42)");
    cmd->add_option("--samples", opt.samples, "Monte Carlo samples")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--starts", opt.starts, "multistart count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--series-order", opt.series_order,
                    "truncation order for the odd series")
        ->check(CLI::Range(1, 4096));
    cmd->add_option("--kmax", opt.kmax, "largest coefficient index to certify")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--threads", opt.threads,
                    "worker threads, 0 = auto (GK_THREADS overrides)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--no-timestamp", opt.no_timestamp,
                  "omit the timestamp field for byte-stable reports");
  };

  CLI::App* c_const = app.add_subcommand("constants",
                                         "compute every named constant with residuals");
  add_common(c_const);

  CLI::App* c_solve = app.add_subcommand("solve",
                                         "discrete and unit-vector optimizers");
  add_common(c_solve);
  c_solve->add_option("--input", opt.input, "instance JSON path")->required();
  c_solve->add_option("--field", opt.field, "override field: real|complex");
  c_solve->add_option("--mode", opt.mode, "discrete|relaxation|both");

  CLI::App* c_round = app.add_subcommand("round",
                                         "embed, factor, and Gaussian-sign round");
  add_common(c_round);
  c_round->add_option("--input", opt.input, "instance JSON path")->required();
  c_round->add_option("--field", opt.field, "override field: real|complex");
  c_round->add_option("--scheme", opt.scheme, "krivine|haagerup");

  CLI::App* c_verify = app.add_subcommand("verify",
                                          "run a named verification suite");
  add_common(c_verify);
  std::string target = "all";
  c_verify->add_option("target", target,
                       "lemma21|phase|corollary|section5|coeffs|all");

  CLI::App* c_curves = app.add_subcommand("curves",
                                          "tabulate h, its inverse, and the "
                                          "boundary curve as CSV");
  add_common(c_curves);
  c_curves->add_option("--grid", opt.grid, "start:stop:count (default 0:4:401)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;  // --help is a success
  }

  const ConfigPtr cfg = build_config(opt);
  gk_result* raw = nullptr;

  if (app.got_subcommand(c_const)) {
    if (gk_constants(cfg.get(), &raw) != GK_OK)
      return complain_status("constants failed");
  } else if (app.got_subcommand(c_solve)) {
    InstancePtr inst;
    const int rc = load_instance(opt, inst);
    if (rc != kExitOk) return rc;
    if (gk_solve(inst.get(), opt.mode.c_str(), cfg.get(), &raw) != GK_OK)
      return complain_status("solve failed");
  } else if (app.got_subcommand(c_round)) {
    InstancePtr inst;
    const int rc = load_instance(opt, inst);
    if (rc != kExitOk) return rc;
    if (gk_round(inst.get(), opt.scheme.c_str(), cfg.get(), &raw) != GK_OK)
      return complain_status("round failed");
  } else if (app.got_subcommand(c_verify)) {
    if (gk_verify(target.c_str(), cfg.get(), &raw) != GK_OK)
      return complain_status("verify failed");
  } else if (app.got_subcommand(c_curves)) {
    if (gk_curves(opt.grid.c_str(), cfg.get(), &raw) != GK_OK)
      return complain_status("curves failed");
  }

  const ResultPtr res(raw);
  return emit(opt, res.get());
}
