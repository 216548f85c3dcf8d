#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "gk/rounding.hpp"
#include "gk/types.hpp"

namespace gk::verify {

struct RunConfig {
  std::uint64_t seed = 42;
  std::int64_t samples = 100000;
  int starts = 16;
  int series_order = 256;
  int kmax = 17;
  int threads = 0;
  int iters = 20000;
  bool timestamp = true;
};

nlohmann::json config_to_json(const RunConfig& cfg);

// Report builders; every report carries kind, config, passed, and (unless
// disabled) a timestamp.  `passed` drives the CLI's exit-code contract.
nlohmann::json constants_report_json(const RunConfig& cfg);
nlohmann::json solve_report_json(const ProblemInstance& inst,
                                 const std::string& mode, const RunConfig& cfg);
nlohmann::json round_report_json(const ProblemInstance& inst,
                                 rounding::Scheme scheme, const RunConfig& cfg);

// target: lemma21 | phase | corollary | section5 | coeffs | all
nlohmann::json verify_report_json(const std::string& target,
                                  const RunConfig& cfg);

// CSV with header x,h,h_inv,h1,h2,theta; h and h_inv fill for x <= 1, the
// curve columns for x >= 1, blanks elsewhere; 12 significant digits.
std::string curves_csv(double start, double stop, int count,
                       const RunConfig& cfg);

}  // namespace gk::verify
