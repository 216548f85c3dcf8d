#include "grothendieck.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "gk/io.hpp"
#include "gk/solver.hpp"
#include "gk/types.hpp"
#include "gk/verify.hpp"

struct gk_config {
  gk::verify::RunConfig cfg;
};

struct gk_instance {
  gk::ProblemInstance inst;
};

struct gk_result {
  std::string text;
  bool ok = true;
};

namespace {

thread_local std::string t_last_error;

gk_status fail(gk_status code, const char* what) {
  t_last_error = what != nullptr ? what : "unknown error";
  return code;
}

template <typename Fn>
gk_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const gk::solver::BudgetError& e) {
    return fail(GK_ERR_BUDGET, e.what());
  } catch (const std::domain_error& e) {
    return fail(GK_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GK_ERR_INTERNAL, "unknown exception");
  }
}

gk_status make_result(gk_result** out, std::string text, bool ok) {
  if (out == nullptr)
    return fail(GK_ERR_INVALID_ARGUMENT, "null result out-parameter");
  auto* res = new (std::nothrow) gk_result{std::move(text), ok};
  if (res == nullptr) return fail(GK_ERR_INTERNAL, "allocation failed");
  *out = res;
  t_last_error.clear();
  return GK_OK;
}

gk_status make_json_result(gk_result** out, const nlohmann::json& doc) {
  return make_result(out, doc.dump(2) + "\n", doc.at("passed").get<bool>());
}

}  // namespace

extern "C" {

const char* gk_version(void) { return "1.0.0"; }

const char* gk_last_error(void) { return t_last_error.c_str(); }

gk_config* gk_config_new(void) { return new (std::nothrow) gk_config{}; }

void gk_config_free(gk_config* cfg) { delete cfg; }

#define GK_SETTER(name, field, type, check)                                  \
  gk_status name(gk_config* cfg, type v) {                                   \
    if (cfg == nullptr) return fail(GK_ERR_INVALID_ARGUMENT, "null config"); \
    if (!(check)) return fail(GK_ERR_INVALID_ARGUMENT, #name ": bad value"); \
    cfg->cfg.field = v;                                                      \
    t_last_error.clear();                                                    \
    return GK_OK;                                                            \
  }

GK_SETTER(gk_config_set_seed, seed, uint64_t, true)
GK_SETTER(gk_config_set_samples, samples, int64_t, v >= 1)
GK_SETTER(gk_config_set_starts, starts, int32_t, v >= 1)
GK_SETTER(gk_config_set_series_order, series_order, int32_t, v >= 1 && v <= 4096)
GK_SETTER(gk_config_set_kmax, kmax, int32_t, v >= 1 && v <= 256)
GK_SETTER(gk_config_set_threads, threads, int32_t, v >= 0)

#undef GK_SETTER

gk_status gk_config_set_timestamp(gk_config* cfg, int32_t enabled) {
  if (cfg == nullptr) return fail(GK_ERR_INVALID_ARGUMENT, "null config");
  cfg->cfg.timestamp = enabled != 0;
  t_last_error.clear();
  return GK_OK;
}

gk_status gk_instance_from_json(const char* json_text, gk_instance** out) {
  return guarded([&]() -> gk_status {
    if (json_text == nullptr || out == nullptr)
      return fail(GK_ERR_INVALID_ARGUMENT, "null argument");
    auto* handle = new gk_instance{gk::io::parse_instance(json_text)};
    *out = handle;
    t_last_error.clear();
    return GK_OK;
  });
}

void gk_instance_free(gk_instance* inst) { delete inst; }

gk_status gk_instance_set_field(gk_instance* inst, const char* field) {
  return guarded([&]() -> gk_status {
    if (inst == nullptr || field == nullptr)
      return fail(GK_ERR_INVALID_ARGUMENT, "null argument");
    gk::io::promote_field(inst->inst, gk::field_from_name(field));
    t_last_error.clear();
    return GK_OK;
  });
}

int32_t gk_instance_rows(const gk_instance* inst) {
  return inst == nullptr ? -1 : inst->inst.m();
}

int32_t gk_instance_cols(const gk_instance* inst) {
  return inst == nullptr ? -1 : inst->inst.n();
}

int32_t gk_instance_is_complex(const gk_instance* inst) {
  if (inst == nullptr) return -1;
  return inst->inst.field == gk::Field::kComplex ? 1 : 0;
}

gk_status gk_constants(const gk_config* cfg, gk_result** out) {
  return guarded([&]() -> gk_status {
    const gk::verify::RunConfig rc = cfg != nullptr ? cfg->cfg
                                                    : gk::verify::RunConfig{};
    return make_json_result(out, gk::verify::constants_report_json(rc));
  });
}

gk_status gk_solve(const gk_instance* inst, const char* mode,
                   const gk_config* cfg, gk_result** out) {
  return guarded([&]() -> gk_status {
    if (inst == nullptr || mode == nullptr)
      return fail(GK_ERR_INVALID_ARGUMENT, "null argument");
    const gk::verify::RunConfig rc = cfg != nullptr ? cfg->cfg
                                                    : gk::verify::RunConfig{};
    return make_json_result(
        out, gk::verify::solve_report_json(inst->inst, mode, rc));
  });
}

gk_status gk_round(const gk_instance* inst, const char* scheme,
                   const gk_config* cfg, gk_result** out) {
  return guarded([&]() -> gk_status {
    if (inst == nullptr || scheme == nullptr)
      return fail(GK_ERR_INVALID_ARGUMENT, "null argument");
    gk::rounding::Scheme s;
    if (std::strcmp(scheme, "krivine") == 0) {
      s = gk::rounding::Scheme::kKrivine;
    } else if (std::strcmp(scheme, "haagerup") == 0) {
      s = gk::rounding::Scheme::kHaagerup;
    } else {
      return fail(GK_ERR_INVALID_ARGUMENT,
                  "round: scheme must be krivine|haagerup");
    }
    const gk::verify::RunConfig rc = cfg != nullptr ? cfg->cfg
                                                    : gk::verify::RunConfig{};
    return make_json_result(out,
                            gk::verify::round_report_json(inst->inst, s, rc));
  });
}

gk_status gk_verify(const char* target, const gk_config* cfg, gk_result** out) {
  return guarded([&]() -> gk_status {
    if (target == nullptr)
      return fail(GK_ERR_INVALID_ARGUMENT, "null target");
    const gk::verify::RunConfig rc = cfg != nullptr ? cfg->cfg
                                                    : gk::verify::RunConfig{};
    return make_json_result(out, gk::verify::verify_report_json(target, rc));
  });
}

gk_status gk_curves(const char* grid, const gk_config* cfg, gk_result** out) {
  return guarded([&]() -> gk_status {
    if (grid == nullptr) return fail(GK_ERR_INVALID_ARGUMENT, "null grid");
    double start = 0.0, stop = 0.0;
    int count = -1;
    if (std::sscanf(grid, "%lf:%lf:%d", &start, &stop, &count) != 3 ||
        count < 0)
      return fail(GK_ERR_INVALID_ARGUMENT,
                  "curves: grid must be start:stop:count");
    const gk::verify::RunConfig rc = cfg != nullptr ? cfg->cfg
                                                    : gk::verify::RunConfig{};
    return make_result(out, gk::verify::curves_csv(start, stop, count, rc),
                       true);
  });
}

const char* gk_result_text(const gk_result* res) {
  return res == nullptr ? "" : res->text.c_str();
}

int32_t gk_result_ok(const gk_result* res) {
  return res != nullptr && res->ok ? 1 : 0;
}

void gk_result_free(gk_result* res) { delete res; }

}  // extern "C"
