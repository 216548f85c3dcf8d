#include "gk/io.hpp"

#include <cmath>
#include <stdexcept>

namespace gk::io {

using nlohmann::json;

namespace {

Complex entry_from_json(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw std::invalid_argument(
      "instance: entries must be numbers or [re, im] pairs");
}

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

ProblemInstance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("instance: malformed JSON: ") +
                                err.what());
  }
  require(doc.is_object(), "instance: top-level object required");
  require(doc.contains("m") && doc["m"].is_number_integer(),
          "instance: integer field 'm' required");
  require(doc.contains("n") && doc["n"].is_number_integer(),
          "instance: integer field 'n' required");
  require(doc.contains("field") && doc["field"].is_string(),
          "instance: string field 'field' required");
  require(doc.contains("entries") && doc["entries"].is_array(),
          "instance: array field 'entries' required");

  const int m = doc["m"].get<int>();
  const int n = doc["n"].get<int>();
  require(m >= 1 && n >= 1, "instance: m, n must be positive");
  const auto& entries = doc["entries"];
  require(static_cast<int>(entries.size()) == m * n,
          "instance: entries must hold m*n values (row-major)");

  ProblemInstance inst;
  inst.field = field_from_name(doc["field"].get<std::string>());
  inst.entries.resize(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      inst.entries(i, j) = entry_from_json(entries[i * n + j]);
  if (inst.field == Field::kReal &&
      inst.entries.imag().cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument(
        "instance: field 'real' with nonzero imaginary entries");
  inst.validate();
  return inst;
}

void promote_field(ProblemInstance& inst, Field requested) {
  if (inst.field == requested) return;
  if (requested == Field::kComplex) {
    inst.field = Field::kComplex;  // zero imaginary parts already in place
    return;
  }
  if (inst.entries.imag().cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument(
        "instance: cannot demote complex entries to the real field");
  inst.field = Field::kReal;
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const Vector& v, Field field) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (field == Field::kReal)
      arr.push_back(v[i].real());
    else
      arr.push_back(complex_to_json(v[i]));
  }
  return arr;
}

json instance_to_json(const ProblemInstance& inst) {
  json doc;
  doc["m"] = inst.m();
  doc["n"] = inst.n();
  doc["field"] = field_name(inst.field);
  json entries = json::array();
  for (int i = 0; i < inst.m(); ++i) {
    for (int j = 0; j < inst.n(); ++j) {
      const Complex& z = inst.entries(i, j);
      if (inst.field == Field::kReal)
        entries.push_back(z.real());
      else
        entries.push_back(complex_to_json(z));
    }
  }
  doc["entries"] = std::move(entries);
  return doc;
}

void validate_report(const json& report) {
  require(report.is_object(), "report: object required");
  require(report.contains("kind") && report["kind"].is_string(),
          "report: string 'kind' required");
  require(report.contains("passed") && report["passed"].is_boolean(),
          "report: boolean 'passed' required");
  require(report.contains("config") && report["config"].is_object(),
          "report: object 'config' required");
  const std::string kind = report["kind"].get<std::string>();
  auto need_number = [&](const char* key) {
    require(report.contains(key) && report[key].is_number(),
            "report: numeric field missing");
  };
  if (kind == "constants") {
    for (const char* key : {"k_real", "k_complex", "x0", "c0", "davie_real",
                            "davie_complex", "c_arcsinh1"})
      need_number(key);
    require(report.contains("residuals") && report["residuals"].is_object(),
            "constants report: 'residuals' object required");
  } else if (kind == "solve") {
    require(report.contains("field") && report["field"].is_string(),
            "solve report: 'field' required");
    require(report.contains("mode") && report["mode"].is_string(),
            "solve report: 'mode' required");
    require(report.contains("m") && report.contains("n"),
            "solve report: dimensions required");
  } else if (kind == "round") {
    require(report.contains("scheme") && report["scheme"].is_string(),
            "round report: 'scheme' required");
    require(report.contains("rounding") && report["rounding"].is_object(),
            "round report: 'rounding' object required");
    require(report.contains("relaxation") && report["relaxation"].is_object(),
            "round report: 'relaxation' object required");
  } else if (kind == "verify") {
    require(report.contains("target") && report["target"].is_string(),
            "verify report: 'target' required");
    require(report.contains("checks") && report["checks"].is_array(),
            "verify report: 'checks' array required");
    for (const auto& c : report["checks"]) {
      require(c.is_object() && c.contains("name") && c.contains("pass"),
              "verify report: each check needs 'name' and 'pass'");
    }
  } else {
    throw std::invalid_argument("report: unknown kind '" + kind + "'");
  }
}

}  // namespace gk::io
