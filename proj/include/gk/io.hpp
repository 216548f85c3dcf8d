#pragma once

#include <string>

#include <json.hpp>

#include "gk/types.hpp"

namespace gk::io {

// Parses and validates an instance document:
//   {"m": int, "n": int, "field": "real"|"complex",
//    "entries": row-major array of numbers or [re, im] pairs}
// Throws std::invalid_argument with a line-oriented message on violations.
ProblemInstance parse_instance(const std::string& json_text);

// Promotes/validates the instance against a caller-requested field tag:
// real file + complex request promotes with zero imaginary parts; complex
// file + real request is rejected unless all imaginary parts vanish.
void promote_field(ProblemInstance& inst, Field requested);

nlohmann::json instance_to_json(const ProblemInstance& inst);

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json vector_to_json(const Vector& v, Field field);

// Structural validation of report documents against the shapes published
// in docs/ (required keys and types per report kind).
void validate_report(const nlohmann::json& report);

}  // namespace gk::io
