#pragma once

// Rendering classification results as text or JSON, and checking them
// against a model's "expected" block.

#include "k3/classify.hpp"
#include "k3/model_io.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace k3 {

/// Machine form. Keys match those of an "expected" block where they overlap.
nlohmann::json report_to_json(const Model& m, const ClassificationReport& r);
nlohmann::json report_to_json(const Model& m, const SpecialMemberReport& r);

/// One "key: value" line per field.
std::string report_to_text(const Model& m, const ClassificationReport& r);
std::string report_to_text(const Model& m, const SpecialMemberReport& r);

/// Classifies the model (special member when the polarization is flagged as
/// not very ample) and returns the JSON report.
nlohmann::json classify_model_file(const ModelFile& f);
std::string classify_model_file_text(const ModelFile& f);

struct ExpectationMismatch {
  std::string key;
  std::string expected;
  std::string actual;
};

/// Compares every key of the expected block, including the "h0" table
/// (expression -> value) and the special_member sub-block.
std::vector<ExpectationMismatch> check_expected(const ModelFile& f, const nlohmann::json& report);

}  // namespace k3
