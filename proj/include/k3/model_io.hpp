#pragma once

// Model files (JSON) and the small divisor-expression language
//
//   expr := term (('+' | '-') term)*
//   term := [integer] label | integer
//
// Whitespace is ignored. Labels are basis labels, names from the model's
// `classes` table, or H (the polarization).

#include "k3/lattice.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace k3 {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using NamedClasses = std::map<std::string, DivisorClass>;

struct ModelFile {
  Model model;
  NamedClasses classes;
  nlohmann::json expected;  // null when absent
  bool polarization_not_very_ample = false;
  std::string description;
};

/// Parses a model document. Throws ParseError on malformed input and
/// ContractError on inconsistent dimensions.
ModelFile parse_model_json(const std::string& text);

ModelFile load_model_file(const std::string& path);

/// Canonical JSON for a model (inverse of parse_model_json up to formatting).
nlohmann::json model_to_json(const ModelFile& f);

DivisorClass parse_class_expr(const Model& m, std::string_view expr, const NamedClasses& names = {});

/// Renders a class in basis labels, e.g. "3E+2Delta"; zero renders as "0".
std::string render_class(const Model& m, const DivisorClass& d);

}  // namespace k3
