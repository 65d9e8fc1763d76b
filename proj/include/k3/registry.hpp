#pragma once

// Built-in lattice models, stored as the same JSON documents a user would
// write and parsed by the ordinary model parser.

#include "k3/model_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3 {

/// Registry names in canonical order (named models, then controls/...).
const std::vector<std::string>& registry_names();

/// JSON text of a registry entry; nullopt for unknown names.
std::optional<std::string> registry_source(const std::string& name);

/// Parsed registry entry; throws ContractError for unknown names.
ModelFile registry_model(const std::string& name);

/// A registry name or a path to a model file.
ModelFile resolve_model(const std::string& name_or_path);

}  // namespace k3
