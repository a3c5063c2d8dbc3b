#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace gci::cli {

const std::vector<std::string>& example_names();

// Embedded config; unknown names throw ValidationError listing the choices.
nlohmann::json example_config(const std::string& name);

}  // namespace gci::cli
