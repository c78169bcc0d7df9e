#pragma once

#include "entrolab/dist.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace entrolab {

/// {"outcomes": [{"label": "a", "mass": "1/2"}, ...]}
nlohmann::json dist_to_json(const Dist& p);
Dist dist_from_json(const nlohmann::json& j);

Dist read_dist_file(const std::filesystem::path& path);

}  // namespace entrolab
