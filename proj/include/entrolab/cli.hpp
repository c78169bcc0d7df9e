#pragma once

#include "entrolab/dist.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace entrolab {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 when a verification fails or the library rejects the input,
/// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Tower file: {"dist": <distribution>, "tower": [{"label": "image", ...}, ...]}
/// where each level maps the labels of the previous level. Throws ParseError.
std::vector<MPMap> tower_from_json(const nlohmann::json& j);

}  // namespace entrolab
