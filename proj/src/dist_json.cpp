#include "entrolab/dist_json.hpp"

#include "entrolab/error.hpp"

#include <fstream>

namespace entrolab {

nlohmann::json dist_to_json(const Dist& p) {
    nlohmann::json outcomes = nlohmann::json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        outcomes.push_back({{"label", p.label(i).to_string()}, {"mass", to_string(p.mass(i))}});
    }
    return {{"outcomes", std::move(outcomes)}};
}

Dist dist_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("outcomes") || !j["outcomes"].is_array()) {
        throw Error(ErrorCode::ParseError, "distribution JSON needs an \"outcomes\" array");
    }
    std::vector<std::pair<Label, Rational>> pairs;
    for (const auto& o : j["outcomes"]) {
        if (!o.is_object() || !o.contains("label") || !o.contains("mass") || !o["label"].is_string() ||
            !o["mass"].is_string()) {
            throw Error(ErrorCode::ParseError, "each outcome needs string \"label\" and \"mass\" fields");
        }
        pairs.emplace_back(Label::parse(o["label"].get<std::string>()), parse_rational(o["mass"].get<std::string>()));
    }
    return Dist::make(std::move(pairs));
}

Dist read_dist_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    return dist_from_json(j);
}

}  // namespace entrolab
