#include "demazure/json_io.hpp"

namespace demazure {

nlohmann::json qpoly_to_json(const QPoly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
    std::vector<mpz_class> coeffs;
    for (const auto& e : j) coeffs.emplace_back(e.get<std::string>());
    return QPoly(std::move(coeffs));
}

nlohmann::json character_to_json(const GradedCharacter& c) {
    nlohmann::json w = nlohmann::json::object();
    for (const auto& [weight, p] : c.weights()) w[std::to_string(weight)] = qpoly_to_json(p);
    return nlohmann::json{{"weights", w}};
}

GradedCharacter character_from_json(const nlohmann::json& j) {
    GradedCharacter c;
    for (const auto& [key, val] : j.at("weights").items())
        c.add(std::stoi(key), qpoly_from_json(val));
    return c;
}

nlohmann::json irreducible_to_json(const IrreducibleDecomposition& d) {
    nlohmann::json parts = nlohmann::json::object();
    for (const auto& [k, p] : d.parts) parts[std::to_string(k)] = qpoly_to_json(p);
    return nlohmann::json{{"parts", parts}};
}

nlohmann::json flag_to_json(const FlagDecomposition& d) {
    nlohmann::json parts = nlohmann::json::object();
    for (const auto& [s, p] : d.parts) parts[std::to_string(s)] = qpoly_to_json(p);
    return nlohmann::json{{"level", d.level}, {"parts", parts}};
}

}  // namespace demazure
