/**
 * @file json_io.hpp
 * @brief JSON forms shared by the CLI and tests: polynomials as arrays of
 *        decimal-string coefficients (ascending in q), characters as
 *        {"weights": {"<w>": [...]}}, decompositions analogously with a
 *        "level" field for flags.
 */
#pragma once

#include "demazure/character.hpp"

#include <json.hpp>

namespace demazure {

nlohmann::json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json character_to_json(const GradedCharacter& c);
GradedCharacter character_from_json(const nlohmann::json& j);

nlohmann::json irreducible_to_json(const IrreducibleDecomposition& d);
nlohmann::json flag_to_json(const FlagDecomposition& d);

}  // namespace demazure
