#pragma once

#include <string>

#include <json.hpp>

#include "rigidity/extnat.hpp"
#include "rigidity/monadic_types.hpp"
#include "rigidity/structure.hpp"

namespace rigidity {

/// Canonical structure JSON: fields n, signature, relations, constants in
/// that order; relation keys in signature order; tuple lists sorted.
nlohmann::ordered_json structure_to_json(const FiniteStructure &s);
FiniteStructure structure_from_json(const nlohmann::json &j);
FiniteStructure load_structure(const std::string &path);
void save_structure(const FiniteStructure &s, const std::string &path);

/// Profile JSON: {"classes":[{"c","u","mult","definable"}...],
/// "unbounded_finite_family"}; infinite cardinalities spelled "omega".
nlohmann::ordered_json profile_to_json(const MonadicProfile &p);
MonadicProfile profile_from_json(const nlohmann::json &j);
MonadicProfile load_profile(const std::string &path);

nlohmann::ordered_json extnat_to_json(ExtNat v, const char *inf_word);
ExtNat extnat_from_json(const nlohmann::json &j, const std::string &field);

} // namespace rigidity
