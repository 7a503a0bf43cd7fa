#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "stvf/model.hpp"
#include "stvf/paradox.hpp"

namespace stvf {

// {kind, X?, Y?, Sprime?, moves: [{source, count, new}], removals: [{ranking, count}]}
// with 0-based ids, plus "seats" and a "candidates" name table. The name
// table is informational; ids are authoritative.
nlohmann::json witness_to_json(const WitnessSpec& spec, const PreferenceProfile& profile);

// Throws Error(MalformedWitness) on schema violations or ids outside the
// profile. A "candidates" table, when present, must match the profile.
WitnessSpec witness_from_json(const nlohmann::json& doc, const PreferenceProfile& profile);
WitnessSpec parse_witness(std::string_view text, const PreferenceProfile& profile);

}  // namespace stvf
