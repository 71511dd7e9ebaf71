#pragma once

#include <string>

#include <json.hpp>

#include "tauforge/hirota.hpp"
#include "tauforge/partitions.hpp"
#include "tauforge/tau.hpp"

namespace tauforge {

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ShiftVector& c);
ShiftVector shift_from_json(const nlohmann::json& j);

/// {"components":s,"total":m,"entries":[{"charge":[...],"poly":{...}},...]}
nlohmann::json to_json(const TauCollection& T);
TauCollection collection_from_json(const nlohmann::json& j);
/// One "charge: poly" line per nonzero entry.
std::string to_text(const TauCollection& T);

/// {"M":[...],"b":[...],"c":[[...],...]}; b defaults to 1 and c to zero.
nlohmann::json to_json(const HSpec& h);
HSpec hspec_from_json(const nlohmann::json& j);

/// {"n_parts":[...],"specs":[...]}
nlohmann::json to_json(const KdVProfile& p);
KdVProfile profile_from_json(const nlohmann::json& j);

/// {identity, params, pass, obstruction, parts} plus time_ms when requested.
nlohmann::json to_json(const VerificationReport& r, bool with_timing);
/// "PASS identity k=v ..." headline, indented sub-checks, obstruction text on failure.
std::string to_text(const VerificationReport& r, bool with_timing);

} // namespace tauforge
