#pragma once

// JSON, CSV and text renderings of characters and class reports.

#include <string>
#include <string_view>

#include "json.hpp"
#include "nott/character.hpp"
#include "nott/equivalence.hpp"

namespace nott {

/// {"p":2,"coeffs":{"5":1,"15":2}}
nlohmann::json character_to_json(const Character& chi);

/// Inverse of character_to_json; throws ParseError on a malformed document.
Character character_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const ClassReport& report);

std::string report_to_text(const ClassReport& report);

/// "p,l,m,B,d,method,runtime_ms"
std::string report_csv_header();
std::string report_csv_row(const ClassReport& report);

}  // namespace nott
