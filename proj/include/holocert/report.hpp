#pragma once

// Canonical JSON reports. Every rational serializes as an exact "p/q"
// string (never a float), so a report replays losslessly. Reports are
// deterministic for identical inputs and flags, up to the timing field.

#include "holocert/bounds.hpp"
#include "holocert/verify.hpp"

#include <json.hpp>

#include <string>

namespace holocert {

inline constexpr const char* kToolName = "holocert";
inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a 64-bit content digest, hex encoded.
std::string content_digest(const std::string& bytes);

// Fixed-precision decimal rendering of an exact rational (plot output
// only; certification paths never touch this).
std::string decimal_string(const Rational& q, unsigned digits10 = 24);

nlohmann::json to_json(const RationalFunction& f, const std::string& var);
nlohmann::json to_json(const Recurrence& rec);
nlohmann::json to_json(const BoundPair& pair);
nlohmann::json to_json(const BoundCertificate& cert);
nlohmann::json to_json(const std::vector<BoundViolation>& violations);
nlohmann::json to_json(const LogMono3Report& report);
nlohmann::json to_json(const Laguerre2Report& report);

nlohmann::json report_envelope(const std::string& command, const std::string& input_path,
                               const std::string& input_bytes);

void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace holocert
