#pragma once

#include <json.hpp>

#include "chaingeo/config.hpp"
#include "chaingeo/oracle.hpp"

namespace chaingeo {

// JSON layout (see docs/json-schema.md):
//   QNum        {"p": "num/den", "q": "num/den", "radicand": n, "decimal": 0.171572875253810}
//   Point       {"x": QNum, "y": QNum}
//   Circle      {"cx": QNum, "cy": QNum, "r": QNum}
//   ChainConfig {"kind", "n", "a", "b", "outer", "chain", "points": {A, B, C}, "d", "bc"}
// Readers ignore "decimal"; the exact fields are authoritative.

/// p + q sqrt(n) rounded to 15 significant digits.
double decimal_15(const QNum& x);

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const QNum& x);
void from_json(const nlohmann::json& j, QNum& x);

void to_json(nlohmann::json& j, const Point& p);
void from_json(const nlohmann::json& j, Point& p);

void to_json(nlohmann::json& j, const Circle& c);
void from_json(const nlohmann::json& j, Circle& c);

void to_json(nlohmann::json& j, const ChainConfig& cfg);
void from_json(const nlohmann::json& j, ChainConfig& cfg);

void to_json(nlohmann::json& j, const SquareResult& sq);
void to_json(nlohmann::json& j, const VerificationReport& report);

namespace oracle {
void to_json(nlohmann::json& j, const OracleResult& r);
}

} // namespace chaingeo
