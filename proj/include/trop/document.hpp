#pragma once

// JSON interchange ("tropcurve-1"). Rationals are written as "num/den"
// strings, never as floats, so export followed by import is lossless.

#include "trop/curve.hpp"
#include "trop/elliptic.hpp"
#include "trop/intersect.hpp"
#include "trop/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace trop {

inline constexpr const char* kSchemaVersion = "tropcurve-1";

struct CurveDocument {
  std::string schema = kSchemaVersion;
  std::string source;                 // polynomial text as supplied
  TropicalCurve curve;
  std::optional<CycleModel> cycle;

  friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

// Builds the curve, and the cycle when the curve is elliptic (origin at V_1
// unless one is given).
CurveDocument make_document(const std::string& source, const std::optional<Point2>& origin = std::nullopt);

nlohmann::json to_json(const CurveDocument& doc);
// Throws std::invalid_argument on schema mismatch or malformed content.
CurveDocument document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Point2& p);
Point2 point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CyclePoint& p);
CyclePoint cycle_point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Divisor& d);
Divisor divisor_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntersectionMultiset& m);
nlohmann::json to_json(const VerificationReport& r);

// "x,y" with optional "/den" on each coordinate.
Point2 parse_point(const std::string& text);

// Divisor text: terms "[x,y]" or "O", each with an optional integer
// multiplier ("2*[1,0]", "-2O"), joined by + and -. O is the given origin.
Divisor parse_divisor(const std::string& text, const Point2& origin);

}  // namespace trop
