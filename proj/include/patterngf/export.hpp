#pragma once

#include <string>

#include "json.hpp"

#include "patterngf/oracle.hpp"
#include "patterngf/polynomial.hpp"
#include "patterngf/series.hpp"

namespace patterngf {

inline constexpr const char* kJsonSchema = "patterngf/1";

/// Coefficients as rational strings, lowest order first.
nlohmann::json to_json(const TruncatedSeries& s);
/// One object per coefficient mapping y-exponent strings to integer strings.
nlohmann::json to_json(const BivariateSeries& s);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const Census& c);

/// Wraps a payload as {"schema": ..., "kind": kind, "data": payload} and
/// serializes it with sorted keys and two-space indentation.
std::string json_document(const std::string& kind, nlohmann::json payload);

}  // namespace patterngf
