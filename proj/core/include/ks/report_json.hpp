#pragma once

#include <nlohmann/json.hpp>

#include "ks/classify.hpp"
#include "ks/context_set.hpp"
#include "ks/contextuality.hpp"
#include "ks/inequality.hpp"
#include "ks/theta.hpp"

namespace ks {

// Version tag carried by every top-level report object.
inline constexpr const char* kReportSchema = "1";

// Exact rationals are rendered as "p/q" strings ("7/2", "5").
nlohmann::json rational_json(const Rational& q);

nlohmann::json to_json(const ClassificationReport& r);
nlohmann::json to_json(const ThetaResult& r);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const JohnsonDimBound& b);
nlohmann::json to_json(const ThreeCliqueCheck& c);
nlohmann::json to_json(const ContextSetReport& r);
nlohmann::json to_json(const CensusRow& row);

}  // namespace ks
