#pragma once

// JSON forms of the domain types. Integers that fit in 64 bits are JSON
// numbers, larger ones decimal strings.

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "qrank/conic.hpp"
#include "qrank/f2space.hpp"
#include "qrank/forms_oracle.hpp"
#include "qrank/redei.hpp"
#include "qrank/scholz.hpp"
#include "qrank/symbols.hpp"
#include "qrank/tower.hpp"

namespace qrank {

inline constexpr const char* kReportSchema = "qrank.report/1";
inline constexpr const char* kTowerSchema = "qrank.tower-certificate/1";
inline constexpr const char* kVersion = "0.3.0";

nlohmann::json integer_json(const Integer& n);

void to_json(nlohmann::json& j, const Discriminant& d);
void to_json(nlohmann::json& j, const RedeiMatrix& m);
void to_json(nlohmann::json& j, const C4Factorization& f);
void to_json(nlohmann::json& j, const ConicSolution& s);
void to_json(nlohmann::json& j, const QuarticGenerator& g);
void to_json(nlohmann::json& j, const Twist& tw);
void to_json(nlohmann::json& j, const ScholzReport& r);
void to_json(nlohmann::json& j, const PellPrediction& p);
void to_json(nlohmann::json& j, const ClassGroupStructure& g);
void to_json(nlohmann::json& j, const FundamentalUnit& u);
void to_json(nlohmann::json& j, const GSInstance& gs);
void to_json(nlohmann::json& j, const TowerCertificate& c);
void to_json(nlohmann::json& j, const FactorClass& u);
void to_json(nlohmann::json& j, const RestrictedSpace& rs);
void to_json(nlohmann::json& j, const Problem1Report& r);
void to_json(nlohmann::json& j, const Problem2Report& r);

/// {schema, version, command, input, result, elapsed_ms}.
nlohmann::json make_envelope(const std::string& command, nlohmann::json input, nlohmann::json result,
                             std::int64_t elapsed_ms);

}  // namespace qrank
