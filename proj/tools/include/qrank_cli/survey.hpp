#pragma once

// Range surveys: per-discriminant checks of the library against the form
// oracle, run on a worker pool and emitted in ascending order of d.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qrank/conic.hpp"
#include "qrank/forms_oracle.hpp"
#include "qrank/symbols.hpp"

namespace qrank::cli {

enum class Shape { Any, PositivePrimes, OddPositivePrimes, TwoPositivePrimes, ThreePositivePrimes, Mixed };
enum class Check { None, RedeiVsOracle, Theorem1, Octic, ScholzUnit, Pell, Tower, Genus };

std::optional<Shape> shape_from_string(std::string_view s);
std::optional<Check> check_from_string(std::string_view s);
std::string_view to_string(Shape s);
std::string_view to_string(Check c);

/// The shape a check implies when none is given.
Shape default_shape(Check c);

bool matches_shape(const Discriminant& d, Shape shape);

struct SurveyOptions {
  std::int64_t min = 1;
  std::int64_t max = 0;
  Shape shape = Shape::Any;
  Check check = Check::None;
  unsigned jobs = 1;
  /// Unit-orbit translates checked per generator (Theorem 1 identities).
  int orbit_samples = 3;
  SolverConfig solver;
  OracleConfig oracle;
};

enum class Status { Pass, Fail, Skip };

struct SurveyRecord {
  Integer d;
  Status status = Status::Pass;
  /// An error that signals a broken invariant rather than a failed comparison.
  bool breach = false;
  nlohmann::json payload;
};

struct SurveySummary {
  std::int64_t candidates = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  std::int64_t skipped = 0;
  std::int64_t breaches = 0;
  /// Check-specific tallies (e.g. factorizations examined).
  nlohmann::json tallies = nlohmann::json::object();
};

/// Runs one check on one discriminant; never throws for mathematical errors.
SurveyRecord check_discriminant(const Discriminant& d, const SurveyOptions& options);

/// Calls `sink` once per qualifying d in [min, max], in ascending order.
SurveySummary run_survey(const SurveyOptions& options, const std::function<void(const SurveyRecord&)>& sink);

nlohmann::json to_json(const SurveySummary& s);

/// Jobs from QRANK_JOBS when set and positive, else `fallback`.
unsigned jobs_from_environment(unsigned fallback);

}  // namespace qrank::cli
