#include "qrank_cli/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "qrank/redei.hpp"
#include "qrank/report.hpp"
#include "qrank/scholz.hpp"
#include "qrank/tower.hpp"

namespace qrank::cli {

using nlohmann::json;

namespace {

constexpr std::pair<Shape, std::string_view> kShapes[] = {
    {Shape::Any, "any"},
    {Shape::PositivePrimes, "positive-primes"},
    {Shape::OddPositivePrimes, "odd-positive-primes"},
    {Shape::TwoPositivePrimes, "two-positive-primes"},
    {Shape::ThreePositivePrimes, "three-positive-primes"},
    {Shape::Mixed, "mixed"},
};

constexpr std::pair<Check, std::string_view> kChecks[] = {
    {Check::None, "none"},         {Check::RedeiVsOracle, "redei-vs-oracle"},
    {Check::Theorem1, "theorem1"}, {Check::Octic, "octic"},
    {Check::ScholzUnit, "scholz-unit"}, {Check::Pell, "pell"},
    {Check::Tower, "tower"},       {Check::Genus, "genus"},
};

const std::vector<std::int64_t> kCyclicFour{4};

void tally(json& payload, const char* key, std::int64_t n = 1) {
  auto& t = payload["tally"];
  if (!t.is_object()) t = json::object();
  t[key] = t.value(key, std::int64_t{0}) + n;
}

Status check_redei(const Discriminant& d, const SurveyOptions& o, json& out) {
  const int r = four_rank_narrow(d);
  const ClassGroupStructure narrow = class_group(d, true, o.oracle);
  out["four_rank"] = r;
  out["oracle_narrow"] = narrow.elementary_divisors;
  out["oracle_four_rank"] = narrow.four_rank();
  bool ok = r == narrow.four_rank();
  if (d.all_positive_factors()) {
    const auto f = enumerate_c4_factorizations(d);
    out["c4_count"] = f.size();
    ok = ok && f.size() + 1 == (std::size_t{1} << r);
    if (d.t() <= 8) ok = ok && f == enumerate_c4_factorizations_exhaustive(d);
    for (const auto& x : f) ok = ok && is_c4_pair(x.d1, x.d2);
  }
  ok = ok && redei_matrix(d).columns_sum_to_zero();
  return ok ? Status::Pass : Status::Fail;
}

Status check_theorem1(const Discriminant& d, const SurveyOptions& o, json& out) {
  const auto fs = enumerate_c4_factorizations(d);
  if (fs.empty()) return Status::Skip;
  bool ok = true;
  json reports = json::array();
  for (const auto& f : fs) {
    const ScholzReport rep = theorem1_check(d, f, o.solver);
    tally(out, "factorizations");
    const auto& gen = rep.generator;
    bool gen_ok = parity_identity_check(gen) && intermediate_identities_check(gen);
    // the normalizer's output also meets x + y = 1 mod 4
    const Integer xy = gen.solution.x + gen.solution.y;
    gen_ok = gen_ok && mpz_fdiv_ui(xy.get_mpz_t(), 4) == 1;
    const auto orbit = unit_orbit(gen.solution, gen.d1, (o.orbit_samples + 1) / 2);
    int sampled = 0;
    for (std::size_t i = 1; i < orbit.size() && sampled < o.orbit_samples; ++i, ++sampled) {
      QuarticGenerator g = gen;
      g.solution = orbit[i];
      if (sgn(g.solution.y) < 0) {
        g.solution.x = -g.solution.x;
        g.solution.y = -g.solution.y;
      }
      gen_ok = gen_ok && parity_identity_check(g) && intermediate_identities_check(g);
      tally(out, "orbit_translates");
    }
    if (sampled < o.orbit_samples) gen_ok = false;
    ok = ok && gen_ok;
    json r = rep;
    r["identities_ok"] = gen_ok;
    reports.push_back(std::move(r));
  }
  out["reports"] = std::move(reports);
  return ok ? Status::Pass : Status::Fail;
}

Status check_octic(const Discriminant& d, const SurveyOptions& o, json& out) {
  const auto fs = enumerate_c4_factorizations(d);
  if (fs.empty()) return Status::Skip;
  const auto& f = fs.front();
  const int s12 = quartic_symbol(f.d1.value(), f.d2);
  const int s21 = quartic_symbol(f.d2.value(), f.d1);
  out["sym12"] = s12;
  out["sym21"] = s21;
  if (s12 != -1 || s21 != -1) return Status::Skip;
  const ClassGroupStructure g = two_sylow(class_group(d, true, o.oracle));
  out["oracle_narrow_two_sylow"] = g.elementary_divisors;
  return g.elementary_divisors == kCyclicFour ? Status::Pass : Status::Fail;
}

Status check_scholz_unit(const Discriminant& d, const SurveyOptions&, json& out) {
  bool any = false;
  bool ok = true;
  for (const auto& f : enumerate_c4_factorizations(d)) {
    const int s12 = quartic_symbol(f.d1.value(), f.d2);
    const int s21 = quartic_symbol(f.d2.value(), f.d1);
    if (s12 == s21) continue;
    any = true;
    tally(out, "factorizations");
  }
  if (!any) return Status::Skip;
  const FundamentalUnit eps = fundamental_unit(d);
  out["unit_norm"] = eps.norm;
  ok = eps.norm == 1;
  return ok ? Status::Pass : Status::Fail;
}

Status check_pell(const Discriminant& d, const SurveyOptions& o, json& out) {
  const auto fs = d.factors();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = fs[i];
    const auto& q = fs[(i + 1) % 3];
    const auto& r = fs[(i + 2) % 3];
    PellPrediction pred;
    try {
      pred = pell_criterion(p, q, r);
    } catch (const Error& e) {
      if (e.code() == Errc::PatternMismatch) continue;
      throw;
    }
    const FundamentalUnit eps = fundamental_unit(d);
    const ClassGroupStructure narrow = two_sylow(class_group(d, true, o.oracle));
    const ClassGroupStructure wide = two_sylow(class_group(d, false, o.oracle));
    out["prediction"] = pred;
    out["unit_norm"] = eps.norm;
    out["oracle_narrow_two_sylow"] = narrow.elementary_divisors;
    out["oracle_wide_two_sylow"] = wide.elementary_divisors;
    tally(out, std::string(to_string(pred.pell_case)).c_str());
    bool ok = !pred.predicted_norm || *pred.predicted_norm == eps.norm;
    if (pred.predicted_two_sylow)
      ok = ok && narrow.elementary_divisors == pred.predicted_two_sylow->elementary_divisors &&
           wide.elementary_divisors == pred.predicted_two_sylow->elementary_divisors;
    return ok ? Status::Pass : Status::Fail;
  }
  return Status::Skip;
}

Status check_tower(const Discriminant& d, const SurveyOptions&, json& out) {
  const TowerCertificate cert = certify_tower(d);
  out["certificate"] = cert;
  if (!cert.verdict) return Status::Skip;
  tally(out, std::string(to_string(*cert.case_tag)).c_str());
  return verify_certificate(cert) ? Status::Pass : Status::Fail;
}

Status check_genus(const Discriminant& d, const SurveyOptions& o, json& out) {
  const ClassGroupStructure narrow = class_group(d, true, o.oracle);
  const ClassGroupStructure wide = class_group(d, false, o.oracle);
  const FundamentalUnit eps = fundamental_unit(d, o.oracle);
  out["oracle_narrow"] = narrow.elementary_divisors;
  out["oracle_wide"] = wide.elementary_divisors;
  out["unit_norm"] = eps.norm;
  bool ok = narrow.two_rank() == static_cast<int>(d.t()) - 1;
  ok = ok && narrow.order == wide.order * (eps.norm == 1 ? 2 : 1);
  // odd period for norm -1
  ok = ok && (eps.norm == 1) == (eps.period % 2 == 0);
  return ok ? Status::Pass : Status::Fail;
}

}  // namespace

std::optional<Shape> shape_from_string(std::string_view s) {
  for (const auto& [v, n] : kShapes)
    if (n == s) return v;
  return std::nullopt;
}

std::optional<Check> check_from_string(std::string_view s) {
  for (const auto& [v, n] : kChecks)
    if (n == s) return v;
  return std::nullopt;
}

std::string_view to_string(Shape s) {
  for (const auto& [v, n] : kShapes)
    if (v == s) return n;
  return "unknown";
}

std::string_view to_string(Check c) {
  for (const auto& [v, n] : kChecks)
    if (v == c) return n;
  return "unknown";
}

Shape default_shape(Check c) {
  switch (c) {
    case Check::RedeiVsOracle: return Shape::PositivePrimes;
    case Check::Theorem1:
    case Check::ScholzUnit: return Shape::OddPositivePrimes;
    case Check::Octic: return Shape::TwoPositivePrimes;
    case Check::Pell: return Shape::ThreePositivePrimes;
    default: return Shape::Any;
  }
}

bool matches_shape(const Discriminant& d, Shape shape) {
  if (sgn(d.value()) <= 0) return false;
  switch (shape) {
    case Shape::Any: return true;
    case Shape::PositivePrimes: return d.all_positive_factors();
    case Shape::OddPositivePrimes: return d.all_positive_factors() && d.odd();
    case Shape::TwoPositivePrimes: return d.all_positive_factors() && d.t() == 2;
    case Shape::ThreePositivePrimes: return d.all_positive_factors() && d.odd() && d.t() == 3;
    case Shape::Mixed: return !d.all_positive_factors();
  }
  return false;
}

SurveyRecord check_discriminant(const Discriminant& d, const SurveyOptions& options) {
  SurveyRecord rec;
  rec.d = d.value();
  json out = {{"d", integer_json(d.value())}, {"t", d.t()}};
  try {
    switch (options.check) {
      case Check::None: {
        json f = d;
        out["factors"] = f["factors"];
        rec.status = Status::Pass;
        break;
      }
      case Check::RedeiVsOracle: rec.status = check_redei(d, options, out); break;
      case Check::Theorem1: rec.status = check_theorem1(d, options, out); break;
      case Check::Octic: rec.status = check_octic(d, options, out); break;
      case Check::ScholzUnit: rec.status = check_scholz_unit(d, options, out); break;
      case Check::Pell: rec.status = check_pell(d, options, out); break;
      case Check::Tower: rec.status = check_tower(d, options, out); break;
      case Check::Genus: rec.status = check_genus(d, options, out); break;
    }
  } catch (const Error& e) {
    out["error"] = e.what();
    if (e.code() == Errc::TheoremViolation) {
      rec.status = Status::Fail;
    } else if (is_invariant_breach(e.code())) {
      rec.status = Status::Fail;
      rec.breach = true;
    } else {
      rec.status = Status::Skip;
    }
  }
  out["status"] = rec.status == Status::Pass ? "pass" : rec.status == Status::Fail ? "fail" : "skip";
  rec.payload = std::move(out);
  return rec;
}

SurveySummary run_survey(const SurveyOptions& options, const std::function<void(const SurveyRecord&)>& sink) {
  SurveySummary summary;
  const std::int64_t lo = std::max<std::int64_t>(options.min, 1);
  const unsigned jobs = std::max(1U, options.jobs);
  constexpr std::int64_t kBlock = 2048;
  std::vector<Discriminant> batch;
  std::vector<SurveyRecord> results;

  auto flush = [&] {
    results.assign(batch.size(), {});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < batch.size(); i = next++) results[i] = check_discriminant(batch[i], options);
    };
    if (jobs == 1 || batch.size() < 2) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (const auto& r : results) {
      switch (r.status) {
        case Status::Pass: ++summary.passed; break;
        case Status::Fail: ++summary.failed; break;
        case Status::Skip: ++summary.skipped; break;
      }
      if (r.breach) ++summary.breaches;
      if (r.payload.contains("tally"))
        for (const auto& [k, v] : r.payload["tally"].items())
          summary.tallies[k] = summary.tallies.value(k, std::int64_t{0}) + v.get<std::int64_t>();
      sink(r);
    }
    batch.clear();
  };

  for (std::int64_t n = lo; n <= options.max; ++n) {
    const Integer N(static_cast<long>(n));
    if (!is_fundamental(N)) continue;
    Discriminant d = factor_discriminant(N);
    if (!matches_shape(d, options.shape)) continue;
    ++summary.candidates;
    batch.push_back(std::move(d));
    if (static_cast<std::int64_t>(batch.size()) >= kBlock) flush();
  }
  if (!batch.empty()) flush();
  return summary;
}

json to_json(const SurveySummary& s) {
  return json{{"candidates", s.candidates}, {"passed", s.passed},     {"failed", s.failed},
              {"skipped", s.skipped},       {"breaches", s.breaches}, {"tallies", s.tallies}};
}

unsigned jobs_from_environment(unsigned fallback) {
  if (const char* env = std::getenv("QRANK_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  return fallback;
}

}  // namespace qrank::cli
