#include "qrank_cli/cli.hpp"

#include <chrono>
#include <functional>
#include <thread>

#include <CLI11.hpp>

#include "qrank/report.hpp"
#include "qrank_cli/survey.hpp"

namespace qrank::cli {

using nlohmann::json;

namespace {

struct Globals {
  bool csv = false;
  bool json_out = false;
  unsigned jobs = 0;
  int unit_orbit_bound = 8;
  std::int64_t solver_bound = 1;
  std::int64_t ceiling = 1'000'000;

  SolverConfig solver() const {
    SolverConfig c;
    c.unit_orbit_bound = unit_orbit_bound;
    c.bound_scale = solver_bound;
    return c;
  }
  OracleConfig oracle() const {
    OracleConfig c;
    c.ceiling = ceiling;
    return c;
  }
};

Discriminant positive_discriminant(const std::string& text) {
  const Integer n = parse_integer(text);
  Discriminant d = factor_discriminant(n);
  if (sgn(d.value()) <= 0) throw Error(Errc::InvalidArgument, text + " is not positive");
  return d;
}

json oracle_section(const Discriminant& d, const Globals& g) {
  json out;
  try {
    out["narrow"] = class_group(d, true, g.oracle());
    out["wide"] = class_group(d, false, g.oracle());
  } catch (const Error& e) {
    if (e.code() != Errc::OutOfRange && e.code() != Errc::Overflow) throw;
    out["class_group_error"] = e.what();
  }
  try {
    out["fundamental_unit"] = fundamental_unit(d, g.oracle());
  } catch (const Error& e) {
    if (e.code() != Errc::Overflow && e.code() != Errc::OutOfRange) throw;
    out["fundamental_unit_error"] = e.what();
  }
  return out;
}

std::vector<C4Factorization> strict_factorizations(const Discriminant& d) {
  std::vector<C4Factorization> out;
  const std::uint64_t all = (std::uint64_t{1} << d.t()) - 1;
  for (std::uint64_t e : c4_kernel_masks(d)) out.push_back({d.sub(e), d.sub(all & ~e)});
  return out;
}

json scholz_section(const Discriminant& d, const std::vector<C4Factorization>& fs, const Globals& g) {
  json reports = json::array();
  for (const auto& f : fs) {
    if (d.odd() && d.all_positive_factors()) {
      json r = theorem1_check(d, f, g.solver());
      reports.push_back(std::move(r));
      continue;
    }
    if (!d.all_positive_factors()) continue;
    // 8 | d: construction only
    const auto [a, b] = generator_orientation(f);
    json r = {{"factorization", f},
              {"sym12", quartic_symbol(f.d1.value(), f.d2)},
              {"sym21", quartic_symbol(f.d2.value(), f.d1)},
              {"generator", construct_generator(a, b, g.solver())}};
    reports.push_back(std::move(r));
  }
  return reports;
}

json cmd_analyze(const Discriminant& d, const Globals& g) {
  json out;
  out["d"] = d;
  out["redei_matrix"] = redei_matrix(d);
  out["four_rank"] = four_rank_narrow(d);
  const auto fs = strict_factorizations(d);
  out["c4_factorizations"] = fs;
  out["scholz"] = scholz_section(d, fs, g);
  out["oracle"] = oracle_section(d, g);
  out["tower"] = certify_tower(d);
  return out;
}

json cmd_symbols(const Integer& a, const Integer& b) {
  json out = {{"a", integer_json(a)}, {"b", integer_json(b)}};
  if (b == 0) throw Error(Errc::InvalidArgument, "denominator 0");
  out["kronecker"] = kronecker(a, b);
  try {
    if (is_probable_prime(abs(b)))
      out["quartic"] = quartic_symbol_prime(a, Integer(abs(b)));
    else
      out["quartic"] = quartic_symbol(a, factor_discriminant(b));
  } catch (const Error& e) {
    if (e.code() != Errc::UndefinedSymbol && e.code() != Errc::NotFundamental) throw;
    out["quartic"] = nullptr;
    out["quartic_error"] = e.what();
  }
  return out;
}

json cmd_c4(const Discriminant& d, bool exhaustive) {
  json out = {{"d", d}, {"four_rank", four_rank_narrow(d)}};
  if (d.all_positive_factors()) {
    out["factorizations"] = enumerate_c4_factorizations(d);
    if (exhaustive) {
      const auto ex = enumerate_c4_factorizations_exhaustive(d);
      out["exhaustive_agrees"] = ex == enumerate_c4_factorizations(d);
    }
  } else {
    out["factorizations"] = strict_factorizations(d);
  }
  return out;
}

json cmd_construct(const Discriminant& d1, const Discriminant& d2, const Globals& g) {
  const QuarticGenerator gen = construct_generator(d1, d2, g.solver());
  const Discriminant d = factor_discriminant(Integer(d1.value() * d2.value()));
  json out = {{"canonical_solution", solve_conic(d1, d2, g.solver())}, {"generator", gen}};
  out["twists"] = twist_generators(gen, d);
  return out;
}

json cmd_tower(const Discriminant& d, bool relaxed) {
  TowerOptions opt;
  opt.relaxed = relaxed;
  const TowerCertificate cert = certify_tower(d, opt);
  json out = cert;
  out["self_verified"] = verify_certificate(cert);
  return out;
}

int exit_for(const Error& e) {
  if (e.code() == Errc::TheoremViolation || is_invariant_breach(e.code())) return kBreach;
  return kUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Narrow class group 4-ranks, quartic generators and class field tower certificates of real quadratic fields",
               "qrank"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a TOML/INI file");
  Globals g;
  app.add_flag("--json", g.json_out, "JSON output (default)");
  app.add_flag("--csv", g.csv, "CSV rows for surveys");
  app.add_option("--jobs", g.jobs, "Worker threads for surveys (default: QRANK_JOBS or hardware threads)");
  app.add_option("--unit-orbit-bound", g.unit_orbit_bound, "Unit powers tried when normalizing alpha")
      ->check(CLI::Range(0, 64));
  app.add_option("--solver-bound", g.solver_bound, "Multiplier on the conic search box")->check(CLI::Range(1, 1000));
  app.add_option("--ceiling", g.ceiling, "Largest |d| accepted by the form oracle")
      ->check(CLI::Range(std::int64_t{3}, std::int64_t{1'000'000'000}));

  std::function<json()> action;
  json input;
  std::string a1, a2, a3;
  bool flag = false;
  int problem = 0, k = 0, t_fibers = 0;
  std::int64_t smin = 1, smax = 0;
  std::string shape_s, check_s = "none";
  int survey_exit = kOk;

  auto* analyze = app.add_subcommand("analyze", "Full analysis of one discriminant");
  analyze->add_option("d", a1)->required();
  analyze->callback([&] {
    input = {{"d", a1}};
    action = [&] { return cmd_analyze(positive_discriminant(a1), g); };
  });

  auto* symbols = app.add_subcommand("symbols", "Kronecker and quartic symbols (a/b)");
  symbols->add_option("a", a1)->required();
  symbols->add_option("b", a2)->required();
  symbols->callback([&] {
    input = {{"a", a1}, {"b", a2}};
    action = [&] { return cmd_symbols(parse_integer(a1), parse_integer(a2)); };
  });

  auto* redei = app.add_subcommand("redei", "Redei matrix and narrow 4-rank");
  redei->add_option("d", a1)->required();
  redei->callback([&] {
    input = {{"d", a1}};
    action = [&] {
      const Discriminant d = factor_discriminant(parse_integer(a1));
      return json{{"d", d}, {"matrix", redei_matrix(d)}, {"four_rank", four_rank_narrow(d)}};
    };
  });

  auto* c4 = app.add_subcommand("c4", "C4+-factorizations");
  c4->add_option("d", a1)->required();
  c4->add_flag("--exhaustive", flag, "Also try every split and compare");
  c4->callback([&] {
    input = {{"d", a1}, {"exhaustive", flag}};
    action = [&] { return cmd_c4(positive_discriminant(a1), flag); };
  });

  auto* construct = app.add_subcommand("construct", "Solve x^2 - d1 y^2 = d2 z^2 and normalize alpha");
  construct->add_option("d1", a1)->required();
  construct->add_option("d2", a2)->required();
  construct->callback([&] {
    input = {{"d1", a1}, {"d2", a2}};
    action = [&] { return cmd_construct(positive_discriminant(a1), positive_discriminant(a2), g); };
  });

  auto* scholz = app.add_subcommand("scholz", "Reality of the quartic extensions for every factorization");
  scholz->add_option("d", a1)->required();
  scholz->callback([&] {
    input = {{"d", a1}};
    action = [&] {
      const Discriminant d = positive_discriminant(a1);
      return json{{"d", d}, {"reports", scholz_section(d, enumerate_c4_factorizations(d), g)}};
    };
  });

  auto* pell = app.add_subcommand("pell", "Negative Pell prediction for d = pqr");
  pell->add_option("p", a1)->required();
  pell->add_option("q", a2)->required();
  pell->add_option("r", a3)->required();
  pell->add_flag("--oracle", flag, "Compare with the form oracle");
  pell->callback([&] {
    input = {{"p", a1}, {"q", a2}, {"r", a3}, {"oracle", flag}};
    action = [&] {
      const auto pred = pell_criterion(PrimeDiscriminant(parse_integer(a1)), PrimeDiscriminant(parse_integer(a2)),
                                       PrimeDiscriminant(parse_integer(a3)));
      json out = {{"prediction", pred}};
      if (flag) out["oracle"] = oracle_section(factor_discriminant(Integer(pred.p * pred.q * pred.r)), g);
      return out;
    };
  });

  auto* tower = app.add_subcommand("tower", "Golod-Shafarevich certificate");
  tower->add_option("d", a1)->required();
  tower->add_flag("--relaxed", flag, "Try the proof cases below strict 4-rank 4");
  tower->callback([&] {
    input = {{"d", a1}, {"relaxed", flag}};
    action = [&] { return cmd_tower(positive_discriminant(a1), flag); };
  });

  auto* verify = app.add_subcommand("verify-f2", "Exhaustive subspace checks over F_2");
  verify->add_option("--problem", problem, "1 or 2");
  verify->add_option("--k", k, "Negative factors 2k (problem 2)");
  verify->add_option("--fibers", t_fibers, "List fiber sizes of V for this t instead");
  verify->callback([&] {
    input = {{"problem", problem}, {"k", k}, {"fibers", t_fibers}};
    action = [&]() -> json {
      if (t_fibers > 0) {
        json sizes = json::array();
        for (int nu = 0; nu <= t_fibers / 2; ++nu)
          sizes.push_back({{"nu", nu}, {"formula", fiber_size(t_fibers, nu)},
                           {"enumerated", fiber_size_enumerated(t_fibers, nu)}});
        json out = {{"t", t_fibers}, {"fibers", sizes}};
        if (k > 0) out["restricted"] = restricted_space(t_fibers, k);
        return out;
      }
      if (problem == 1) return verify_problem1();
      if (problem == 2) return verify_problem2(k);
      throw Error(Errc::OutOfRange, "--problem must be 1 or 2");
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Class groups from forms and the fundamental unit");
  oracle->add_option("d", a1)->required();
  oracle->callback([&] {
    input = {{"d", a1}};
    action = [&] {
      const Discriminant d = factor_discriminant(parse_integer(a1));
      json out = {{"d", d}};
      if (sgn(d.value()) < 0) {
        out["class_group"] = class_group(d, true, g.oracle());
        return out;
      }
      out.update(oracle_section(d, g));
      return out;
    };
  });

  auto* survey = app.add_subcommand("survey", "Run a check over a range of discriminants (JSON lines)");
  survey->add_option("--min", smin, "Smallest d")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  survey->add_option("--max", smax, "Largest d")->required()->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40));
  survey->add_option("--shape", shape_s,
                     "any | positive-primes | odd-positive-primes | two-positive-primes | three-positive-primes | mixed");
  survey->add_option("--check", check_s, "none | redei-vs-oracle | theorem1 | octic | scholz-unit | pell | tower | genus");
  survey->callback([&] {
    input = {{"min", smin}, {"max", smax}, {"shape", shape_s}, {"check", check_s}};
    action = [&]() -> json {
      SurveyOptions opt;
      opt.min = smin;
      opt.max = smax;
      const auto check = check_from_string(check_s);
      if (!check) throw Error(Errc::InvalidArgument, "unknown check '" + check_s + "'");
      opt.check = *check;
      opt.shape = default_shape(opt.check);
      if (!shape_s.empty()) {
        const auto shape = shape_from_string(shape_s);
        if (!shape) throw Error(Errc::InvalidArgument, "unknown shape '" + shape_s + "'");
        opt.shape = *shape;
      }
      opt.jobs = g.jobs > 0 ? g.jobs : jobs_from_environment(std::max(1U, std::thread::hardware_concurrency()));
      opt.solver = g.solver();
      opt.oracle = g.oracle();
      if (g.csv) out << "d,t,status\n";
      const SurveySummary s = run_survey(opt, [&](const SurveyRecord& r) {
        if (g.csv)
          out << r.payload["d"].dump() << ',' << r.payload["t"].dump() << ',' << r.payload["status"].get<std::string>()
              << '\n';
        else
          out << r.payload.dump() << '\n';
      });
      const json summary = {{"summary", to_json(s)}, {"check", std::string(to_string(opt.check))},
                            {"shape", std::string(to_string(opt.shape))}};
      if (g.csv)
        err << summary.dump() << '\n';
      else
        out << summary.dump() << '\n';
      survey_exit = s.breaches > 0 ? kBreach : s.failed > 0 ? kViolation : kOk;
      return nullptr;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (g.json_out && g.csv) {
    err << "--json and --csv are exclusive\n";
    return kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  try {
    json result = action();
    if (result.is_null()) return survey_exit;
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    const std::string name = app.get_subcommands().front()->get_name();
    out << make_envelope(name, input, result, ms).dump(2) << '\n';
    if (name == "verify-f2" && result.contains("counterexamples") && result["counterexamples"].get<std::int64_t>() > 0)
      return kViolation;
    return kOk;
  } catch (const Error& e) {
    err << "qrank: " << e.what() << '\n';
    return exit_for(e);
  }
}

}  // namespace qrank::cli
