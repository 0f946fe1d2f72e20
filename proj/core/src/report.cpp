#include "qrank/report.hpp"

namespace qrank {

using nlohmann::json;

json integer_json(const Integer& n) {
  if (fits_int64(n)) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str());
}

void to_json(json& j, const Discriminant& d) {
  json factors = json::array();
  for (const auto& f : d.factors()) factors.push_back(integer_json(f.value()));
  j = json{{"value", integer_json(d.value())}, {"factors", std::move(factors)}};
}

void to_json(json& j, const RedeiMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.t; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.t; ++k) row.push_back(m.at(i, k) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  j = json{{"t", m.t}, {"rows", std::move(rows)}, {"rank", m.rank()}};
}

void to_json(json& j, const C4Factorization& f) {
  j = json{{"d1", integer_json(f.d1.value())}, {"d2", integer_json(f.d2.value())}};
}

void to_json(json& j, const ConicSolution& s) {
  j = json{{"x", integer_json(s.x)}, {"y", integer_json(s.y)}, {"z", integer_json(s.z)}};
}

void to_json(json& j, const QuarticGenerator& g) {
  j = json{{"d1", integer_json(g.d1.value())},
           {"d2", integer_json(g.d2.value())},
           {"solution", g.solution},
           {"two_primary", g.two_primary},
           {"signs", {g.sign_plus, g.sign_minus}},
           {"unit_power", g.unit_power}};
}

void to_json(json& j, const Twist& tw) {
  j = json{{"dprime", integer_json(tw.dprime.value())},
           {"x", integer_json(tw.x)},
           {"y", integer_json(tw.y)},
           {"signs", {tw.sign_plus, tw.sign_minus}}};
}

void to_json(json& j, const ScholzReport& r) {
  j = json{{"d", integer_json(r.d.value())},
           {"factorization", r.factorization},
           {"sym12", r.sym12},
           {"sym21", r.sym21},
           {"generator", r.generator},
           {"predicted_real", r.predicted_real},
           {"observed_real", r.observed_real},
           {"octic_possible", r.octic_possible ? json(*r.octic_possible) : json(nullptr)}};
}

void to_json(json& j, const PellPrediction& p) {
  j = json{{"p", integer_json(p.p)},
           {"q", integer_json(p.q)},
           {"r", integer_json(p.r)},
           {"d", integer_json(Integer(p.p * p.q * p.r))},
           {"sym_p_qr", p.sym_p_qr},
           {"sym_qr_p", p.sym_qr_p},
           {"case", std::string(to_string(p.pell_case))},
           {"predicted_norm", p.predicted_norm ? json(*p.predicted_norm) : json(nullptr)},
           {"predicted_two_sylow", p.predicted_two_sylow ? json(p.predicted_two_sylow->elementary_divisors)
                                                         : json(nullptr)}};
}

void to_json(json& j, const ClassGroupStructure& g) {
  j = json{{"elementary_divisors", g.elementary_divisors}, {"order", g.order}, {"narrow", g.narrow}};
}

void to_json(json& j, const FundamentalUnit& u) {
  j = json{{"u", integer_json(u.u)}, {"v", integer_json(u.v)}, {"norm", u.norm}, {"period", u.period}};
}

void to_json(json& j, const GSInstance& gs) {
  j = json{{"rho", gs.rho}, {"rank_ek_h", gs.rank_ek_h}, {"rank_ek_units", gs.rank_ek_units}, {"p", gs.p}};
}

void to_json(json& j, const TowerCertificate& c) {
  json gens = json::array();
  for (const auto& g : c.base_field_gens) gens.push_back(integer_json(g.value()));
  json ram = json::array();
  for (const auto& rp : c.ramified)
    ram.push_back({{"prime", integer_json(rp.prime)},
                   {"discriminant", integer_json(rp.discriminant)},
                   {"primes_above", rp.primes_above},
                   {"residue_degree", rp.residue_degree}});
  j = json{{"schema", kTowerSchema},
           {"d", integer_json(c.d.value())},
           {"strict_four_rank", c.strict_four_rank},
           {"case_tag", c.case_tag ? json(std::string(to_string(*c.case_tag))) : json(nullptr)},
           {"base_field_gens", std::move(gens)},
           {"extension_disc", c.case_tag ? integer_json(c.extension_disc.value()) : json(nullptr)},
           {"ramified", std::move(ram)},
           {"ramified_infinite", c.ramified_infinite},
           {"minus_one_is_norm", c.minus_one_is_norm},
           {"gs", c.gs},
           {"verdict", c.verdict}};
}

void to_json(json& j, const FactorClass& u) { j = json{{"t", u.t()}, {"coords", u.coords()}, {"s", s_value(u)}}; }

void to_json(json& j, const RestrictedSpace& rs) {
  j = json{{"t", rs.t}, {"k", rs.k}, {"dim", rs.dim}, {"fiber_sizes", rs.fiber_sizes}};
}

void to_json(json& j, const Problem1Report& r) {
  j = json{{"problem", 1},
           {"t", r.t},
           {"subspaces", r.subspaces},
           {"distinct_subspaces", r.distinct_subspaces},
           {"vacuous", r.vacuous},
           {"counterexamples", r.counterexamples}};
}

void to_json(json& j, const Problem2Report& r) {
  j = json{{"problem", 2},
           {"t", r.t},
           {"k", r.k},
           {"subspaces", r.subspaces},
           {"distinct_subspaces", r.distinct_subspaces},
           {"counterexamples", r.counterexamples},
           {"v3_size", r.v3_size},
           {"six_count", r.six_count < 0 ? json(nullptr) : json(r.six_count)},
           {"witness_holds", r.witness_holds}};
}

json make_envelope(const std::string& command, json input, json result, std::int64_t elapsed_ms) {
  return json{{"schema", kReportSchema}, {"version", kVersion},      {"command", command},
              {"input", std::move(input)}, {"result", std::move(result)}, {"elapsed_ms", elapsed_ms}};
}

}  // namespace qrank
