#include "qrank/scholz.hpp"

#include "qrank/error.hpp"

namespace qrank {

ScholzReport theorem1_check(const Discriminant& d, const C4Factorization& f, const SolverConfig& config) {
  if (!d.odd() || !d.all_positive_factors())
    throw Error(Errc::InvalidArgument, d.to_string() + " is not an odd product of positive prime discriminants");
  if (!(f.d1.value() * f.d2.value() == d.value()))
    throw Error(Errc::InvalidArgument, "factorization does not multiply to d");
  ScholzReport rep;
  rep.d = d;
  rep.factorization = f;
  rep.sym12 = quartic_symbol(f.d1.value(), f.d2);
  rep.sym21 = quartic_symbol(f.d2.value(), f.d1);
  rep.generator = construct_generator(f.d1, f.d2, config);
  rep.predicted_real = rep.sym12 == rep.sym21;
  rep.observed_real = rep.generator.totally_positive();
  if (rep.predicted_real) rep.octic_possible = rep.sym12 == 1;
  if (rep.predicted_real != rep.observed_real)
    throw Error(Errc::TheoremViolation, "reality of K disagrees with the quartic symbols for d = " + d.to_string() +
                                            " = " + f.d1.to_string() + " * " + f.d2.to_string());
  return rep;
}

bool parity_identity_check(const QuarticGenerator& gen) {
  const int lhs = quartic_symbol(gen.d1.value(), gen.d2) * quartic_symbol(gen.d2.value(), gen.d1);
  const Integer e = abs(gen.solution.x) + gen.solution.y - 1;
  if (mpz_odd_p(e.get_mpz_t())) throw Error(Errc::InvalidArgument, "|x| + y must be odd");
  const Integer half = e / 2;
  const int rhs = mpz_odd_p(half.get_mpz_t()) ? -1 : 1;
  return lhs == rhs;
}

bool intermediate_identities_check(const QuarticGenerator& gen) {
  const auto& [x, y, z] = gen.solution;
  const Integer& d1 = gen.d1.value();
  const Integer& d2 = gen.d2.value();
  auto coprime = [](const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g == 1;
  };
  int checked = 0;
  bool ok = true;
  if (coprime(Integer(x * y), d2)) {
    ++checked;
    ok = ok && kronecker(x, d2) == quartic_symbol(d1, gen.d2) * kronecker(y, d2);
  }
  if (coprime(Integer(x * z), d1)) {
    ++checked;
    ok = ok && kronecker(x, d1) == quartic_symbol(d2, gen.d1) * kronecker(z, d1);
  }
  const Integer ax = abs(x);
  if (coprime(x, Integer(d1 * d2 * y * z))) {
    ++checked;
    ok = ok && kronecker(Integer(-d1), ax) == kronecker(d2, ax);
  }
  if (checked == 0) throw Error(Errc::UndefinedSymbol, "no identity is defined for this solution");
  return ok;
}

std::string_view to_string(PellCase c) {
  switch (c) {
    case PellCase::DifferentSymbols: return "different-symbols";
    case PellCase::BothMinusOne: return "both-minus-one";
    case PellCase::BothPlusOne: return "both-plus-one";
  }
  return "unknown";
}

PellPrediction pell_criterion(const PrimeDiscriminant& p, const PrimeDiscriminant& q, const PrimeDiscriminant& r) {
  for (const auto* x : {&p, &q, &r})
    if (x->even() || !x->positive())
      throw Error(Errc::PatternMismatch, x->value().get_str() + " is not a prime = 1 mod 4");
  if (p == q || p == r || q == r) throw Error(Errc::PatternMismatch, "p, q, r must be distinct");
  if (kronecker(p.value(), q.prime()) != 1 || kronecker(p.value(), r.prime()) != 1 ||
      kronecker(q.value(), r.prime()) != -1)
    throw Error(Errc::PatternMismatch, "need (p/q) = (p/r) = 1 and (q/r) = -1");
  PellPrediction out;
  out.p = p.prime();
  out.q = q.prime();
  out.r = r.prime();
  const Discriminant qr = Discriminant::from_factors({q, r});
  out.sym_p_qr = quartic_symbol(p.value(), qr);
  out.sym_qr_p = quartic_symbol_prime(qr.value(), p);
  if (out.sym_p_qr != out.sym_qr_p) {
    out.pell_case = PellCase::DifferentSymbols;
    out.predicted_norm = 1;
  } else if (out.sym_p_qr == -1) {
    out.pell_case = PellCase::BothMinusOne;
    out.predicted_norm = -1;
    out.predicted_two_sylow = ClassGroupStructure{{2, 4}, 8, true};
  } else {
    out.pell_case = PellCase::BothPlusOne;
  }
  return out;
}

}  // namespace qrank
