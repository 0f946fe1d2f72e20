#include <doctest.h>

#include <map>

#include "brute.hpp"
#include "qrank/scholz.hpp"

using namespace qrank;

namespace {

Discriminant D(std::int64_t n) { return factor_discriminant(n); }

QuarticGenerator gen(std::int64_t d1, std::int64_t d2, std::int64_t x, std::int64_t y, std::int64_t z) {
  QuarticGenerator g;
  g.d1 = D(d1);
  g.d2 = D(d2);
  g.solution = {Integer(x), Integer(y), Integer(z)};
  g.two_primary = true;
  g.sign_plus = embedding_sign(g.solution.x, g.solution.y, Integer(d1), 1);
  g.sign_minus = embedding_sign(g.solution.x, g.solution.y, Integer(d1), -1);
  return g;
}

PellPrediction pell(std::int64_t p, std::int64_t q, std::int64_t r) {
  return pell_criterion(PrimeDiscriminant(Integer(p)), PrimeDiscriminant(Integer(q)), PrimeDiscriminant(Integer(r)));
}

}  // namespace

TEST_CASE("Theorem 1 examples") {
  const ScholzReport r205 = theorem1_check(D(205), make_factorization(D(5), D(41)));
  CHECK(r205.sym12 == -1);
  CHECK(r205.sym21 == 1);
  CHECK_FALSE(r205.predicted_real);
  CHECK_FALSE(r205.observed_real);
  CHECK(r205.generator.solution.x == -11);
  CHECK(r205.generator.solution.y == 4);
  CHECK_FALSE(r205.octic_possible.has_value());

  const ScholzReport r505 = theorem1_check(D(505), make_factorization(D(5), D(101)));
  CHECK(r505.sym12 == 1);
  CHECK(r505.sym21 == 1);
  CHECK(r505.predicted_real);
  CHECK(r505.observed_real);
  CHECK(r505.generator.totally_positive());
  REQUIRE(r505.octic_possible.has_value());
  CHECK(*r505.octic_possible);
}

TEST_CASE("Theorem 1 input checks") {
  CHECK_THROWS_AS(theorem1_check(D(1105), make_factorization(D(5), D(221))), Error);
  CHECK_THROWS_AS(theorem1_check(D(136), make_factorization(D(8), D(17))), Error);
}

TEST_CASE("parity identity examples") {
  CHECK(parity_identity_check(gen(5, 41, -11, 4, 1)));
  CHECK(parity_identity_check(gen(5, 101, 11, 2, 1)));
  CHECK(parity_identity_check(gen(5, 41, 19, 8, 1)));
}

TEST_CASE("intermediate identities examples") {
  CHECK(intermediate_identities_check(gen(5, 101, 11, 2, 1)));
  CHECK(intermediate_identities_check(gen(5, 41, -11, 4, 1)));
}

TEST_CASE("octic corollary: both symbols -1 gives a cyclic narrow 2-class group of order 4") {
  int both_minus = 0;
  for (std::int64_t d = 5; d < 20000; ++d) {
    if (!brute::positive_prime_product(d)) continue;
    const Discriminant disc = D(d);
    if (disc.t() != 2) continue;
    const auto& p1 = disc.factors()[0];
    const auto& p2 = disc.factors()[1];
    if (kronecker(p1.value(), p2.prime()) != 1) continue;
    const int s12 = quartic_symbol(p1.value(), D(p2.value().get_si()));
    const int s21 = quartic_symbol(p2.value(), D(p1.value().get_si()));
    if (s12 != -1 || s21 != -1) continue;
    CAPTURE(d);
    REQUIRE(two_sylow(class_group(disc, true)).elementary_divisors == std::vector<std::int64_t>{4});
    ++both_minus;
  }
  CHECK(both_minus > 10);
}

TEST_CASE("Scholz: unequal symbols force a unit of norm +1") {
  int unequal = 0;
  for (std::int64_t d = 5; d < 20000; ++d) {
    if (!brute::positive_prime_product(d)) continue;
    const Discriminant disc = D(d);
    for (const auto& f : enumerate_c4_factorizations(disc)) {
      if (quartic_symbol(f.d1.value(), f.d2) == quartic_symbol(f.d2.value(), f.d1)) continue;
      CAPTURE(d);
      REQUIRE(fundamental_unit(disc).norm == 1);
      ++unequal;
    }
  }
  CHECK(unequal > 100);
}

TEST_CASE("Pell criterion examples") {
  const PellPrediction p = pell(5, 41, 109);
  CHECK(p.sym_p_qr == -1);
  CHECK(p.sym_qr_p == -1);
  CHECK(p.pell_case == PellCase::BothMinusOne);
  REQUIRE(p.predicted_norm.has_value());
  CHECK(*p.predicted_norm == -1);
  REQUIRE(p.predicted_two_sylow.has_value());
  CHECK(p.predicted_two_sylow->elementary_divisors == std::vector<std::int64_t>{2, 4});
  const Discriminant d = D(22345);
  CHECK(fundamental_unit(d).norm == -1);
  CHECK(two_sylow(class_group(d, true)).elementary_divisors == p.predicted_two_sylow->elementary_divisors);

  const PellPrediction i = pell(29, 5, 13);
  CHECK(i.pell_case == PellCase::DifferentSymbols);
  REQUIRE(i.predicted_norm.has_value());
  CHECK(*i.predicted_norm == 1);
  CHECK(fundamental_unit(D(1885)).norm == 1);

  try {
    pell(5, 13, 17);
    FAIL("pattern accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PatternMismatch);
  }
  CHECK(to_string(PellCase::BothPlusOne) == "both-plus-one");
}

TEST_CASE("Pell criterion against the oracle for d = pqr < 10^5") {
  std::map<PellCase, int> seen;
  const auto primes = brute::primes_below(100000 / 65 + 1);
  for (std::int64_t p : primes) {
    if (p % 4 != 1) continue;
    for (std::int64_t q : primes)
      for (std::int64_t r : primes) {
        if (q % 4 != 1 || r % 4 != 1 || q >= r || p == q || p == r || p * q * r >= 100000) continue;
        if (brute::legendre(p, q) != 1 || brute::legendre(p, r) != 1 || brute::legendre(q, r) != -1) continue;
        const PellPrediction pr = pell(p, q, r);
        const Discriminant d = D(p * q * r);
        ++seen[pr.pell_case];
        CAPTURE(p * q * r);
        if (pr.predicted_norm) REQUIRE(fundamental_unit(d).norm == *pr.predicted_norm);
        if (pr.predicted_two_sylow) {
          REQUIRE(two_sylow(class_group(d, true)).elementary_divisors == pr.predicted_two_sylow->elementary_divisors);
          REQUIRE(two_sylow(class_group(d, false)).elementary_divisors == pr.predicted_two_sylow->elementary_divisors);
        }
        if (pr.pell_case == PellCase::BothPlusOne) REQUIRE_FALSE(pr.predicted_norm.has_value());
      }
  }
  CHECK(seen[PellCase::DifferentSymbols] > 0);
  CHECK(seen[PellCase::BothMinusOne] > 0);
  CHECK(seen[PellCase::BothPlusOne] > 0);
}
