#include <doctest.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>

#include "brute.hpp"
#include "qrank/redei.hpp"
#include "qrank/tower.hpp"

using namespace qrank;

namespace {

Discriminant D(std::int64_t n) { return factor_discriminant(n); }

// smallest product of five positive prime discriminants, pairwise quadratic residues
std::int64_t smallest_five_positive() {
  std::vector<std::int64_t> pd{8};
  for (std::int64_t p : brute::primes_below(2000))
    if (p % 4 == 1) pd.push_back(p);
  std::sort(pd.begin(), pd.end());
  std::int64_t best = INT64_MAX;
  std::vector<std::int64_t> pick;
  std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t from, std::int64_t prod) {
    if (pick.size() == 5) {
      best = std::min(best, prod);
      return;
    }
    for (std::size_t i = from; i < pd.size(); ++i) {
      const std::int64_t p = pd[i];
      if (prod > best / p) break;
      bool ok = true;
      for (std::int64_t q : pick) {
        const std::int64_t oq = q == 8 ? 2 : q;
        const std::int64_t op = p == 8 ? 2 : p;
        if (kronecker(p, oq) != 1 || kronecker(q, op) != 1) ok = false;
      }
      if (!ok) continue;
      pick.push_back(p);
      dfs(i + 1, prod * p);
      pick.pop_back();
    }
  };
  dfs(0, 1);
  return best;
}

// symbol assignments for count primes = 3 mod 4 with (q_i q_j / q_l) = +1 for distinct i, j, l
std::int64_t consistent_negative_assignments(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::int64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<std::vector<int>> leg(n, std::vector<int>(n, 0));
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto [i, j] = slots[k];
      leg[i][j] = ((bits >> k) & 1U) ? -1 : 1;
      leg[j][i] = -leg[i][j];  // reciprocity for two primes = 3 mod 4
    }
    bool ok = true;
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (i != l && j != l && leg[i][l] * leg[j][l] != 1) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("Jehne bound") {
  CHECK(jehne_lower_bound(12, 3) == 8);
  CHECK(jehne_lower_bound(1, 0) == 0);
  CHECK(jehne_lower_bound(5, 1) == 3);
  CHECK(jehne_lower_bound(2, 5) == 0);
}

TEST_CASE("Golod-Shafarevich inequality examples") {
  CHECK(gs_inequality({12, 3, 8, 2}));
  CHECK_FALSE(gs_inequality({11, 3, 8, 2}));
  CHECK(gs_inequality({12, 2, 4, 2}));
  CHECK_FALSE(gs_inequality({0, 0, 0, 2}));
  CHECK_THROWS_AS(gs_inequality({-1, 0, 0, 2}), Error);
}

TEST_CASE("Golod-Shafarevich inequality matches floating point away from the boundary") {
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const GSInstance gs{brute::uniform(0, 200), brute::uniform(0, 60), brute::uniform(0, 400), 2};
    const long double margin =
        static_cast<long double>(gs.rho) - 3.0L - gs.rank_ek_h - 2.0L * std::sqrt(static_cast<long double>(gs.rank_ek_units + 1));
    if (std::fabs(margin) <= 1e-6L) {
      CHECK(gs_inequality(gs));
      continue;
    }
    REQUIRE(gs_inequality(gs) == (margin > 0));
    ++compared;
  }
  CHECK(compared > 9000);
}

TEST_CASE("splitting counts") {
  CHECK(splitting_count({D(5), D(41)}, PrimeDiscriminant(Integer(61))) == 4);
  CHECK(splitting_count({D(5)}, PrimeDiscriminant(Integer(13))) == 1);
  CHECK(splitting_count({}, PrimeDiscriminant(Integer(13))) == 1);
  try {
    splitting_count({D(5), D(41)}, PrimeDiscriminant(Integer(41)));
    FAIL("ramified prime accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RamifiedInput);
  }
}

TEST_CASE("small discriminants get no certificate") {
  const TowerCertificate c = certify_tower(D(205));
  CHECK_FALSE(c.verdict);
  CHECK(c.strict_four_rank == 1);
  CHECK(verify_certificate(c));
}

TEST_CASE("the five positive prime case") {
  const std::int64_t d = smallest_five_positive();
  CHECK(d == 1510366405);
  const Discriminant disc = D(d);
  CHECK(redei_matrix(disc).rank() == 0);
  CHECK(four_rank_narrow(disc) == 4);
  const TowerCertificate c = certify_tower(disc);
  REQUIRE(c.verdict);
  REQUIRE(c.case_tag.has_value());
  CHECK(*c.case_tag == CaseTag::FivePositive);
  CHECK(c.gs.rho == 12);
  CHECK(c.gs.rank_ek_h <= 3);
  CHECK(c.gs.rank_ek_units == 8);
  CHECK(c.gs.rho - 3 - c.gs.rank_ek_h == 6);  // 12 = 3 + 3 + 2 * 3
  CHECK(c.minus_one_is_norm);
  CHECK(verify_certificate(c));

  std::int64_t rho = c.ramified_infinite;
  for (const auto& rp : c.ramified) rho += rp.primes_above;
  CHECK(rho == c.gs.rho);
}

TEST_CASE("every proof case yields a self-verifying certificate") {
  const std::vector<std::pair<std::int64_t, CaseTag>> cases{
      {1510366405, CaseTag::FivePositive},
      {2073387592, CaseTag::FivePositive},
      {8485400365, CaseTag::SixPositiveSingleton},
      {87337217885, CaseTag::SixPositivePairSwap},
      {34294513269, CaseTag::SixMixed},
      {561827798121, CaseTag::SevenMixed},
      {89938329065, CaseTag::DirectGS},
  };
  for (const auto& [d, tag] : cases) {
    CAPTURE(d);
    const TowerCertificate c = certify_tower(D(d));
    REQUIRE(c.verdict);
    REQUIRE(c.case_tag.has_value());
    CHECK(*c.case_tag == tag);
    CHECK(gs_inequality(c.gs));
    CHECK(verify_certificate(c));
    CHECK(c.strict_four_rank >= 4);
  }
}

TEST_CASE("tampered certificates are rejected") {
  TowerCertificate c = certify_tower(D(1510366405));
  c.gs.rho = 11;
  CHECK_FALSE(verify_certificate(c));
  c = certify_tower(D(1510366405));
  c.ramified[0].primes_above += 1;
  CHECK_FALSE(verify_certificate(c));
}

TEST_CASE("six negative prime discriminants never satisfy every C4 condition") {
  CHECK(consistent_negative_assignments(6) == 0);
  CHECK(negative_prime_consistent_assignments(6) == 0);
  CHECK(consistent_negative_assignments(2) > 0);
}

TEST_CASE("case tags round trip") {
  for (auto tag : {CaseTag::DirectGS, CaseTag::FivePositive, CaseTag::SixPositiveSingleton,
                   CaseTag::SixPositivePairSwap, CaseTag::SixMixed, CaseTag::SevenMixed})
    CHECK(case_tag_from_string(to_string(tag)) == tag);
  CHECK_FALSE(case_tag_from_string("Nope").has_value());
}
