#include "qrank/tower.hpp"

#include <algorithm>

#include "qrank/error.hpp"
#include "qrank/gf2.hpp"
#include "qrank/redei.hpp"

namespace qrank {

std::int64_t jehne_lower_bound(std::int64_t num_ram, std::int64_t rank_ek_h) {
  if (num_ram < 0 || rank_ek_h < 0) throw Error(Errc::InvalidArgument, "ranks must be nonnegative");
  return std::max<std::int64_t>(0, num_ram - rank_ek_h - 1);
}

bool gs_inequality(const GSInstance& gs) {
  if (gs.rho < 0 || gs.rank_ek_h < 0 || gs.rank_ek_units < 0)
    throw Error(Errc::InvalidArgument, "GS instance fields must be nonnegative");
  const std::int64_t lhs = gs.rho - 3 - gs.rank_ek_h;
  if (lhs < 0) return false;
  __extension__ typedef __int128 wide_t;
  return static_cast<wide_t>(lhs) * lhs >= static_cast<wide_t>(4) * (gs.rank_ek_units + 1);
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::DirectGS: return "DirectGS";
    case CaseTag::FivePositive: return "FivePositive";
    case CaseTag::SixPositiveSingleton: return "SixPositiveSingleton";
    case CaseTag::SixPositivePairSwap: return "SixPositivePairSwap";
    case CaseTag::SixMixed: return "SixMixed";
    case CaseTag::SevenMixed: return "SevenMixed";
  }
  return "Unknown";
}

std::optional<CaseTag> case_tag_from_string(std::string_view s) {
  for (auto tag : {CaseTag::DirectGS, CaseTag::FivePositive, CaseTag::SixPositiveSingleton,
                   CaseTag::SixPositivePairSwap, CaseTag::SixMixed, CaseTag::SevenMixed})
    if (to_string(tag) == s) return tag;
  return std::nullopt;
}

std::int64_t splitting_count(const std::vector<Discriminant>& base_gens, const PrimeDiscriminant& q) {
  if (base_gens.size() > 62) throw Error(Errc::OutOfRange, "too many generators");
  bool inert = false;
  for (const auto& g : base_gens) {
    const int s = kronecker(g.value(), q.prime());
    if (s == 0) throw Error(Errc::RamifiedInput, q.value().get_str() + " divides " + g.to_string());
    if (s == -1) inert = true;
  }
  const std::int64_t n = std::int64_t{1} << base_gens.size();
  return inert ? n / 2 : n;
}

namespace {

std::uint64_t or_of(const std::vector<gf2::Row>& v) {
  std::uint64_t acc = 0;
  for (auto r : v) acc |= r;
  return acc;
}

}  // namespace

TowerCertificate analyze_extension(const Discriminant& d, const std::vector<Discriminant>& base_gens,
                                   const Discriminant& delta) {
  TowerCertificate cert;
  cert.d = d;
  cert.base_field_gens = base_gens;
  cert.extension_disc = delta;
  cert.strict_four_rank = four_rank_narrow(d);

  std::vector<gf2::Row> gmasks;
  for (const auto& g : base_gens) gmasks.push_back(d.mask_of(g));
  const auto fbasis = gf2::independent_basis(gmasks);
  if (fbasis.size() != base_gens.size()) throw Error(Errc::InvalidArgument, "base field generators are dependent");
  const std::uint64_t dmask = d.mask_of(delta);
  auto kvecs = gmasks;
  kvecs.push_back(dmask);
  if (gf2::rank(kvecs) != gmasks.size() + 1) throw Error(Errc::InvalidArgument, "extension is trivial over F");

  const auto gamma = gf2::span_elements(fbasis);
  const std::int64_t n = static_cast<std::int64_t>(gamma.size());
  const bool f_real = std::all_of(gamma.begin(), gamma.end(), [&d](gf2::Row m) { return sgn(d.sub(m).value()) > 0; });
  const bool k_real = f_real && sgn(delta.value()) > 0;

  const std::uint64_t f_ram = or_of(gmasks);
  bool minus_one_norm = f_real;
  std::int64_t rho = 0;
  const auto factors = d.factors();
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (!(dmask & bit) || (f_ram & bit)) continue;
    const Integer& q = factors[j].prime();
    std::int64_t g = 0;
    for (gf2::Row m : gamma)
      if (kronecker(d.sub(m).value(), q) == 1) ++g;
    RamifiedPrime rp{q, factors[j].value(), g, n / g};
    rho += g;
    if (q == 2) {
      minus_one_norm = false;
    } else {
      Integer qf;
      mpz_pow_ui(qf.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(rp.residue_degree));
      if (mpz_fdiv_ui(qf.get_mpz_t(), 4) != 1) minus_one_norm = false;
    }
    cert.ramified.push_back(std::move(rp));
  }
  if (f_real && !k_real) {
    cert.ramified_infinite = n;
    rho += n;
    minus_one_norm = false;
  }
  const std::int64_t rank_ef = f_real ? n : n / 2;
  cert.minus_one_is_norm = minus_one_norm;
  cert.gs.rho = rho;
  cert.gs.rank_ek_h = minus_one_norm ? rank_ef - 1 : rank_ef;
  cert.gs.rank_ek_units = k_real ? 2 * n : n;
  cert.verdict = gs_inequality(cert.gs);
  return cert;
}

namespace {

struct Candidate {
  CaseTag tag;
  std::vector<std::uint64_t> gens;
  std::uint64_t delta;
};

std::vector<Candidate> proof_candidates(const Discriminant& d) {
  const std::size_t t = d.t();
  const std::uint64_t all = (std::uint64_t{1} << t) - 1;
  const bool positive = d.all_positive_factors();
  std::vector<Candidate> out;
  out.push_back({CaseTag::DirectGS, {}, all});

  // minimal-weight representatives of the kernel classes
  std::vector<std::uint64_t> singles, pairs;
  for (std::uint64_t e : c4_kernel_masks(d)) {
    const std::uint64_t c = all & ~e;
    const std::uint64_t rep = __builtin_popcountll(e) <= __builtin_popcountll(c) ? e : c;
    if (sgn(d.sub(rep).value()) <= 0) continue;
    if (__builtin_popcountll(rep) == 1) singles.push_back(rep);
    if (__builtin_popcountll(rep) == 2) pairs.push_back(rep);
  }
  // factors at 2 go into the base field where possible
  std::uint64_t even_mask = 0;
  for (std::size_t j = 0; j < t; ++j)
    if (d.factors()[j].even()) even_mask |= std::uint64_t{1} << j;
  std::stable_sort(singles.begin(), singles.end(),
                   [even_mask](auto a, auto b) { return (a & even_mask) > (b & even_mask); });

  if (t == 5 && positive) {
    for (std::size_t i = 0; i < singles.size(); ++i)
      for (std::size_t j = i + 1; j < singles.size(); ++j)
        out.push_back({CaseTag::FivePositive, {singles[i], singles[j]}, all & ~(singles[i] | singles[j])});
  }
  if (t == 6 && positive) {
    for (auto s : singles) out.push_back({CaseTag::SixPositiveSingleton, {s}, all & ~s});
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
        if (__builtin_popcountll(pairs[i] & pairs[j]) == 1)
          out.push_back({CaseTag::SixPositivePairSwap, {pairs[i], pairs[j]}, all});
  }
  if (t == 6 && !positive) {
    for (auto s : singles) out.push_back({CaseTag::SixMixed, {s}, all & ~s});
  }
  if (t == 7 && !positive) {
    for (auto s : singles) out.push_back({CaseTag::SevenMixed, {s}, all & ~s});
    for (auto s : pairs) out.push_back({CaseTag::SevenMixed, {s}, all & ~s});
  }
  return out;
}

}  // namespace

TowerCertificate certify_tower(const Discriminant& d, const TowerOptions& options) {
  if (d.trivial() || sgn(d.value()) <= 0) throw Error(Errc::InvalidArgument, "certify_tower needs d > 0");
  TowerCertificate fallback;
  fallback.d = d;
  fallback.strict_four_rank = four_rank_narrow(d);
  if (fallback.strict_four_rank < 4 && !options.relaxed) return fallback;

  for (const auto& c : proof_candidates(d)) {
    std::vector<Discriminant> gens;
    for (auto m : c.gens) gens.push_back(d.sub(m));
    TowerCertificate cert = analyze_extension(d, gens, d.sub(c.delta));
    if (!cert.verdict) continue;
    cert.case_tag = c.tag;
    return cert;
  }
  if (fallback.strict_four_rank >= 4)
    throw Error(Errc::CaseNotCovered, "no certificate found for d = " + d.to_string());
  return fallback;
}

bool verify_certificate(const TowerCertificate& cert) {
  if (gs_inequality(cert.gs) != cert.verdict) return false;
  if (!cert.case_tag) return !cert.verdict;
  std::int64_t rho = cert.ramified_infinite;
  for (const auto& rp : cert.ramified) {
    const std::int64_t g = splitting_count(cert.base_field_gens, PrimeDiscriminant(rp.discriminant));
    if (g != rp.primes_above) return false;
    rho += g;
  }
  if (rho != cert.gs.rho) return false;
  const TowerCertificate again = analyze_extension(cert.d, cert.base_field_gens, cert.extension_disc);
  return again.gs == cert.gs && again.verdict == cert.verdict;
}

std::int64_t negative_prime_consistent_assignments(int count) {
  if (count < 2 || count > 7) throw Error(Errc::OutOfRange, "count must lie in [2, 7]");
  const int n = count;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::int64_t consistent = 0;
  std::vector<int> s(static_cast<std::size_t>(n * n), 1);
  auto at = [&](int i, int j) -> int& { return s[static_cast<std::size_t>(i * n + j)]; };
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    // (-q_i/q_j)(-q_j/q_i) = -1 for q_i, q_j = 3 mod 4
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const auto [i, j] = slots[k];
      at(i, j) = ((bits >> k) & 1U) ? -1 : 1;
      at(j, i) = -at(i, j);
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        for (int l = 0; l < n && ok; ++l) {
          if (l == i || l == j) continue;
          // (q_i q_j / q_l) = +1 and ((d / q_i q_j) / q_i) = +1
          if (at(i, l) * at(j, l) != 1) ok = false;
        }
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i == j) continue;
        int prod = 1;
        for (int m = 0; m < n; ++m)
          if (m != i && m != j) prod *= at(m, i);
        if (prod != 1) ok = false;
      }
    if (ok) ++consistent;
  }
  return consistent;
}

}  // namespace qrank
