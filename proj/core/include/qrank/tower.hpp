#pragma once

// Golod-Shafarevich certificates for infinite 2-class field towers of real
// quadratic fields with strict 4-rank at least 4.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qrank/symbols.hpp"

namespace qrank {

struct GSInstance {
  /// Places of the base field ramified in K.
  std::int64_t rho = 0;
  /// Upper bound for rank_2 of E_F / H, H the units that are norms from K.
  std::int64_t rank_ek_h = 0;
  /// rank_2 of the unit group of K.
  std::int64_t rank_ek_units = 0;
  int p = 2;

  friend bool operator==(const GSInstance&, const GSInstance&) = default;
};

/// max(0, num_ram - rank_ek_h - 1).
std::int64_t jehne_lower_bound(std::int64_t num_ram, std::int64_t rank_ek_h);

/// rho >= 3 + rank_ek_h + 2 sqrt(rank_ek_units + 1), decided in integers.
bool gs_inequality(const GSInstance& gs);

enum class CaseTag { DirectGS, FivePositive, SixPositiveSingleton, SixPositivePairSwap, SixMixed, SevenMixed };

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view s);

/// A rational prime ramified in K/F with the number of primes of F above it.
struct RamifiedPrime {
  Integer prime;
  /// The prime discriminant of d at this prime.
  Integer discriminant;
  std::int64_t primes_above = 0;
  std::int64_t residue_degree = 1;
};

struct TowerCertificate {
  Discriminant d;
  int strict_four_rank = 0;
  std::optional<CaseTag> case_tag;
  /// F = Q(sqrt g : g in base_field_gens); empty means F = Q.
  std::vector<Discriminant> base_field_gens;
  /// K = F(sqrt extension_disc).
  Discriminant extension_disc;
  std::vector<RamifiedPrime> ramified;
  /// Real places of F ramified in K.
  std::int64_t ramified_infinite = 0;
  bool minus_one_is_norm = false;
  GSInstance gs;
  bool verdict = false;
};

struct TowerOptions {
  /// Try the proof cases even when the strict 4-rank is below 4.
  bool relaxed = false;
};

/// Number of primes of Q(sqrt g : g in base_gens) above q; RamifiedInput if q divides a generator.
std::int64_t splitting_count(const std::vector<Discriminant>& base_gens, const PrimeDiscriminant& q);

/// GS data for K = F(sqrt delta), F = Q(sqrt g : g in base_gens); all discriminants divide d.
TowerCertificate analyze_extension(const Discriminant& d, const std::vector<Discriminant>& base_gens,
                                   const Discriminant& delta);

/// Throws CaseNotCovered if the 4-rank is at least 4 and no case yields a certificate.
TowerCertificate certify_tower(const Discriminant& d, const TowerOptions& options = {});

/// Certificate re-check: stored GS data satisfies the inequality and rho matches splitting counts.
bool verify_certificate(const TowerCertificate& cert);

/// Assignments of (-q_i/q_j) for `count` negative odd prime discriminants consistent with
/// reciprocity and with every two-factor split being a C4+-factorization.
std::int64_t negative_prime_consistent_assignments(int count);

}  // namespace qrank
