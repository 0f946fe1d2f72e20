#pragma once

// Solutions of x^2 - d1 y^2 = d2 z^2 and the 2-primary normalization of
// alpha = x + y sqrt(d1).

#include <atomic>
#include <cstdint>
#include <vector>

#include "qrank/integer.hpp"
#include "qrank/redei.hpp"
#include "qrank/symbols.hpp"

namespace qrank {

struct ConicSolution {
  Integer x;
  Integer y;
  Integer z;

  friend bool operator==(const ConicSolution&, const ConicSolution&) = default;
};

struct SolverConfig {
  /// The search box is z <= scale * (isqrt(4 d1) + 1), y <= scale * (isqrt(4 d2) + 1).
  std::int64_t bound_scale = 1;
  /// Only accept odd z (then x is odd and y even for odd d).
  bool odd_alpha = false;
  /// Powers eta^k, |k| <= unit_orbit_bound, tried during normalization.
  int unit_orbit_bound = 8;
  /// Polled during long searches; set to abandon with Error{Cancelled}.
  const std::atomic<bool>* cancel = nullptr;
};

/// Primitive solution with z > 0, y >= 0, x > 0, smallest z and then smallest x.
/// Throws NoC4Factorization if (d1, d2) is not a C4+ pair, SearchExhausted if the box is empty.
ConicSolution solve_conic(const Discriminant& d1, const Discriminant& d2, const SolverConfig& config = {});

bool is_valid_solution(const ConicSolution& s, const Integer& d1, const Integer& d2);

/// Sign of x + y sqrt(d1) under sqrt(d1) -> branch * sqrt(d1), d1 > 0 not a square.
int embedding_sign(const Integer& x, const Integer& y, const Integer& d1, int branch);

/// alpha = x + y sqrt(d1) is congruent to a square modulo 4 O, O the maximal order of Q(sqrt d1).
/// Throws EvenAlpha when the norm of alpha is even.
bool is_two_primary(const Integer& x, const Integer& y, const Discriminant& d1);

/// eta = a + b sqrt(d1): the least power of the fundamental unit lying in Z[sqrt d1] with norm +1.
struct NormOneUnit {
  Integer a;
  Integer b;
  int power = 1;
};

NormOneUnit norm_one_unit(const Discriminant& d1);

struct QuarticGenerator {
  Discriminant d1;
  Discriminant d2;
  /// alpha = x + y sqrt(d1) with y >= 0 and x signed.
  ConicSolution solution;
  bool two_primary = false;
  int sign_plus = 0;
  int sign_minus = 0;
  /// alpha = (+-) original * eta^unit_power (up to the sign of x).
  int unit_power = 0;

  bool totally_positive() const { return sign_plus > 0 && sign_minus > 0; }
};

/// (x, y) for alpha * eta^k, k in [-bound, bound], ordered 0, 1, -1, 2, -2, ...
std::vector<ConicSolution> unit_orbit(const ConicSolution& s, const Discriminant& d1, int bound);

/// Searches the unit orbit and sign flips for a 2-primary alpha; throws NormalizationFailed.
QuarticGenerator normalize_two_primary(const ConicSolution& s, const Discriminant& d1, const Discriminant& d2,
                                       const SolverConfig& config = {});

/// solve_conic with odd z (widening the box up to 16 times), then normalize_two_primary.
/// For 8 | d1 d2 the factor divisible by 8 must be d1.
QuarticGenerator construct_generator(const Discriminant& d1, const Discriminant& d2,
                                     const SolverConfig& config = {});

/// The orientation construct_generator accepts for a factorization: f as is, or swapped when 8 | d2.
std::pair<Discriminant, Discriminant> generator_orientation(const C4Factorization& f);

}  // namespace qrank
