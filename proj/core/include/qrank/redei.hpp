#pragma once

// Redei matrices over F_2, the 4-rank of the narrow class group and
// C4+-factorizations d = d1 d2.

#include <cstdint>
#include <vector>

#include "qrank/gf2.hpp"
#include "qrank/symbols.hpp"

namespace qrank {

/// a_ij = bit of (d_i / p_j) for i != j; a_jj = sum_{i != j} a_ij.
struct RedeiMatrix {
  std::size_t t = 0;
  /// rows[i] bit j holds a_ij.
  std::vector<gf2::Row> rows;

  bool at(std::size_t i, std::size_t j) const { return (rows[i] >> j) & 1U; }
  std::size_t rank() const { return gf2::rank(rows); }
  bool columns_sum_to_zero() const;
};

RedeiMatrix redei_matrix(const Discriminant& d);

/// t - 1 - rank of the Redei matrix.
int four_rank_narrow(const Discriminant& d);

/// Factorization d = d1 d2 into coprime discriminants, oriented d1 <= d2.
struct C4Factorization {
  Discriminant d1;
  Discriminant d2;

  friend bool operator==(const C4Factorization& a, const C4Factorization& b) {
    return a.d1 == b.d1 && a.d2 == b.d2;
  }
};

/// Orient (a, b) so that the first value is not larger.
C4Factorization make_factorization(Discriminant a, Discriminant b);

/// (d1/p2) = (d2/p1) = +1 for all primes p2 | d2, p1 | d1; both factors positive and coprime.
bool is_c4_pair(const Discriminant& d1, const Discriminant& d2);

/// Masks (over d.factors()) of the kernel classes, one per nonzero class,
/// each normalized so that the chosen factor is the smaller discriminant.
/// Works for mixed signs; every returned class has two positive factors.
std::vector<std::uint64_t> c4_kernel_masks(const Discriminant& d);

/// Nontrivial C4+-factorizations, from the Redei kernel, sorted by d1.
/// Throws Error{NotTotallyPositiveFactors} if a prime discriminant of d is negative.
std::vector<C4Factorization> enumerate_c4_factorizations(const Discriminant& d);

/// Same set by trying every split (t <= 24); a self-test for the kernel route.
std::vector<C4Factorization> enumerate_c4_factorizations_exhaustive(const Discriminant& d);

struct QuarticGenerator;

/// d' alpha for a discriminant divisor d' of d.
struct Twist {
  Discriminant dprime;
  Integer x;
  Integer y;
  /// Signs of d' alpha under sqrt(d1) -> +sqrt(d1) and -sqrt(d1).
  int sign_plus = 0;
  int sign_minus = 0;
};

/// One twist per discriminant divisor of d (2^t of them), in mask order.
std::vector<Twist> twist_generators(const QuarticGenerator& gen, const Discriminant& d);

}  // namespace qrank
