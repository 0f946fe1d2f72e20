#pragma once

// Prime discriminants, fundamental-discriminant factorization, Kronecker
// symbols and the rational biquadratic residue symbol.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qrank/error.hpp"
#include "qrank/integer.hpp"

namespace qrank {

/// A fundamental discriminant divisible by exactly one prime:
/// -4, 8, -8, p for p = 1 mod 4, or -q for q = 3 mod 4.
class PrimeDiscriminant {
 public:
  /// Validates; throws Error{NotFundamental} for anything else.
  explicit PrimeDiscriminant(const Integer& value);

  /// The prime discriminant attached to a prime (2 is ambiguous and rejected).
  static PrimeDiscriminant from_odd_prime(const Integer& p);

  const Integer& value() const { return value_; }
  /// The underlying rational prime (2 for -4 and +-8).
  const Integer& prime() const { return prime_; }
  bool positive() const { return sgn(value_) > 0; }
  bool even() const { return prime_ == 2; }

  friend bool operator==(const PrimeDiscriminant& a, const PrimeDiscriminant& b) {
    return a.value_ == b.value_;
  }

 private:
  Integer value_;
  Integer prime_;
};

/// A fundamental discriminant (or the trivial discriminant 1) together with
/// its factorization into prime discriminants, in ascending |value| order.
class Discriminant {
 public:
  /// The trivial discriminant 1.
  Discriminant();

  /// Product of pairwise coprime prime discriminants (sorted internally).
  static Discriminant from_factors(std::vector<PrimeDiscriminant> factors);

  const Integer& value() const { return value_; }
  std::span<const PrimeDiscriminant> factors() const { return factors_; }
  std::size_t t() const { return factors_.size(); }
  bool trivial() const { return factors_.empty(); }
  bool odd() const;
  bool all_positive_factors() const;
  /// Number of negative prime discriminant factors.
  std::size_t negative_count() const;

  /// Product of the factors selected by `mask` (bit i selects factors()[i]).
  Discriminant sub(std::uint64_t mask) const;
  /// Index mask of the factors of `divisor` inside this discriminant; throws
  /// Error{InvalidArgument} if `divisor` is not a discriminant divisor.
  std::uint64_t mask_of(const Discriminant& divisor) const;

  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const Discriminant& a, const Discriminant& b) {
    return a.value_ == b.value_;
  }

 private:
  Integer value_;
  std::vector<PrimeDiscriminant> factors_;
};

bool is_fundamental(const Integer& n);

/// Canonical factorization of a fundamental discriminant, |n| >= 3.
Discriminant factor_discriminant(const Integer& n);
Discriminant factor_discriminant(std::int64_t n);

/// Kronecker symbol (a/n); n < 0 contributes sign(a), (a/0) = [|a| = 1].
int kronecker(std::int64_t a, std::int64_t n);
int kronecker(const Integer& a, const Integer& n);

/// Rational biquadratic residue symbol (d/p)_4 for a prime p.
/// Odd p: requires p = 1 mod 4 and (d/p) = +1, value d^((p-1)/4) mod p.
/// p = 2: requires d = 1 mod 8, value (-1)^((d-1)/8).
/// Throws Error{UndefinedSymbol} when the symbol is not defined.
int quartic_symbol_prime(const Integer& d, const Integer& p);
int quartic_symbol_prime(const Integer& d, const PrimeDiscriminant& p);

/// Biquadratic Jacobi symbol (d/d')_4 = prod over p' | d' of (d/p')_4.
/// Factors -4 of d' are rejected, as are negative odd prime discriminants.
int quartic_symbol(const Integer& d, const Discriminant& dprime);

}  // namespace qrank
