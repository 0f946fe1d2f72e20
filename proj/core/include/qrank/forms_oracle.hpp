#pragma once

// Ground-truth class groups of quadratic orders from binary quadratic forms,
// and fundamental units from continued fractions. Nothing in here uses the
// Redei or biquadratic-symbol machinery, so it can be used to check it.

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "qrank/integer.hpp"
#include "qrank/symbols.hpp"

namespace qrank {

struct OracleConfig {
  /// Largest |discriminant| accepted by the form code (coefficients are int64).
  std::int64_t ceiling = 1'000'000;
  /// Digit bound on the continued-fraction convergents of the fundamental unit.
  std::size_t max_unit_digits = 100'000;
};

/// The form a x^2 + b x y + c y^2.
struct BinaryQuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool primitive() const;

  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// Dirichlet composition (unreduced). Both forms must share a discriminant.
BinaryQuadraticForm compose(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g);

/// Reduced form properly equivalent to f: the usual Gauss reduction for D < 0,
/// iteration of the rho operator until |sqrt(D) - 2|a|| < b < sqrt(D) for D > 0.
BinaryQuadraticForm reduce(const BinaryQuadraticForm& f);

bool is_reduced(const BinaryQuadraticForm& f);

/// The rho operator (a, b, c) -> (c, r, (r^2 - D)/4c) of indefinite reduction.
BinaryQuadraticForm rho(const BinaryQuadraticForm& f);

/// Elementary-divisor decomposition of a finite abelian group.
struct ClassGroupStructure {
  /// Each divisor divides the next; trivial factors omitted.
  std::vector<std::int64_t> elementary_divisors;
  std::int64_t order = 1;
  bool narrow = true;

  /// Number of cyclic factors whose order is divisible by 2^k.
  int two_power_rank(int k) const;
  int two_rank() const { return two_power_rank(1); }
  int four_rank() const { return two_power_rank(2); }

  friend bool operator==(const ClassGroupStructure&, const ClassGroupStructure&) = default;
};

/// Form class group of a fundamental discriminant: for D > 0 the proper
/// equivalence classes are the rho-cycles of reduced forms.
class FormClassGroup {
 public:
  explicit FormClassGroup(std::int64_t discriminant, const OracleConfig& config = {});

  std::int64_t discriminant() const { return disc_; }
  std::size_t order() const { return reps_.size(); }

  /// Class index of an arbitrary primitive form of this discriminant.
  std::size_t class_of(const BinaryQuadraticForm& f) const;
  const BinaryQuadraticForm& representative(std::size_t cls) const { return reps_[cls]; }
  std::size_t multiply(std::size_t x, std::size_t y) const;
  std::size_t power(std::size_t x, std::uint64_t e) const;
  std::size_t identity() const { return identity_; }
  /// Class of the form (-1, b, c) representing -1; equals identity() iff N(eps) = -1.
  std::size_t minus_one_class() const { return minus_one_; }
  /// Number of reduced forms (all cycles together) for D > 0.
  std::size_t reduced_form_count() const { return class_index_.size(); }
  std::vector<std::size_t> cycle_lengths() const;

  /// Narrow (proper) class group, or its quotient by the class of (-1, b, c).
  ClassGroupStructure structure(bool narrow) const;

 private:
  void build_indefinite();
  void build_definite();

  struct FormKey {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const noexcept {
      return std::hash<std::int64_t>()(k.first * 1000003 + k.second);
    }
  };

  std::int64_t disc_;
  std::vector<BinaryQuadraticForm> reps_;
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::size_t, FormKey> class_index_;
  std::vector<std::size_t> cycle_length_;
  std::size_t identity_ = 0;
  std::size_t minus_one_ = 0;
};

/// Class group of the quadratic field of discriminant d. For d < 0 the flag is ignored.
ClassGroupStructure class_group(const Discriminant& d, bool narrow, const OracleConfig& config = {});

/// Group structure from per-element orders (each element counted once).
ClassGroupStructure structure_from_orders(const std::vector<std::uint64_t>& orders, bool narrow);

/// Restriction to the 2-Sylow subgroup.
ClassGroupStructure two_sylow(const ClassGroupStructure& g);

/// eps = (u + v sqrt(d)) / 2 with u^2 - d v^2 = 4 * norm, v > 0.
struct FundamentalUnit {
  Integer u;
  Integer v;
  int norm = 1;
  /// Period length of the continued fraction used (of (1 + sqrt d)/2 or sqrt(d/4)).
  std::int64_t period = 0;
};

/// Fundamental unit of the maximal order of Q(sqrt d), d > 0 fundamental.
/// Throws Error{Overflow} when convergents exceed config.max_unit_digits digits.
FundamentalUnit fundamental_unit(const Discriminant& d, const OracleConfig& config = {});

/// Period length of the continued fraction of sqrt(n), n > 0 not a square.
std::int64_t sqrt_cf_period(std::int64_t n);

/// Memo of oracle results keyed by (d, narrow); concurrent readers, exclusive writers.
class ClassGroupCache {
 public:
  explicit ClassGroupCache(OracleConfig config = {}) : config_(config) {}
  ClassGroupStructure get(const Discriminant& d, bool narrow);
  std::size_t size() const;

 private:
  OracleConfig config_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<std::int64_t, bool>, ClassGroupStructure> memo_;
};

}  // namespace qrank
