#pragma once

// The quotient V = F_2^t / <(1,...,1)> of factorizations of a discriminant,
// its fibers V_nu, the incomplete traces T_2k, and the exhaustive checks of
// the two subspace problems.

#include <cstdint>
#include <vector>

#include "qrank/gf2.hpp"
#include "qrank/redei.hpp"

namespace qrank {

/// A class in V, stored as its minimal-weight representative (coordinate 1 is bit 0;
/// on a tie the representative with coordinate 1 equal to 0).
class FactorClass {
 public:
  FactorClass() = default;
  FactorClass(int t, std::uint64_t bits);
  /// From coordinates (e_1, ..., e_t).
  static FactorClass from_coords(const std::vector<int>& coords);

  int t() const { return t_; }
  std::uint64_t bits() const { return bits_; }
  int weight() const { return gf2::weight(bits_); }
  bool zero() const { return bits_ == 0; }
  std::vector<int> coords() const;

  friend bool operator==(const FactorClass&, const FactorClass&) = default;

 private:
  int t_ = 0;
  std::uint64_t bits_ = 0;
};

/// Throws DimensionMismatch when t differs.
FactorClass class_add(const FactorClass& a, const FactorClass& b);

/// S(u) = min(weight, t - weight).
int s_value(const FactorClass& u);

/// #V_nu from the counting formula; OutOfRange unless 0 <= nu <= t/2.
std::int64_t fiber_size(int t, int nu);

/// #V_nu by enumeration.
std::int64_t fiber_size_enumerated(int t, int nu);

/// T_2k(u): sum of the first 2k coordinates, well defined on classes.
int incomplete_trace(const FactorClass& u, int k);

struct RestrictedSpace {
  int t = 0;
  int k = 0;
  int dim = 0;
  /// fiber_sizes[nu] = #V^(2k)_nu for 0 <= nu <= t/2.
  std::vector<std::int64_t> fiber_sizes;
  std::vector<FactorClass> elements;

  bool contains(const FactorClass& u) const { return u.t() == t && incomplete_trace(u, k) == 0; }
};

/// V^(2k) = ker T_2k, enumerated; OutOfRange unless 1 <= 2k <= t <= 20.
RestrictedSpace restricted_space(int t, int k);

struct Subspace {
  int t = 0;
  std::vector<FactorClass> basis;
  int dim = 0;

  std::vector<FactorClass> elements() const;
};

/// All codimension-one subspaces of the span of `basis` (one per nonzero functional).
std::vector<Subspace> hyperplanes(int t, const std::vector<FactorClass>& basis);

struct Problem1Report {
  int t = 6;
  std::int64_t subspaces = 0;
  std::int64_t distinct_subspaces = 0;
  /// Subspaces meeting V_1.
  std::int64_t vacuous = 0;
  std::int64_t counterexamples = 0;
};

/// Every 4-dimensional U in V (t = 6) missing V_1 contains a, b, c in V_2 with a + b + c = 0.
Problem1Report verify_problem1();

struct Problem2Report {
  int t = 7;
  int k = 0;
  std::int64_t subspaces = 0;
  std::int64_t distinct_subspaces = 0;
  std::int64_t counterexamples = 0;
  std::int64_t v3_size = 0;
  /// For k = 2: #{v in V^(4)_3 : u + v in V^(4)_2}, u = (1,1,0,0,0,0,1).
  std::int64_t six_count = -1;
  /// (0,0,1,1,0,0,1) + (0,0,1,0,1,0,1) lies in V^(2k)_2 with both summands in V^(2k)_3.
  bool witness_holds = false;
};

/// Every 4-dimensional U in V^(2k) (t = 7) meets V^(2k)_1 or V^(2k)_2; OutOfRange unless k in {1, 2, 3}.
Problem2Report verify_problem2(int k);

/// Class of the indicator vector of f.d1 among d's prime discriminants.
FactorClass factorization_to_class(const Discriminant& d, const C4Factorization& f);

/// The factorization (any signs) whose first factor is the class representative; oriented d1 <= d2.
C4Factorization class_to_factorization(const Discriminant& d, const FactorClass& u);

}  // namespace qrank
