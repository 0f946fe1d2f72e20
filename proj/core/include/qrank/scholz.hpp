#pragma once

// Reality of the quartic extension k(sqrt d1, sqrt alpha), the symbol
// identities behind it, and negative-Pell predictions for d = pqr.

#include <optional>

#include "qrank/conic.hpp"
#include "qrank/forms_oracle.hpp"
#include "qrank/redei.hpp"

namespace qrank {

struct ScholzReport {
  Discriminant d;
  C4Factorization factorization;
  /// (d1/d2)_4 and (d2/d1)_4.
  int sym12 = 0;
  int sym21 = 0;
  QuarticGenerator generator;
  bool predicted_real = false;
  bool observed_real = false;
  /// Empty when the symbols differ; false when both are -1; true when both are +1.
  std::optional<bool> octic_possible;
};

/// Throws TheoremViolation if the predicted and observed reality disagree.
/// Requires d odd and a product of positive prime discriminants.
ScholzReport theorem1_check(const Discriminant& d, const C4Factorization& f, const SolverConfig& config = {});

/// (d1/d2)_4 (d2/d1)_4 = (-1)^((|x| + y - 1)/2).
bool parity_identity_check(const QuarticGenerator& gen);

/// (x/d2) = (d1/d2)_4 (y/d2), (x/d1) = (d2/d1)_4 (z/d1), (-d1/|x|) = (d2/|x|).
/// Identities whose symbols are undefined (a gcd with d) are skipped; throws
/// UndefinedSymbol only when all three are.
bool intermediate_identities_check(const QuarticGenerator& gen);

enum class PellCase { DifferentSymbols, BothMinusOne, BothPlusOne };

std::string_view to_string(PellCase c);

struct PellPrediction {
  Integer p, q, r;
  /// (p/qr)_4 and (qr/p)_4.
  int sym_p_qr = 0;
  int sym_qr_p = 0;
  PellCase pell_case = PellCase::BothPlusOne;
  /// +1 or -1 when the case determines N(eps).
  std::optional<int> predicted_norm;
  /// 2-Sylow of Cl and Cl+ when determined ((2,4) in the both -1 case).
  std::optional<ClassGroupStructure> predicted_two_sylow;
};

/// Requires p, q, r distinct primes = 1 mod 4 with (p/q) = (p/r) = -(q/r) = 1; else PatternMismatch.
PellPrediction pell_criterion(const PrimeDiscriminant& p, const PrimeDiscriminant& q, const PrimeDiscriminant& r);

}  // namespace qrank
