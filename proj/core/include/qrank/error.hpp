#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrank {

enum class Errc {
  InvalidArgument,
  NotFundamental,
  UndefinedSymbol,
  NotTotallyPositiveFactors,
  NoC4Factorization,
  SearchExhausted,
  NormalizationFailed,
  EvenAlpha,
  TheoremViolation,
  PatternMismatch,
  CaseNotCovered,
  RamifiedInput,
  DimensionMismatch,
  OutOfRange,
  Overflow,
  Cancelled,
};

std::string_view to_string(Errc code);

/// True for error codes that signal a broken mathematical invariant rather than bad input.
bool is_invariant_breach(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qrank
