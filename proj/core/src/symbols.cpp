#include "qrank/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qrank/error.hpp"

namespace qrank {

bool fits_int64(const Integer& n) { return n.fits_slong_p() != 0; }

std::int64_t to_int64(const Integer& n) {
  if (!fits_int64(n)) throw Error(Errc::Overflow, n.get_str() + " does not fit in 64 bits");
  return n.get_si();
}

Integer parse_integer(const std::string& text) {
  Integer n;
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || n.set_str(s, 10) != 0)
    throw Error(Errc::InvalidArgument, "not an integer: '" + text + "'");
  return n;
}

namespace {
__extension__ typedef __int128 wide_t;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "isqrt of negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<wide_t>(r) * r > n) --r;
  while (static_cast<wide_t>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotFundamental: return "NotFundamental";
    case Errc::UndefinedSymbol: return "UndefinedSymbol";
    case Errc::NotTotallyPositiveFactors: return "NotTotallyPositiveFactors";
    case Errc::NoC4Factorization: return "NoC4Factorization";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::NormalizationFailed: return "NormalizationFailed";
    case Errc::EvenAlpha: return "EvenAlpha";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::CaseNotCovered: return "CaseNotCovered";
    case Errc::RamifiedInput: return "RamifiedInput";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::Overflow: return "Overflow";
    case Errc::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

bool is_invariant_breach(Errc code) {
  switch (code) {
    case Errc::TheoremViolation:
    case Errc::CaseNotCovered:
    case Errc::SearchExhausted:
    case Errc::NormalizationFailed:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------

PrimeDiscriminant::PrimeDiscriminant(const Integer& value) : value_(value) {
  if (value == -4 || value == 8 || value == -8) {
    prime_ = 2;
    return;
  }
  Integer p = abs(value);
  bool ok = is_probable_prime(p) && p != 2;
  if (ok) {
    // p = 1 mod 4 is stored as +p, q = 3 mod 4 as -q.
    const bool one_mod_four = mpz_fdiv_ui(p.get_mpz_t(), 4) == 1;
    ok = one_mod_four ? sgn(value) > 0 : sgn(value) < 0;
  }
  if (!ok) throw Error(Errc::NotFundamental, value.get_str() + " is not a prime discriminant");
  prime_ = p;
}

PrimeDiscriminant PrimeDiscriminant::from_odd_prime(const Integer& p) {
  if (!is_probable_prime(p) || p == 2)
    throw Error(Errc::InvalidArgument, p.get_str() + " is not an odd prime");
  return PrimeDiscriminant(mpz_fdiv_ui(p.get_mpz_t(), 4) == 1 ? Integer(p) : Integer(-p));
}

Discriminant::Discriminant() : value_(1) {}

Discriminant Discriminant::from_factors(std::vector<PrimeDiscriminant> factors) {
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    return cmp(abs(a.value()), abs(b.value())) < 0;
  });
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].prime() == factors[i - 1].prime())
      throw Error(Errc::NotFundamental, "repeated prime " + factors[i].prime().get_str());
  }
  if (factors.size() > 64) throw Error(Errc::OutOfRange, "more than 64 prime discriminants");
  Discriminant d;
  for (const auto& f : factors) d.value_ *= f.value();
  d.factors_ = std::move(factors);
  return d;
}

bool Discriminant::odd() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.even(); });
}

bool Discriminant::all_positive_factors() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.positive(); });
}

std::size_t Discriminant::negative_count() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](const auto& f) { return !f.positive(); }));
}

Discriminant Discriminant::sub(std::uint64_t mask) const {
  std::vector<PrimeDiscriminant> picked;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if ((mask >> i) & 1U) picked.push_back(factors_[i]);
  return from_factors(std::move(picked));
}

std::uint64_t Discriminant::mask_of(const Discriminant& divisor) const {
  std::uint64_t mask = 0;
  for (const auto& f : divisor.factors()) {
    auto it = std::find(factors_.begin(), factors_.end(), f);
    if (it == factors_.end())
      throw Error(Errc::InvalidArgument,
                  divisor.to_string() + " is not a discriminant divisor of " + to_string());
    mask |= std::uint64_t{1} << (it - factors_.begin());
  }
  return mask;
}

// ---------------------------------------------------------------------------

namespace {

bool squarefree_odd_part_ok(Integer m, std::vector<PrimeDiscriminant>* out) {
  // m > 0 odd; trial division, rejecting square factors.
  for (unsigned long p = 3; Integer(p) * p <= m; p += 2) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
      if (out) out->push_back(PrimeDiscriminant::from_odd_prime(Integer(p)));
    }
  }
  if (m > 1 && out) out->push_back(PrimeDiscriminant::from_odd_prime(m));
  return true;
}

}  // namespace

bool is_fundamental(const Integer& n) {
  if (abs(n) < 3) return false;
  const unsigned long r16 = mpz_fdiv_ui(n.get_mpz_t(), 16);
  const unsigned long r4 = r16 % 4;
  if (r4 == 1) return squarefree_odd_part_ok(abs(n), nullptr);
  if (r4 != 0) return false;
  // n = 4m with m = 2, 3 mod 4.
  Integer m = n / 4;
  const unsigned long m4 = mpz_fdiv_ui(m.get_mpz_t(), 4);
  if (m4 == 3) return squarefree_odd_part_ok(abs(m), nullptr);
  if (m4 == 2) return squarefree_odd_part_ok(abs(m) / 2, nullptr);
  return false;
}

Discriminant factor_discriminant(const Integer& n) {
  if (!is_fundamental(n)) throw Error(Errc::NotFundamental, n.get_str() + " is not a fundamental discriminant");
  Integer odd = abs(n);
  while (mpz_even_p(odd.get_mpz_t())) odd /= 2;
  std::vector<PrimeDiscriminant> parts;
  squarefree_odd_part_ok(odd, &parts);
  Integer odd_product = 1;
  for (const auto& p : parts) odd_product *= p.value();
  if (odd_product != n) parts.emplace_back(Integer(n / odd_product));
  return Discriminant::from_factors(std::move(parts));
}

Discriminant factor_discriminant(std::int64_t n) { return factor_discriminant(Integer(static_cast<long>(n))); }

// ---------------------------------------------------------------------------

namespace {

// (-1)^((a^2-1)/8) indexed by a mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

}  // namespace

int kronecker(std::int64_t a, std::int64_t b) {
  if (a == std::numeric_limits<std::int64_t>::min() || b == std::numeric_limits<std::int64_t>::min())
    return kronecker(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if ((a % 2 == 0) && (b % 2 == 0)) return 0;

  int v = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++v;
  }
  int k = (v % 2 == 0) ? 1 : kTwoTable[a & 7];
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  // b odd and positive from here on.
  while (true) {
    if (a == 0) return b > 1 ? 0 : k;
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 != 0) k *= kTwoTable[b & 7];
    if (a & b & 2) k = -k;
    const std::int64_t r = a < 0 ? -a : a;
    a = b % r;
    b = r;
  }
}

int kronecker(const Integer& a, const Integer& n) {
  if (fits_int64(a) && fits_int64(n)) return kronecker(std::int64_t{a.get_si()}, std::int64_t{n.get_si()});
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int quartic_symbol_prime(const Integer& d, const Integer& p) {
  if (p == 2) {
    if (mpz_fdiv_ui(d.get_mpz_t(), 8) != 1)
      throw Error(Errc::UndefinedSymbol, "(" + d.get_str() + "/2)_4 needs d = 1 mod 8");
    Integer e = (d - 1) / 8;
    return mpz_odd_p(e.get_mpz_t()) ? -1 : 1;
  }
  if (!is_probable_prime(p)) throw Error(Errc::InvalidArgument, p.get_str() + " is not prime");
  if (mpz_fdiv_ui(p.get_mpz_t(), 4) != 1)
    throw Error(Errc::UndefinedSymbol, "quartic symbol modulo " + p.get_str() + " (p = 3 mod 4)");
  if (kronecker(d, p) != 1)
    throw Error(Errc::UndefinedSymbol, "(" + d.get_str() + "/" + p.get_str() + ") != +1");
  Integer base = d % p;
  if (base < 0) base += p;
  Integer r;
  const Integer e = (p - 1) / 4;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (r == 1) return 1;
  if (r == p - 1) return -1;
  throw Error(Errc::UndefinedSymbol, "d^((p-1)/4) not +-1 modulo " + p.get_str());
}

int quartic_symbol_prime(const Integer& d, const PrimeDiscriminant& p) {
  if (p.value() == -4) throw Error(Errc::UndefinedSymbol, "quartic symbol at prime discriminant -4");
  return quartic_symbol_prime(d, p.prime());
}

int quartic_symbol(const Integer& d, const Discriminant& dprime) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), dprime.value().get_mpz_t());
  if (g != 1)
    throw Error(Errc::UndefinedSymbol, "gcd(" + d.get_str() + ", " + dprime.to_string() + ") != 1");
  int s = 1;
  for (const auto& f : dprime.factors()) s *= quartic_symbol_prime(d, f);
  return s;
}

}  // namespace qrank
