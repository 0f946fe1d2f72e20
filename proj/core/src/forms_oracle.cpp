#include "qrank/forms_oracle.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qrank/error.hpp"

namespace qrank {

namespace {

__extension__ typedef __int128 i128;

struct Egcd {
  std::int64_t g, x, y;
};

// x*a + y*b = g >= 0
Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t narrow_i64(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw Error(Errc::Overflow, "form coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 floor_mod(i128 a, i128 m) {
  i128 r = a % m;
  return r < 0 ? r + m : r;
}

// r = b mod 2|a|, normalized for indefinite reduction with s = floor(sqrt D).
std::int64_t rho_normal(std::int64_t b, std::int64_t a, std::int64_t s) {
  const i128 two_a = 2 * static_cast<i128>(a < 0 ? -a : a);
  const i128 abs_a = two_a / 2;
  if (abs_a <= s) {
    // s - 2|a| < r <= s
    return narrow_i64(s - floor_mod(static_cast<i128>(s) - b, two_a));
  }
  i128 r = floor_mod(b, two_a);
  if (r > abs_a) r -= two_a;
  return narrow_i64(r);
}

BinaryQuadraticForm reduce_definite(BinaryQuadraticForm f) {
  if (f.a <= 0) throw Error(Errc::InvalidArgument, "definite forms must be positive definite");
  const std::int64_t D = f.discriminant();
  auto normalize = [D](BinaryQuadraticForm& g) {
    // b into (-a, a]
    const i128 two_a = 2 * static_cast<i128>(g.a);
    i128 r = floor_mod(g.b, two_a);
    if (r > g.a) r -= two_a;
    g.b = narrow_i64(r);
    g.c = narrow_i64((static_cast<i128>(g.b) * g.b - D) / (4 * static_cast<i128>(g.a)));
  };
  normalize(f);
  while (f.a > f.c) {
    f = {f.c, -f.b, f.a};
    normalize(f);
  }
  if (f.a == f.c && f.b < 0) f.b = -f.b;
  if (f.b == -f.a) f.b = f.a;
  return f;
}

}  // namespace

bool BinaryQuadraticForm::primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

BinaryQuadraticForm compose(const BinaryQuadraticForm& f, const BinaryQuadraticForm& g) {
  const std::int64_t D = f.discriminant();
  if (g.discriminant() != D) throw Error(Errc::InvalidArgument, "composition of forms with different discriminants");
  const std::int64_t s = (f.b + g.b) / 2;
  const Egcd e1 = egcd(f.a, g.a);
  const Egcd e2 = egcd(e1.g, s);
  const std::int64_t e = e2.g;
  const i128 v = static_cast<i128>(e1.y) * e2.x;
  const i128 w = e2.y;
  const i128 A = (static_cast<i128>(f.a) / e) * (g.a / e);
  const i128 twoA = 2 * (A < 0 ? -A : A);
  i128 inner = floor_mod(v * (s - g.b) - w * g.c, twoA);
  i128 B = floor_mod(g.b + 2 * (g.a / e) * inner, twoA);
  if (B > twoA / 2) B -= twoA;
  const i128 num = B * B - D;
  if (num % (4 * A) != 0) throw std::logic_error("composition produced a non-integral form");
  return {narrow_i64(A), narrow_i64(B), narrow_i64(num / (4 * A))};
}

bool is_reduced(const BinaryQuadraticForm& f) {
  const std::int64_t D = f.discriminant();
  if (D < 0) {
    if (f.a <= 0 || std::abs(f.b) > f.a || f.a > f.c) return false;
    if ((std::abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
  }
  const std::int64_t s = isqrt(D);
  const std::int64_t abs_a = f.a < 0 ? -f.a : f.a;
  // sqrt(D) - 2|a| < b < sqrt(D) and 2|a| - b < sqrt(D)
  return f.b > 0 && f.b <= s && f.b + 2 * abs_a >= s + 1 && 2 * abs_a - f.b <= s;
}

BinaryQuadraticForm rho(const BinaryQuadraticForm& f) {
  const std::int64_t D = f.discriminant();
  const std::int64_t s = isqrt(D);
  const std::int64_t r = rho_normal(-f.b, f.c, s);
  const i128 num = static_cast<i128>(r) * r - D;
  return {f.c, r, narrow_i64(num / (4 * static_cast<i128>(f.c)))};
}

BinaryQuadraticForm reduce(const BinaryQuadraticForm& f) {
  const std::int64_t D = f.discriminant();
  if (D < 0) return reduce_definite(f);
  BinaryQuadraticForm g = f;
  for (int steps = 0; !is_reduced(g); ++steps) {
    if (steps > 100000) throw std::logic_error("indefinite reduction did not terminate");
    g = rho(g);
  }
  return g;
}

// ---------------------------------------------------------------------------

int ClassGroupStructure::two_power_rank(int k) const {
  const std::int64_t m = std::int64_t{1} << k;
  return static_cast<int>(std::count_if(elementary_divisors.begin(), elementary_divisors.end(),
                                        [m](std::int64_t e) { return e % m == 0; }));
}

ClassGroupStructure structure_from_orders(const std::vector<std::uint64_t>& orders, bool narrow) {
  ClassGroupStructure out;
  out.narrow = narrow;
  const std::uint64_t h = orders.size();
  out.order = static_cast<std::int64_t>(h);
  // exponents[p] = multiset of exponents of the cyclic p-factors, descending.
  std::vector<std::pair<std::uint64_t, std::vector<int>>> parts;
  std::uint64_t rest = h;
  for (std::uint64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    // S_k = log_p #{x : x^(p^k) = 1}
    std::vector<int> S{0};
    std::uint64_t pk = 1;
    while (true) {
      pk *= p;
      const auto count = static_cast<std::uint64_t>(
          std::count_if(orders.begin(), orders.end(), [pk](std::uint64_t o) { return pk % o == 0; }));
      int sk = 0;
      for (std::uint64_t c = count; c > 1; c /= p) {
        if (c % p != 0) throw std::logic_error("order statistics are not those of an abelian group");
        ++sk;
      }
      if (sk == S.back()) break;
      S.push_back(sk);
    }
    // factors with exponent >= k: S_k - S_{k-1}
    std::vector<int> exps;
    for (std::size_t k = S.size() - 1; k >= 1; --k) {
      const int at_least_k = S[k] - S[k - 1];
      const int at_least_next = (k + 1 < S.size()) ? S[k + 1] - S[k] : 0;
      for (int i = 0; i < at_least_k - at_least_next; ++i) exps.push_back(static_cast<int>(k));
    }
    parts.emplace_back(p, std::move(exps));
  }
  std::size_t width = 0;
  for (const auto& [p, e] : parts) width = std::max(width, e.size());
  std::vector<std::int64_t> divisors(width, 1);
  for (const auto& [p, e] : parts) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      std::int64_t q = 1;
      for (int i = 0; i < e[j]; ++i) q *= static_cast<std::int64_t>(p);
      divisors[j] *= q;  // j = 0 is the largest invariant factor
    }
  }
  std::reverse(divisors.begin(), divisors.end());
  out.elementary_divisors = std::move(divisors);
  return out;
}

ClassGroupStructure two_sylow(const ClassGroupStructure& g) {
  ClassGroupStructure out;
  out.narrow = g.narrow;
  for (std::int64_t e : g.elementary_divisors) {
    std::int64_t two = 1;
    while (e % 2 == 0) {
      e /= 2;
      two *= 2;
    }
    if (two > 1) out.elementary_divisors.push_back(two);
  }
  out.order = std::accumulate(out.elementary_divisors.begin(), out.elementary_divisors.end(), std::int64_t{1},
                              std::multiplies<>());
  return out;
}

// ---------------------------------------------------------------------------

FormClassGroup::FormClassGroup(std::int64_t discriminant, const OracleConfig& config) : disc_(discriminant) {
  if (std::abs(discriminant) > config.ceiling)
    throw Error(Errc::OutOfRange, "|D| = " + std::to_string(discriminant) + " exceeds oracle ceiling " +
                                      std::to_string(config.ceiling));
  if (!is_fundamental(Integer(static_cast<long>(discriminant))))
    throw Error(Errc::NotFundamental, std::to_string(discriminant) + " is not a fundamental discriminant");
  if (discriminant > 0)
    build_indefinite();
  else
    build_definite();
}

void FormClassGroup::build_indefinite() {
  const std::int64_t D = disc_;
  const std::int64_t s = isqrt(D);
  std::vector<BinaryQuadraticForm> reduced;
  for (std::int64_t b = (D % 2 == 0) ? 2 : 1; b <= s; b += 2) {
    const std::int64_t N = (D - b * b) / 4;  // = -a c > 0
    const std::int64_t lo = std::max<std::int64_t>(1, (s + 1 - b + 1) / 2);
    const std::int64_t hi = (s + b) / 2;
    for (std::int64_t a = lo; a <= hi; ++a) {
      if (N % a != 0) continue;
      for (const std::int64_t sa : {a, -a}) {
        BinaryQuadraticForm f{sa, b, -N / sa};
        if (f.primitive() && is_reduced(f)) reduced.push_back(f);
      }
    }
  }
  class_index_.reserve(reduced.size() * 2);
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, bool, FormKey> seen;
  for (const auto& f : reduced) {
    if (class_index_.count({f.a, f.b})) continue;
    const std::size_t cls = reps_.size();
    reps_.push_back(f);
    std::size_t len = 0;
    BinaryQuadraticForm g = f;
    do {
      class_index_[{g.a, g.b}] = cls;
      g = rho(g);
      ++len;
      if (len > reduced.size()) throw std::logic_error("rho cycle longer than the reduced form set");
    } while (!(g == f));
    cycle_length_.push_back(len);
  }
  if (class_index_.size() != reduced.size()) throw std::logic_error("reduced forms not partitioned by rho-cycles");

  const std::int64_t b0 = D % 2;
  const BinaryQuadraticForm principal{1, b0, (b0 * b0 - D) / 4};
  identity_ = class_of(principal);
  minus_one_ = class_of({-1, b0, -(b0 * b0 - D) / 4});
}

void FormClassGroup::build_definite() {
  const std::int64_t D = disc_;
  for (std::int64_t a = 1; 3 * a * a <= -D; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - D) & 1) != 0) continue;
      const std::int64_t num = b * b - D;
      if (num % (4 * a) != 0) continue;
      BinaryQuadraticForm f{a, b, num / (4 * a)};
      if (f.primitive() && is_reduced(f)) {
        class_index_[{f.a, f.b}] = reps_.size();
        reps_.push_back(f);
        cycle_length_.push_back(1);
      }
    }
  }
  const std::int64_t b0 = ((-D) % 2 == 0) ? 0 : 1;
  identity_ = class_of({1, b0, (b0 * b0 - D) / 4});
  minus_one_ = identity_;
}

std::size_t FormClassGroup::class_of(const BinaryQuadraticForm& f) const {
  if (f.discriminant() != disc_) throw Error(Errc::InvalidArgument, "form has the wrong discriminant");
  const BinaryQuadraticForm g = reduce(f);
  auto it = class_index_.find({g.a, g.b});
  if (it == class_index_.end()) throw std::logic_error("reduced form missing from the class table");
  return it->second;
}

std::size_t FormClassGroup::multiply(std::size_t x, std::size_t y) const {
  return class_of(compose(reps_[x], reps_[y]));
}

std::size_t FormClassGroup::power(std::size_t x, std::uint64_t e) const {
  std::size_t result = identity_;
  std::size_t base = x;
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<std::size_t> FormClassGroup::cycle_lengths() const { return cycle_length_; }

ClassGroupStructure FormClassGroup::structure(bool narrow) const {
  const bool quotient = !narrow && disc_ > 0 && minus_one_ != identity_;
  auto in_h = [&](std::size_t z) { return z == identity_ || (quotient && z == minus_one_); };
  std::vector<std::uint64_t> orders;
  orders.reserve(reps_.size());
  for (std::size_t x = 0; x < reps_.size(); ++x) {
    if (quotient && multiply(x, minus_one_) < x) continue;  // one representative per coset
    std::uint64_t n = 1;
    std::size_t y = x;
    while (!in_h(y)) {
      y = multiply(y, x);
      ++n;
      if (n > reps_.size()) throw std::logic_error("element order exceeds group order");
    }
    orders.push_back(n);
  }
  return structure_from_orders(orders, narrow || disc_ < 0);
}

ClassGroupStructure class_group(const Discriminant& d, bool narrow, const OracleConfig& config) {
  if (d.trivial()) throw Error(Errc::NotFundamental, "1 is not a field discriminant");
  const FormClassGroup group(to_int64(d.value()), config);
  return group.structure(narrow);
}

// ---------------------------------------------------------------------------

FundamentalUnit fundamental_unit(const Discriminant& d, const OracleConfig& config) {
  if (d.trivial() || sgn(d.value()) <= 0)
    throw Error(Errc::InvalidArgument, "fundamental_unit needs a positive discriminant");
  if (!is_fundamental(d.value())) throw Error(Errc::NotFundamental, d.to_string());
  const std::int64_t disc = to_int64(d.value());
  const bool one_mod_four = disc % 4 == 1;
  // Expand xi_0 = (P + sqrt(R)) / Q.
  const std::int64_t R = one_mod_four ? disc : disc / 4;
  const std::int64_t P0 = one_mod_four ? 1 : 0;
  const std::int64_t Q0 = one_mod_four ? 2 : 1;
  const std::int64_t s = isqrt(R);

  std::int64_t P = P0, Q = Q0;
  Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  std::int64_t n = 0;
  while (true) {
    if (Q <= 0) throw std::logic_error("continued fraction left the reduced range");
    const std::int64_t a = (P + s) / Q;
    Integer p_n = a * p_prev + p_prev2;
    Integer q_n = a * q_prev + q_prev2;
    p_prev2 = std::move(p_prev);
    p_prev = std::move(p_n);
    q_prev2 = std::move(q_prev);
    q_prev = std::move(q_n);
    P = a * Q - P;
    Q = (R - P * P) / Q;
    ++n;
    if (mpz_sizeinbase(p_prev.get_mpz_t(), 10) > config.max_unit_digits)
      throw Error(Errc::Overflow, "fundamental unit of " + d.to_string() + " exceeds the digit bound");
    if (Q == Q0) break;
  }
  FundamentalUnit unit;
  unit.period = n;
  unit.norm = (n % 2 == 0) ? 1 : -1;
  if (one_mod_four) {
    unit.u = 2 * p_prev - q_prev;
    unit.v = q_prev;
  } else {
    unit.u = 2 * p_prev;
    unit.v = q_prev;
  }
  return unit;
}

std::int64_t sqrt_cf_period(std::int64_t n) {
  const std::int64_t s = isqrt(n);
  if (s * s == n) throw Error(Errc::InvalidArgument, "sqrt_cf_period of a square");
  std::int64_t P = 0, Q = 1, len = 0;
  do {
    const std::int64_t a = (P + s) / Q;
    P = a * Q - P;
    Q = (n - P * P) / Q;
    ++len;
  } while (Q != 1);
  return len;
}

// ---------------------------------------------------------------------------

ClassGroupStructure ClassGroupCache::get(const Discriminant& d, bool narrow) {
  const std::pair<std::int64_t, bool> key{to_int64(d.value()), narrow};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  ClassGroupStructure g = class_group(d, narrow, config_);
  std::unique_lock lock(mutex_);
  return memo_.emplace(key, std::move(g)).first->second;
}

std::size_t ClassGroupCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

}  // namespace qrank
