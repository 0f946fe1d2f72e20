#include "qrank/redei.hpp"

#include <algorithm>

#include "qrank/conic.hpp"
#include "qrank/error.hpp"

namespace qrank {

bool RedeiMatrix::columns_sum_to_zero() const {
  gf2::Row sum = 0;
  for (gf2::Row r : rows) sum ^= r;
  return sum == 0;
}

RedeiMatrix redei_matrix(const Discriminant& d) {
  if (d.trivial()) throw Error(Errc::NotFundamental, "1 has no Redei matrix");
  const auto f = d.factors();
  RedeiMatrix m;
  m.t = f.size();
  m.rows.assign(m.t, 0);
  for (std::size_t j = 0; j < m.t; ++j) {
    int column = 0;
    for (std::size_t i = 0; i < m.t; ++i) {
      if (i == j) continue;
      if (kronecker(f[i].value(), f[j].prime()) == -1) {
        m.rows[i] |= gf2::Row{1} << j;
        column ^= 1;
      }
    }
    if (column) m.rows[j] |= gf2::Row{1} << j;
  }
  return m;
}

int four_rank_narrow(const Discriminant& d) {
  const RedeiMatrix m = redei_matrix(d);
  return static_cast<int>(m.t) - 1 - static_cast<int>(m.rank());
}

C4Factorization make_factorization(Discriminant a, Discriminant b) {
  if (cmp(a.value(), b.value()) > 0) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

bool is_c4_pair(const Discriminant& d1, const Discriminant& d2) {
  if (sgn(d1.value()) <= 0 || sgn(d2.value()) <= 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), d1.value().get_mpz_t(), d2.value().get_mpz_t());
  if (g != 1) return false;
  for (const auto& p2 : d2.factors())
    if (kronecker(d1.value(), p2.prime()) != 1) return false;
  for (const auto& p1 : d1.factors())
    if (kronecker(d2.value(), p1.prime()) != 1) return false;
  return true;
}

std::vector<std::uint64_t> c4_kernel_masks(const Discriminant& d) {
  const RedeiMatrix m = redei_matrix(d);
  const std::uint64_t all = (m.t == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m.t) - 1);
  const auto basis = gf2::left_kernel(m.rows);
  if (basis.size() > 30) throw Error(Errc::OutOfRange, "Redei kernel too large to enumerate");
  std::vector<std::uint64_t> out;
  for (gf2::Row e : gf2::span_elements(basis)) {
    if (e == 0 || e == all) continue;
    const std::uint64_t other = all & ~e;
    // keep one mask per class: the one giving the smaller discriminant
    if (cmp(d.sub(e).value(), d.sub(other).value()) > 0) continue;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [&d](std::uint64_t a, std::uint64_t b) {
    return cmp(d.sub(a).value(), d.sub(b).value()) < 0;
  });
  return out;
}

namespace {

void require_positive_factors(const Discriminant& d) {
  if (sgn(d.value()) <= 0) throw Error(Errc::InvalidArgument, "C4+-factorizations need d > 0");
  if (!d.all_positive_factors())
    throw Error(Errc::NotTotallyPositiveFactors, d.to_string() + " has a negative prime discriminant factor");
}

}  // namespace

std::vector<C4Factorization> enumerate_c4_factorizations(const Discriminant& d) {
  require_positive_factors(d);
  const std::uint64_t all = (std::uint64_t{1} << d.t()) - 1;
  std::vector<C4Factorization> out;
  for (std::uint64_t e : c4_kernel_masks(d)) out.push_back({d.sub(e), d.sub(all & ~e)});
  return out;
}

std::vector<C4Factorization> enumerate_c4_factorizations_exhaustive(const Discriminant& d) {
  require_positive_factors(d);
  if (d.t() > 24) throw Error(Errc::OutOfRange, "exhaustive split enumeration limited to t <= 24");
  const std::uint64_t all = (std::uint64_t{1} << d.t()) - 1;
  std::vector<C4Factorization> out;
  // the top factor always goes into d2, so each unordered split is visited once
  const std::uint64_t half = std::uint64_t{1} << (d.t() - 1);
  for (std::uint64_t e = 1; e < half; ++e) {
    Discriminant a = d.sub(e), b = d.sub(all & ~e);
    if (is_c4_pair(a, b)) out.push_back(make_factorization(std::move(a), std::move(b)));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return cmp(x.d1.value(), y.d1.value()) < 0; });
  return out;
}

std::vector<Twist> twist_generators(const QuarticGenerator& gen, const Discriminant& d) {
  if (d.t() > 20) throw Error(Errc::OutOfRange, "too many divisors to list");
  std::vector<Twist> out;
  const std::uint64_t count = std::uint64_t{1} << d.t();
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Twist tw;
    tw.dprime = d.sub(mask);
    tw.x = tw.dprime.value() * gen.solution.x;
    tw.y = tw.dprime.value() * gen.solution.y;
    tw.sign_plus = embedding_sign(tw.x, tw.y, gen.d1.value(), +1);
    tw.sign_minus = embedding_sign(tw.x, tw.y, gen.d1.value(), -1);
    out.push_back(std::move(tw));
  }
  return out;
}

}  // namespace qrank
