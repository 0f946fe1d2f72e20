#include "qrank/f2space.hpp"

#include <algorithm>
#include <set>

#include "qrank/error.hpp"

namespace qrank {

namespace {

std::uint64_t full_mask(int t) { return (std::uint64_t{1} << t) - 1; }

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

// Representative with the last coordinate cleared: identifies V with F_2^(t-1).
std::uint64_t affine_coords(const FactorClass& u) {
  const std::uint64_t top = std::uint64_t{1} << (u.t() - 1);
  return (u.bits() & top) ? (u.bits() ^ full_mask(u.t())) : u.bits();
}

std::vector<FactorClass> basis_of(int t, const std::vector<FactorClass>& elems) {
  std::vector<gf2::Row> rows;
  for (const auto& e : elems) rows.push_back(affine_coords(e));
  std::vector<FactorClass> out;
  for (gf2::Row r : gf2::independent_basis(rows)) out.emplace_back(t, r);
  return out;
}

std::set<std::vector<std::uint64_t>> distinct_element_sets(const std::vector<Subspace>& subs) {
  std::set<std::vector<std::uint64_t>> seen;
  for (const auto& s : subs) {
    std::vector<std::uint64_t> key;
    for (const auto& e : s.elements()) key.push_back(e.bits());
    std::sort(key.begin(), key.end());
    seen.insert(std::move(key));
  }
  return seen;
}

}  // namespace

FactorClass::FactorClass(int t, std::uint64_t bits) : t_(t) {
  if (t < 1 || t > 63) throw Error(Errc::OutOfRange, "t must lie in [1, 63]");
  if (bits & ~full_mask(t)) throw Error(Errc::DimensionMismatch, "bit vector longer than t");
  const std::uint64_t comp = bits ^ full_mask(t);
  const int w = gf2::weight(bits);
  if (2 * w > t || (2 * w == t && (bits & 1U))) bits = comp;
  bits_ = bits;
}

FactorClass FactorClass::from_coords(const std::vector<int>& coords) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] & 1) bits |= std::uint64_t{1} << i;
  return FactorClass(static_cast<int>(coords.size()), bits);
}

std::vector<int> FactorClass::coords() const {
  std::vector<int> out(static_cast<std::size_t>(t_));
  for (int i = 0; i < t_; ++i) out[static_cast<std::size_t>(i)] = static_cast<int>((bits_ >> i) & 1U);
  return out;
}

FactorClass class_add(const FactorClass& a, const FactorClass& b) {
  if (a.t() != b.t()) throw Error(Errc::DimensionMismatch, "classes of different length");
  return FactorClass(a.t(), a.bits() ^ b.bits());
}

int s_value(const FactorClass& u) { return u.weight(); }

std::int64_t fiber_size(int t, int nu) {
  if (t < 1 || nu < 0 || nu > t / 2) throw Error(Errc::OutOfRange, "need 0 <= nu <= t/2");
  if (t % 2 == 0 && nu == t / 2) return binomial(t, nu) / 2;
  return binomial(t, nu);
}

std::int64_t fiber_size_enumerated(int t, int nu) {
  if (t < 1 || t > 24 || nu < 0 || nu > t / 2) throw Error(Errc::OutOfRange, "need t <= 24, 0 <= nu <= t/2");
  std::int64_t count = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << (t - 1)); ++b)
    if (s_value(FactorClass(t, b)) == nu) ++count;
  return count;
}

int incomplete_trace(const FactorClass& u, int k) {
  if (k < 0 || 2 * k > u.t()) throw Error(Errc::OutOfRange, "need 0 <= 2k <= t");
  return gf2::parity(u.bits() & full_mask(2 * k));
}

RestrictedSpace restricted_space(int t, int k) {
  if (k < 1 || 2 * k > t || t > 20) throw Error(Errc::OutOfRange, "need 1 <= 2k <= t <= 20");
  RestrictedSpace rs;
  rs.t = t;
  rs.k = k;
  rs.fiber_sizes.assign(static_cast<std::size_t>(t / 2 + 1), 0);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << (t - 1)); ++b) {
    FactorClass u(t, b);
    if (incomplete_trace(u, k) != 0) continue;
    ++rs.fiber_sizes[static_cast<std::size_t>(s_value(u))];
    rs.elements.push_back(u);
  }
  rs.dim = 0;
  while ((std::size_t{1} << rs.dim) < rs.elements.size()) ++rs.dim;
  return rs;
}

std::vector<FactorClass> Subspace::elements() const {
  std::vector<FactorClass> out;
  std::vector<gf2::Row> rows;
  for (const auto& b : basis) rows.push_back(b.bits());
  for (gf2::Row r : gf2::span_elements(rows)) out.emplace_back(t, r & full_mask(t));
  return out;
}

std::vector<Subspace> hyperplanes(int t, const std::vector<FactorClass>& basis) {
  const int m = static_cast<int>(basis.size());
  if (m < 1 || m > 20) throw Error(Errc::OutOfRange, "basis size must lie in [1, 20]");
  std::vector<Subspace> out;
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << m); ++f) {
    const int pivot = __builtin_ctzll(f);
    Subspace s;
    s.t = t;
    for (int j = 0; j < m; ++j) {
      if (j == pivot) continue;
      FactorClass v = basis[static_cast<std::size_t>(j)];
      if ((f >> j) & 1U) v = class_add(v, basis[static_cast<std::size_t>(pivot)]);
      s.basis.push_back(v);
    }
    s.dim = m - 1;
    out.push_back(std::move(s));
  }
  return out;
}

Problem1Report verify_problem1() {
  Problem1Report rep;
  const int t = 6;
  std::vector<FactorClass> basis;
  for (int i = 0; i < t - 1; ++i) basis.emplace_back(t, std::uint64_t{1} << i);
  const auto subs = hyperplanes(t, basis);
  rep.subspaces = static_cast<std::int64_t>(subs.size());
  rep.distinct_subspaces = static_cast<std::int64_t>(distinct_element_sets(subs).size());
  for (const auto& U : subs) {
    const auto elems = U.elements();
    if (std::any_of(elems.begin(), elems.end(), [](const auto& e) { return s_value(e) == 1; })) {
      ++rep.vacuous;
      continue;
    }
    std::vector<FactorClass> v2;
    for (const auto& e : elems)
      if (s_value(e) == 2) v2.push_back(e);
    bool found = false;
    for (std::size_t i = 0; i < v2.size() && !found; ++i)
      for (std::size_t j = i + 1; j < v2.size() && !found; ++j)
        found = s_value(class_add(v2[i], v2[j])) == 2;
    if (!found) ++rep.counterexamples;
  }
  return rep;
}

Problem2Report verify_problem2(int k) {
  if (k < 1 || k > 3) throw Error(Errc::OutOfRange, "k must be 1, 2 or 3");
  Problem2Report rep;
  const int t = 7;
  rep.k = k;
  const RestrictedSpace rs = restricted_space(t, k);
  const auto subs = hyperplanes(t, basis_of(t, rs.elements));
  rep.subspaces = static_cast<std::int64_t>(subs.size());
  rep.distinct_subspaces = static_cast<std::int64_t>(distinct_element_sets(subs).size());
  for (const auto& U : subs) {
    const auto elems = U.elements();
    const bool meets = std::any_of(elems.begin(), elems.end(), [](const auto& e) {
      const int s = s_value(e);
      return s == 1 || s == 2;
    });
    if (!meets) ++rep.counterexamples;
  }
  rep.v3_size = rs.fiber_sizes[3];
  if (k == 2) {
    const FactorClass u = FactorClass::from_coords({1, 1, 0, 0, 0, 0, 1});
    rep.six_count = 0;
    for (const auto& v : rs.elements)
      if (s_value(v) == 3 && s_value(class_add(u, v)) == 2) ++rep.six_count;
  }
  const FactorClass a = FactorClass::from_coords({0, 0, 1, 1, 0, 0, 1});
  const FactorClass b = FactorClass::from_coords({0, 0, 1, 0, 1, 0, 1});
  const FactorClass c = class_add(a, b);
  rep.witness_holds = rs.contains(a) && rs.contains(b) && s_value(a) == 3 && s_value(b) == 3 && rs.contains(c) &&
                      s_value(c) == 2 && c == FactorClass::from_coords({0, 0, 0, 1, 1, 0, 0});
  return rep;
}

FactorClass factorization_to_class(const Discriminant& d, const C4Factorization& f) {
  if (!(f.d1.value() * f.d2.value() == d.value()) || f.d1.t() + f.d2.t() != d.t())
    throw Error(Errc::DimensionMismatch, "factorization does not match d");
  return FactorClass(static_cast<int>(d.t()), d.mask_of(f.d1));
}

C4Factorization class_to_factorization(const Discriminant& d, const FactorClass& u) {
  if (static_cast<std::size_t>(u.t()) != d.t()) throw Error(Errc::DimensionMismatch, "class length differs from t");
  return make_factorization(d.sub(u.bits()), d.sub(u.bits() ^ full_mask(u.t())));
}

}  // namespace qrank
