#include "qrank/gf2.hpp"

#include <stdexcept>

namespace qrank::gf2 {

std::size_t rank(std::span<const Row> rows) {
  return independent_basis(rows).size();
}

std::vector<Row> independent_basis(std::span<const Row> vectors) {
  // Echelon form keyed by leading bit.
  std::vector<Row> pivots;
  std::vector<Row> picked;
  for (Row v : vectors) {
    Row r = v;
    for (Row p : pivots) {
      const Row lead = Row{1} << (63 - __builtin_clzll(p));
      if (r & lead) r ^= p;
    }
    if (r == 0) continue;
    const Row lead = Row{1} << (63 - __builtin_clzll(r));
    for (Row& p : pivots)
      if (p & lead) p ^= r;
    pivots.push_back(r);
    picked.push_back(v);
  }
  return picked;
}

std::vector<Row> left_kernel(std::span<const Row> rows) {
  const std::size_t n = rows.size();
  if (n > 64) throw std::length_error("gf2::left_kernel supports at most 64 rows");
  // Augment each row with an identity tag and eliminate on the row part.
  std::vector<std::pair<Row, Row>> work;
  work.reserve(n);
  for (std::size_t i = 0; i < n; ++i) work.emplace_back(rows[i], Row{1} << i);
  std::size_t next = 0;
  for (int bit = 63; bit >= 0 && next < n; --bit) {
    const Row mask = Row{1} << bit;
    std::size_t pivot = next;
    while (pivot < n && !(work[pivot].first & mask)) ++pivot;
    if (pivot == n) continue;
    std::swap(work[pivot], work[next]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != next && (work[i].first & mask)) {
        work[i].first ^= work[next].first;
        work[i].second ^= work[next].second;
      }
    }
    ++next;
  }
  std::vector<Row> kernel;
  for (std::size_t i = next; i < n; ++i) kernel.push_back(work[i].second);
  return kernel;
}

std::vector<Row> span_elements(std::span<const Row> basis) {
  if (basis.size() > 30) throw std::length_error("gf2::span_elements: span too large");
  std::vector<Row> out(std::size_t{1} << basis.size(), 0);
  for (std::size_t m = 1; m < out.size(); ++m) {
    const int low = __builtin_ctzll(m);
    out[m] = out[m & (m - 1)] ^ basis[static_cast<std::size_t>(low)];
  }
  return out;
}

}  // namespace qrank::gf2
