#pragma once

// Dense linear algebra over F_2 with rows packed into 64-bit words.

#include <cstdint>
#include <span>
#include <vector>

namespace qrank::gf2 {

using Row = std::uint64_t;

inline int weight(Row v) { return __builtin_popcountll(v); }
inline int parity(Row v) { return __builtin_parityll(v); }

/// Rank of the matrix whose rows are `rows`.
std::size_t rank(std::span<const Row> rows);

/// Basis of { x in F_2^nrows : sum_i x_i rows[i] = 0 }, the left kernel.
std::vector<Row> left_kernel(std::span<const Row> rows);

/// All 2^k elements of the span of `basis`; element m is the sum of basis[i] over bits i of m.
std::vector<Row> span_elements(std::span<const Row> basis);

/// Row-reduces `vectors` and returns an independent subset spanning the same space.
std::vector<Row> independent_basis(std::span<const Row> vectors);

}  // namespace qrank::gf2
