#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qrank {

/// Arbitrary-precision signed integer used for every exact quantity.
using Integer = mpz_class;

bool fits_int64(const Integer& n);

/// Narrow to int64; throws Error{Errc::Overflow} when the value does not fit.
std::int64_t to_int64(const Integer& n);

inline std::string to_string(const Integer& n) { return n.get_str(); }

/// Parse a decimal integer, optionally signed; throws Error{Errc::InvalidArgument}.
Integer parse_integer(const std::string& text);

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);

bool is_probable_prime(const Integer& n);

}  // namespace qrank
