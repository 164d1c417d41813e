#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "inoue/errors.hpp"

namespace inoue {

using Int = mpz_class;
using Rat = mpq_class;

// Number of bits in |v| (0 for v == 0).
std::size_t bit_size(const Int& v);

// Raises entry_size_limit if |v| exceeds the configured bit-length cap.
void guard_bits(const Int& v);

int sign_of(const Int& v);
int sign_of(const Rat& v);

Int pow2(unsigned long e);

// gcd with Bezout coefficients: g = a*x + b*y, g >= 0.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

// Parses "p/q", plain integers, and decimal literals ("1.25", "-3e-2").
Rat parse_rational(const std::string& text);

std::string rat_to_string(const Rat& v);

// Decimal preview with the given number of significant digits; not exact,
// only for human-facing output.
std::string decimal_preview(const Rat& v, int significant_digits = 12);

} // namespace inoue
