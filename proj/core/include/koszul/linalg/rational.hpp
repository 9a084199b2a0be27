#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace koszul::linalg {

/// Exact rational scalar. GMP keeps every value canonical: gcd(|num|, den) = 1
/// and den > 0 after each arithmetic operation.
using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses "p/q" or "p" (optionally signed). Throws ModelError on malformed
/// text or a zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical "p/q" text, always with an explicit denominator ("3/1", "-1/2").
std::string format_rat(const Rat& value);

}  // namespace koszul::linalg
