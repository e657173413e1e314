#pragma once

// Exact rational scalar used for every position, radius and value.
//
// Rat is GMP's mpq_class. All values handed out by this library are kept in
// canonical form (positive denominator, numerator and denominator coprime).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freqfn {

using Rat = mpq_class;
using BigInt = mpz_class;

/// Parses an optionally-signed integer or `p/q`. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// Lowest-terms rendering; integers are printed without a denominator.
std::string to_string(const Rat& value);

/// num / den in lowest terms. The two-argument Rat constructor does not
/// reduce, and comparisons of unreduced values are wrong.
/// Throws std::invalid_argument if den == 0.
Rat ratio(long num, long den);

/// 2^exponent for any (possibly negative) exponent.
Rat pow2(long exponent);

BigInt floor(const Rat& value);
BigInt ceil(const Rat& value);

double to_double(const Rat& value);

inline Rat abs_rat(const Rat& value) { return value < 0 ? Rat(-value) : value; }

}  // namespace freqfn
