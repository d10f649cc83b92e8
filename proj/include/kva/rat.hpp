#pragma once

// Exact rationals backed by GMP. Every quantity that enters a positivity
// decision goes through these types; doubles are produced only for display.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kva {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(std::int64_t num, std::int64_t den = 1);

/// Exact trichotomy by cross-multiplication.
std::strong_ordering rat_cmp(const Rat& x, const Rat& y);

int sign(const Rat& x);
int sign(const Int& x);

Int floor(const Rat& x);
Int ceil(const Rat& x);

/// Largest integer n with n*n <= x, x >= 0.
Int isqrt(const Int& x);

/// Always "num/den", including den == 1 ("5/1"). Used for every serialized rational.
std::string to_fraction_string(const Rat& x);

/// Accepts "p/q", "n", "-n", or a finite decimal such as "0.178" (read exactly).
/// Throws std::invalid_argument on malformed input.
Rat parse_rat(std::string_view text);

/// Rounded to 6 places; display only.
double approx(const Rat& x);

}  // namespace kva
