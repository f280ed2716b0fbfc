#pragma once

#include <gmpxx.h>

#include <string>

namespace toral {

// Exact rational scalar used by all torus geometry. No floating point is
// ever used in a geometric predicate.
using Rat = mpq_class;

// num/den, canonicalized (lowest terms, positive denominator).
Rat make_rat(long num, long den = 1);

// Parses "num/den" or a plain integer string.
Rat parse_rat(const std::string& text);

// Lowest terms with positive denominator; integers print without "/1".
std::string rat_to_string(const Rat& r);

// Largest integer <= r.
long rat_floor(const Rat& r);

// r - floor(r), in [0,1).
Rat mod1(const Rat& r);

bool is_integer(const Rat& r);

// Fixed-point decimal with `digits` fractional digits, rounded half up.
// Deterministic across platforms (pure integer arithmetic).
std::string rat_to_decimal(const Rat& r, int digits);

}  // namespace toral
