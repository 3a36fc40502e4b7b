#pragma once

#include <gmpxx.h>

#include <string>

namespace cst {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// Builds num/den and canonicalizes it.
Rat make_rat(long num, long den = 1);
Rat rat_from_strings(const std::string& num, const std::string& den);
std::string numerator_string(const Rat& q);
std::string denominator_string(const Rat& q);
/// "p/q" or "p" for integers.
std::string to_string(const Rat& q);

Rat floor_rat(const Rat& q);
/// Representative of q modulo 1 in [0, 1).
Rat frac(const Rat& q);
Rat abs_rat(const Rat& q);

inline int sign(const Rat& q) { return sgn(q); }

}  // namespace cst
