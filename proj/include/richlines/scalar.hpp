#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace richlines {

using Integer = mpz_class;
using Rational = mpq_class;

using Vector = std::vector<Rational>;
using IntVector = std::vector<Integer>;

/// Parses "a", "-a", "a/b" into a canonical rational. Throws ParseError on bad input.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

// Binomial coefficient for small non-negative arguments.
long long binomial(long long n, long long k);

}  // namespace richlines
