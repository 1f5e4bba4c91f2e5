#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace savlie {

// Exact rational scalar. Everything in the core is computed over Q; there is
// no floating point anywhere. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through these helpers.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" with arbitrary-precision integers. Throws ParseError.
Rational rational_from_string(const std::string& text);

// Renders "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& value);

Rational rational_binomial(long n, long k);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace savlie
