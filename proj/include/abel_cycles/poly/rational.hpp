#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace abel_cycles::poly {

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "num/den", "num" or a finite decimal such as "-0.25".
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& value);

int sign(const Rational& value);
Rational abs(const Rational& value);

/// The rational with smallest denominator in the closed interval [lo, hi]
/// (Stern-Brocot descent). Requires lo <= hi.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

/// Exact binary value of a finite double.
Rational from_double(double value);

}  // namespace abel_cycles::poly
