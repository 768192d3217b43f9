#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "abel_cycles/poly/rational.hpp"

namespace abel_cycles::poly {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. The coefficient vector is trimmed so the leading coefficient is
/// nonzero; the zero polynomial has no coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  RationalPoly(std::initializer_list<Rational> coefficients);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t power);
  /// The polynomial x.
  static RationalPoly identity();
  /// prod (x - r) over the given roots.
  static RationalPoly from_roots(std::span<const Rational> roots);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero past the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  RationalPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;
  int sign_at(const Rational& x) const { return sgn(evaluate(x)); }
  /// p(q(x)).
  RationalPoly compose(const RationalPoly& q) const;
  RationalPoly pow(unsigned k) const;
  RationalPoly monic() const;
  /// p(-x).
  RationalPoly reflect() const;

  RationalPoly& operator+=(const RationalPoly& rhs);
  RationalPoly& operator-=(const RationalPoly& rhs);
  RationalPoly& operator*=(const RationalPoly& rhs);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  RationalPoly operator-() const;

  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  void refresh_approx();

  std::vector<Rational> coeffs_;
  std::vector<double> approx_;
};

struct DivisionResult {
  RationalPoly quotient;
  RationalPoly remainder;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("polynomial division by the zero polynomial") {}
};

/// p = q*d + r with deg r < deg d.
DivisionResult divide(const RationalPoly& p, const RationalPoly& d);

/// Monic greatest common divisor; gcd(0, 0) = 0.
RationalPoly gcd(const RationalPoly& a, const RationalPoly& b);

/// p / gcd(p, p'), made monic. Same distinct roots as p, all simple.
RationalPoly squarefree_part(const RationalPoly& p);

/// Cauchy bound: every real root r of p satisfies |r| < bound. Integer valued.
Rational cauchy_bound(const RationalPoly& p);

}  // namespace abel_cycles::poly
