#pragma once

#include <optional>
#include <string>

#include "abel_cycles/trig/trig_poly.hpp"

namespace abel_cycles::trig {

/// Quotient of trigonometric polynomials, kept in the reduced form
/// (A(c) + s B(c)) / D(c) with D monic and gcd(A, B, D) = 1.
///
/// Any quotient N/M can be brought to this form by multiplying with the
/// conjugate M(-theta), since M(theta) M(-theta) depends on cos only. The
/// reduced form is unique, so exact cancellations (for example of the poles
/// of b2 against eta * a1'/a1) show up as a trivial denominator.
class TrigRational {
 public:
  TrigRational() : den_(RationalPoly::constant(1)) {}
  TrigRational(TrigPoly p) : num_(std::move(p)), den_(RationalPoly::constant(1)) {}  // NOLINT
  static TrigRational constant(const Rational& c) { return TrigRational(TrigPoly::constant(c)); }
  /// Throws std::domain_error when the denominator is identically zero.
  static TrigRational quotient(const TrigPoly& num, const TrigPoly& den);

  const TrigPoly& numerator() const { return num_; }
  /// Denominator as a polynomial in cos(theta).
  const RationalPoly& denominator() const { return den_; }
  TrigPoly denominator_trig() const { return TrigPoly::of_cos(den_); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  std::optional<TrigPoly> as_poly() const;
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  std::optional<Rational> as_constant() const;

  TrigRational derivative() const;
  Period detect_period() const;

  double evaluate(double theta) const;
  double denominator_value(double theta) const;

  TrigRational& operator+=(const TrigRational& rhs);
  TrigRational& operator-=(const TrigRational& rhs);
  TrigRational& operator*=(const TrigRational& rhs);
  TrigRational& operator/=(const TrigRational& rhs);
  friend TrigRational operator+(TrigRational a, const TrigRational& b) { return a += b; }
  friend TrigRational operator-(TrigRational a, const TrigRational& b) { return a -= b; }
  friend TrigRational operator*(TrigRational a, const TrigRational& b) { return a *= b; }
  friend TrigRational operator/(TrigRational a, const TrigRational& b) { return a /= b; }
  friend TrigRational operator*(TrigRational a, const Rational& c) { return a *= TrigRational::constant(c); }
  friend TrigRational operator*(const Rational& c, TrigRational a) { return a *= TrigRational::constant(c); }
  TrigRational operator-() const;
  friend bool operator==(const TrigRational& a, const TrigRational& b) = default;

  std::string to_string() const;

 private:
  TrigRational(TrigPoly num, RationalPoly den) : num_(std::move(num)), den_(std::move(den)) {}
  static TrigRational reduce(TrigPoly num, RationalPoly den);

  TrigPoly num_;
  RationalPoly den_;
};

/// b2 + eta * a1'/a1 in reduced form.
TrigRational cancel_pole_combination(const TrigRational& b2, const TrigPoly& a1, const Rational& eta);

}  // namespace abel_cycles::trig
