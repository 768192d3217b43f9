#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "abel_cycles/trig/trig_poly.hpp"

namespace abel_cycles::planar {

using poly::Rational;
using trig::TrigPoly;

/// Polynomial in (x, y): (i, j) -> coefficient of x^i y^j. Zero
/// coefficients are never stored.
class Bivariate {
 public:
  using Terms = std::map<std::pair<unsigned, unsigned>, Rational>;

  Bivariate() = default;
  explicit Bivariate(Terms terms);
  static Bivariate constant(const Rational& c);
  static Bivariate monomial(const Rational& c, unsigned i, unsigned j);
  static Bivariate x() { return monomial(1, 1, 0); }
  static Bivariate y() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(unsigned i, unsigned j) const;
  /// Largest i + j; -1 for zero.
  int total_degree() const;
  bool is_homogeneous(unsigned degree) const;
  /// Terms with i + j == degree.
  Bivariate layer(unsigned degree) const;

  /// Exact quotient by x (resp. y); nullopt when some term has no factor x.
  std::optional<Bivariate> divide_by_x() const;
  std::optional<Bivariate> divide_by_y() const;

  /// x -> cos(theta), y -> sin(theta).
  TrigPoly on_unit_circle() const;
  double evaluate(double x, double y) const;

  Bivariate& operator+=(const Bivariate& rhs);
  Bivariate& operator-=(const Bivariate& rhs);
  friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
  friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
  friend Bivariate operator*(const Rational& c, const Bivariate& a);
  friend bool operator==(const Bivariate& a, const Bivariate& b) = default;

  std::string to_string() const;

 private:
  void add(std::pair<unsigned, unsigned> key, const Rational& c);
  Terms terms_;
};

}  // namespace abel_cycles::planar
