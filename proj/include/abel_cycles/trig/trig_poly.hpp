#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "abel_cycles/poly/rational_poly.hpp"
#include "abel_cycles/poly/sturm.hpp"

namespace abel_cycles::trig {

using poly::Rational;
using poly::RationalPoly;
using poly::SignOnSet;

enum class Period { Pi, TwoPi };

std::string to_string(Period p);

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (cos-power, sin-power) -> coefficient.
using TermMap = std::map<std::pair<unsigned, unsigned>, Rational>;

/// Finite sum of c * cos^i(theta) * sin^j(theta) with rational coefficients.
///
/// Stored in the normal form E(cos) + sin * O(cos), obtained by rewriting
/// sin^2 = 1 - cos^2. The form is unique, so equality and the zero test are
/// structural. Canonical terms therefore always have j in {0, 1}.
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(RationalPoly even, RationalPoly odd) : even_(std::move(even)), odd_(std::move(odd)) {}

  static TrigPoly constant(const Rational& c);
  static TrigPoly cos();
  static TrigPoly sin();
  /// c * cos^i * sin^j.
  static TrigPoly monomial(const Rational& c, unsigned cos_power, unsigned sin_power);
  static TrigPoly from_terms(const TermMap& terms);
  /// A polynomial in cos only.
  static TrigPoly of_cos(RationalPoly p) { return TrigPoly(std::move(p), {}); }

  const RationalPoly& even_part() const { return even_; }
  const RationalPoly& odd_part() const { return odd_; }
  bool is_zero() const { return even_.is_zero() && odd_.is_zero(); }
  bool is_constant() const { return odd_.is_zero() && even_.degree() <= 0; }

  TermMap terms() const;
  /// Largest i + j over canonical terms; -1 for zero.
  int max_degree() const;
  /// Smallest d such that the function equals a homogeneous polynomial of
  /// degree d in (cos, sin); nullopt when the canonical terms mix parities.
  std::optional<int> homogeneous_degree() const;
  /// Expanded homogeneous representation of degree d (terms with i + j = d).
  TermMap homogeneous_terms(int degree) const;

  TrigPoly derivative() const;
  /// f(-theta).
  TrigPoly conjugate() const;
  /// f(theta) * f(-theta), a polynomial in cos.
  RationalPoly norm() const;
  /// f(theta + pi).
  TrigPoly shift_by_pi() const;
  Period detect_period() const;

  double evaluate(double theta) const;
  /// Exact value at a rational point (cos, sin) of the unit circle.
  Rational evaluate_at(const Rational& cos_value, const Rational& sin_value) const;

  TrigPoly& operator+=(const TrigPoly& rhs);
  TrigPoly& operator-=(const TrigPoly& rhs);
  TrigPoly& operator*=(const TrigPoly& rhs);
  TrigPoly& operator*=(const Rational& c);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const TrigPoly& b) { return a *= b; }
  friend TrigPoly operator*(TrigPoly a, const Rational& c) { return a *= c; }
  friend TrigPoly operator*(const Rational& c, TrigPoly a) { return a *= c; }
  TrigPoly operator-() const;
  TrigPoly pow(unsigned k) const;
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) = default;

  std::string to_string() const;

 private:
  RationalPoly even_;
  RationalPoly odd_;
};

/// f(arctan t) / cos^d(arctan t): each c*cos^i*sin^j of the degree-d
/// homogeneous form becomes c*t^j. Throws NotHomogeneous when f is not a
/// homogeneous form of degree d.
RationalPoly tan_substitute(const TrigPoly& f, int degree);

/// (1+u^2)^m f(2 arctan u) with m = max_degree(f): the Weierstrass chart,
/// valid for any f on (-pi, pi).
RationalPoly half_angle_substitute(const TrigPoly& f);

/// Sign of f over a full period [0, 2pi].
SignOnSet definite_sign_on_period(const TrigPoly& f);

}  // namespace abel_cycles::trig
