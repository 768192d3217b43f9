#pragma once

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abel_cycles/poly/rational_poly.hpp"

namespace abel_cycles::poly {

/// A point of the extended real line.
class ExtendedPoint {
 public:
  enum class Kind { NegInfinity, Finite, PosInfinity };

  static ExtendedPoint neg_infinity() { return ExtendedPoint(Kind::NegInfinity, 0); }
  static ExtendedPoint pos_infinity() { return ExtendedPoint(Kind::PosInfinity, 0); }
  static ExtendedPoint finite(Rational v) { return ExtendedPoint(Kind::Finite, std::move(v)); }
  ExtendedPoint(const Rational& v) : ExtendedPoint(Kind::Finite, v) {}  // NOLINT

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const Rational& value() const;

  friend std::strong_ordering operator<=>(const ExtendedPoint& a, const ExtendedPoint& b);
  friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) { return (a <=> b) == 0; }

  std::string to_string() const;

 private:
  ExtendedPoint(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

enum class SignOnSet { StrictlyPositive, NonNegative, StrictlyNegative, NonPositive, IdenticallyZero, Mixed };

std::string to_string(SignOnSet s);
/// Builds the classification from which signs were observed.
SignOnSet classify_signs(bool saw_positive, bool saw_zero, bool saw_negative);
/// f >= 0 everywhere (includes StrictlyPositive and IdenticallyZero).
bool is_nonnegative(SignOnSet s);
bool is_nonpositive(SignOnSet s);
bool is_definite(SignOnSet s);

class EndpointRootError : public std::invalid_argument {
 public:
  explicit EndpointRootError(const std::string& where)
      : std::invalid_argument("endpoint " + where + " is a root; shift or shrink the interval") {}
};

/// s0 = p, s1 = p', s_{i+1} = -rem(s_{i-1}, s_i), up to the last nonzero
/// remainder. Throws std::invalid_argument for the zero polynomial.
std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);

/// Sign changes in the chain evaluated at the point, zeros omitted.
int sign_variations(std::span<const RationalPoly> chain, const ExtendedPoint& at);

/// Number of distinct real roots in (lo, hi). Both finite endpoints must be
/// non-roots. Non-square-free input is reduced by gcd(p, p') first.
int count_distinct_roots(const RationalPoly& p, const ExtendedPoint& lo, const ExtendedPoint& hi);

/// Open interval (lo, hi) holding exactly one root of the polynomial it was
/// produced for; lo and hi are themselves non-roots. `exact` is set when the
/// root was found to be rational.
struct RootInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;

  Rational midpoint() const { return (lo + hi) / 2; }
  double approx() const { return exact ? exact->get_d() : Rational((lo + hi) / 2).get_d(); }
};

/// Disjoint, increasing isolating intervals for every distinct real root.
std::vector<RootInterval> isolate_real_roots(const RationalPoly& p);

/// Shrinks an isolating interval of squarefree `p` until hi - lo <= width.
RootInterval refine_root(const RationalPoly& squarefree, RootInterval iv, const Rational& width);

/// Sign of p over all of R.
SignOnSet sign_on_real_line(const RationalPoly& p);

/// One piece of the partition of R induced by the real roots of a family of
/// polynomials: either a common root (Point) or an open interval between
/// consecutive roots (Open). `signs[i]` is the exact sign of polys[i] there.
struct Cell {
  enum class Kind { Point, Open };
  Kind kind;
  /// Point cells: isolating interval of the root. Open cells: unused.
  RootInterval root;
  /// Open cells: a rational sample strictly inside the cell and a closed
  /// rational interval of positive length contained in the cell.
  Rational sample;
  Rational inner_lo;
  Rational inner_hi;
  ExtendedPoint lo = ExtendedPoint::neg_infinity();
  ExtendedPoint hi = ExtendedPoint::pos_infinity();
  std::vector<int> signs;
};

std::vector<Cell> decompose_real_line(std::span<const RationalPoly> polys);

enum class SignCondition { Negative, NonPositive, Zero, NonNegative, Positive, NonZero };

bool satisfies(int sign, SignCondition cond);
std::string to_string(SignCondition c);

/// Either an exact rational point or an isolating interval for an
/// irrational point.
using Witness = std::variant<Rational, RootInterval>;
std::string to_string(const Witness& w);
double approx(const Witness& w);

struct ImplicationResult {
  bool holds = true;
  std::optional<Witness> counterexample;
};

/// Decides: for all real t, A(t) condA  implies  B(t) condB.
ImplicationResult sign_implication(const RationalPoly& a, SignCondition cond_a, const RationalPoly& b,
                                   SignCondition cond_b);

}  // namespace abel_cycles::poly
