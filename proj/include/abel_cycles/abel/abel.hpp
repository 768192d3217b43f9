#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "abel_cycles/trig/trig_rational.hpp"

namespace abel_cycles::abel {

using poly::Rational;
using poly::SignOnSet;
using trig::Period;
using trig::TrigPoly;
using trig::TrigRational;

/// x' = C1 x + C2 x^2 + C3 x^3.
struct AbelEquation {
  TrigRational c1;
  TrigRational c2;
  TrigRational c3;
  Period period = Period::TwoPi;
};

/// x' = a1 a2 x^3 - (a1 b2 + a2) x^2 + (b2 - a1'/a1) x, i.e. the equation with
/// the two invariant curves x = 0 and a1 x - 1 = 0.
struct FactoredAbel {
  TrigPoly a1;
  TrigRational a2;
  TrigRational b2;
  Period period = Period::TwoPi;

  AbelEquation reconstruct() const;
  /// a2 identically zero: the equation is a Riccati equation.
  bool is_riccati() const { return a2.is_zero(); }
};

/// Pi when every function is pi-periodic.
Period common_period(std::initializer_list<const TrigRational*> functions);

/// Validates a1 and fills in the period.
FactoredAbel make_factored(TrigPoly a1, TrigRational a2, TrigRational b2);
AbelEquation make_equation(TrigRational c1, TrigRational c2, TrigRational c3);

class NotInvariant : public std::runtime_error {
 public:
  NotInvariant(const std::string& what, TrigRational residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const TrigRational& residual() const { return residual_; }

 private:
  TrigRational residual_;
};

/// Divides C1 + C2 x + C3 x^2 by a1 x - 1. Throws NotInvariant carrying the
/// residual C1 - (b2 - a1'/a1) when a1 x - 1 = 0 is not an invariant curve.
FactoredAbel factor_through_invariant(const AbelEquation& eq, const TrigPoly& a1);

/// Polynomial in x whose coefficients are trig rationals, lowest power first.
struct PolyInX {
  std::vector<TrigRational> coeffs;

  bool is_zero() const;
  int degree() const;
  TrigRational coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : TrigRational(); }
  PolyInX derivative_x() const;
  PolyInX derivative_t() const;
  double evaluate(double theta, double x) const;
  std::string to_string() const;

  friend PolyInX operator+(const PolyInX& a, const PolyInX& b);
  friend PolyInX operator-(const PolyInX& a, const PolyInX& b);
  friend PolyInX operator*(const PolyInX& a, const PolyInX& b);
  friend bool operator==(const PolyInX& a, const PolyInX& b);
};

struct Cofactors {
  /// Cofactor of x = 0.
  PolyInX of_zero;
  /// Cofactor of a1 x - 1 = 0.
  PolyInX of_curve;
};

Cofactors cofactors(const FactoredAbel& f);
/// q_t + q_x p - q K for both curves; identically zero when the curves are
/// invariant with the returned cofactors.
std::pair<PolyInX, PolyInX> cofactor_residuals(const FactoredAbel& f);

struct GParameters {
  Rational alpha;
  Rational beta;
  Rational eta;
};

/// G = (3+alpha+beta) a1 a2 x^2 - ((2+alpha) a2 + (2+alpha+beta) a1 b2) x
///     + (1+alpha) b2 + eta a1'/a1.
PolyInX build_G(const FactoredAbel& f, const GParameters& g);

class DegenerateLeadingCoefficient : public std::invalid_argument {
 public:
  DegenerateLeadingCoefficient() : std::invalid_argument("alpha + beta + 3 = 0: G is not quadratic in x") {}
};

/// Last element of the Sturm chain {G, G_x, q2} of G as a polynomial in x:
/// q2 = B^2/(4A) - C.
TrigRational sturm_tail_q2(const FactoredAbel& f, const GParameters& g);
/// The closed form as printed in the literature, whose eta term carries the
/// opposite sign; kept for comparison.
TrigRational sturm_tail_q2_printed(const FactoredAbel& f, const GParameters& g);

struct RegionV {
  enum class Kind { A1Positive, A1SignChanging, A1Negative };
  Kind kind;
  SignOnSet a1_sign;
  std::string description;
};

std::string to_string(RegionV::Kind k);
RegionV classify_region(const FactoredAbel& f);

/// x' = (A1 x - B1)(A2 x - B2) x + (B1' - A1' x) x / B1.
struct HLNormalizedAbel {
  TrigRational a1;
  TrigRational b1;
  TrigRational a2;
  TrigRational b2;
  Period period = Period::TwoPi;

  AbelEquation reconstruct() const;
};

/// Requires b1 without zeros on the period.
HLNormalizedAbel hl_normalize(const FactoredAbel& f, const TrigPoly& b1);

}  // namespace abel_cycles::abel
