#include "abel_cycles/trig/trig_rational.hpp"

#include <cmath>
#include <stdexcept>

namespace abel_cycles::trig {

TrigRational TrigRational::reduce(TrigPoly num, RationalPoly den) {
  if (den.is_zero()) throw std::domain_error("TrigRational: zero denominator");
  if (num.is_zero()) return TrigRational(TrigPoly{}, RationalPoly::constant(1));
  RationalPoly g = poly::gcd(poly::gcd(num.even_part(), num.odd_part()), den);
  if (g.degree() >= 1) {
    RationalPoly e = poly::divide(num.even_part(), g).quotient;
    RationalPoly o = poly::divide(num.odd_part(), g).quotient;
    den = poly::divide(den, g).quotient;
    num = TrigPoly(std::move(e), std::move(o));
  }
  Rational scale = 1 / den.leading();
  num *= scale;
  den *= scale;
  return TrigRational(std::move(num), std::move(den));
}

TrigRational TrigRational::quotient(const TrigPoly& num, const TrigPoly& den) {
  if (den.is_zero()) throw std::domain_error("TrigRational: zero denominator");
  if (den.odd_part().is_zero()) return reduce(num, den.even_part());
  return reduce(num * den.conjugate(), den.norm());
}

std::optional<TrigPoly> TrigRational::as_poly() const {
  if (!is_polynomial()) return std::nullopt;
  return num_;
}

std::optional<Rational> TrigRational::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return num_.even_part().coeff(0);
}

TrigRational TrigRational::derivative() const {
  // (N/D)' = (N' D - N D_theta) / D^2, D_theta = -sin * D'(cos).
  TrigPoly d = denominator_trig();
  TrigPoly d_theta = d.derivative();
  TrigPoly top = num_.derivative() * d - num_ * d_theta;
  return reduce(std::move(top), den_ * den_);
}

Period TrigRational::detect_period() const {
  // Reduced form is unique; compare with the pi-shift.
  TrigRational shifted = quotient(num_.shift_by_pi(), denominator_trig().shift_by_pi());
  return shifted == *this ? Period::Pi : Period::TwoPi;
}

double TrigRational::evaluate(double theta) const { return num_.evaluate(theta) / denominator_value(theta); }

double TrigRational::denominator_value(double theta) const { return den_.evaluate(std::cos(theta)); }

TrigRational& TrigRational::operator+=(const TrigRational& rhs) {
  if (den_ == rhs.den_) {
    *this = reduce(num_ + rhs.num_, den_);
  } else {
    *this = reduce(num_ * rhs.denominator_trig() + rhs.num_ * denominator_trig(), den_ * rhs.den_);
  }
  return *this;
}

TrigRational& TrigRational::operator-=(const TrigRational& rhs) { return *this += -rhs; }

TrigRational& TrigRational::operator*=(const TrigRational& rhs) {
  *this = reduce(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

TrigRational& TrigRational::operator/=(const TrigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("TrigRational: division by zero");
  *this = quotient(num_ * rhs.denominator_trig(), denominator_trig() * rhs.num_);
  return *this;
}

TrigRational TrigRational::operator-() const { return TrigRational(-num_, den_); }

std::string TrigRational::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string('c') + ")";
}

TrigRational cancel_pole_combination(const TrigRational& b2, const TrigPoly& a1, const Rational& eta) {
  if (a1.is_zero()) throw std::invalid_argument("cancel_pole_combination: a1 is identically zero");
  if (eta == 0) return b2;
  return b2 + TrigRational::quotient(a1.derivative(), a1) * eta;
}

}  // namespace abel_cycles::trig
