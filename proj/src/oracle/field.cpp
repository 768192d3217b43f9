#include "abel_cycles/oracle/field.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace abel_cycles::oracle {

namespace {

std::vector<double> to_doubles(const poly::RationalPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.coefficients()) out.push_back(c.get_d());
  return out;
}

}  // namespace

Field::Field(const abel::AbelEquation& eq)
    : c1_(compile(eq.c1)),
      c2_(compile(eq.c2)),
      c3_(compile(eq.c3)),
      period_(eq.period == trig::Period::Pi ? std::numbers::pi : 2.0 * std::numbers::pi) {}

Field::Compiled Field::compile(const trig::TrigRational& f) {
  Compiled out;
  out.even = to_doubles(f.numerator().even_part());
  out.odd = to_doubles(f.numerator().odd_part());
  out.has_den = !f.is_polynomial();
  out.den = to_doubles(f.denominator());
  return out;
}

double Field::horner(const std::vector<double>& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Field::eval(const Compiled& f, double c, double s, double& den_abs) const {
  double num = horner(f.even, c) + s * horner(f.odd, c);
  if (!f.has_den) return num;
  double den = horner(f.den, c);
  den_abs = std::min(den_abs, std::abs(den));
  return num / den;
}

Coefficients Field::at(double theta) const {
  const double c = std::cos(theta), s = std::sin(theta);
  Coefficients out;
  out.min_denominator = std::numeric_limits<double>::infinity();
  out.c1 = eval(c1_, c, s, out.min_denominator);
  out.c2 = eval(c2_, c, s, out.min_denominator);
  out.c3 = eval(c3_, c, s, out.min_denominator);
  return out;
}

}  // namespace abel_cycles::oracle
