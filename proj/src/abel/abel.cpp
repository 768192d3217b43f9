#include "abel_cycles/abel/abel.hpp"

#include <cmath>
#include <sstream>

#include "abel_cycles/trig/sign_chart.hpp"

namespace abel_cycles::abel {

namespace {

TrigRational log_derivative(const TrigPoly& p) { return TrigRational::quotient(p.derivative(), p); }

PolyInX constant_in_x(TrigRational c) { return PolyInX{{std::move(c)}}; }

const PolyInX& x_poly() {
  static const PolyInX x{{TrigRational(), TrigRational::constant(1)}};
  return x;
}

void trim(PolyInX& p) {
  while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
}

}  // namespace

Period common_period(std::initializer_list<const TrigRational*> functions) {
  for (const TrigRational* f : functions)
    if (f->detect_period() == Period::TwoPi) return Period::TwoPi;
  return Period::Pi;
}

AbelEquation FactoredAbel::reconstruct() const {
  TrigRational a1r(a1);
  AbelEquation eq;
  eq.c3 = a1r * a2;
  eq.c2 = -(a1r * b2 + a2);
  eq.c1 = b2 - log_derivative(a1);
  eq.period = period;
  return eq;
}

FactoredAbel make_factored(TrigPoly a1, TrigRational a2, TrigRational b2) {
  if (a1.is_zero()) throw std::invalid_argument("a1 is identically zero");
  FactoredAbel f{std::move(a1), std::move(a2), std::move(b2), Period::TwoPi};
  TrigRational a1r(f.a1);
  f.period = common_period({&a1r, &f.a2, &f.b2});
  return f;
}

AbelEquation make_equation(TrigRational c1, TrigRational c2, TrigRational c3) {
  AbelEquation eq{std::move(c1), std::move(c2), std::move(c3), Period::TwoPi};
  eq.period = common_period({&eq.c1, &eq.c2, &eq.c3});
  return eq;
}

FactoredAbel factor_through_invariant(const AbelEquation& eq, const TrigPoly& a1) {
  if (a1.is_zero()) throw std::invalid_argument("a1 is identically zero");
  // C1 + C2 x + C3 x^2 = (a1 x - 1)(a2 x - b2) + rho with
  // C3 = a1 a2, C2 = -(a1 b2 + a2), rho = C1 - b2.
  TrigRational a1r(a1);
  TrigRational a2 = eq.c3 / a1r;
  TrigRational b2 = -(eq.c2 + a2) / a1r;
  TrigRational residual = eq.c1 - (b2 - log_derivative(a1));
  if (!residual.is_zero()) {
    throw NotInvariant("a1 x - 1 = 0 is not invariant: C1 - (b2 - a1'/a1) = " + residual.to_string(),
                       residual);
  }
  FactoredAbel f = make_factored(a1, std::move(a2), std::move(b2));
  return f;
}

bool PolyInX::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

int PolyInX::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (!coeffs[k].is_zero()) return k;
  return -1;
}

PolyInX PolyInX::derivative_x() const {
  PolyInX out;
  for (std::size_t k = 1; k < coeffs.size(); ++k) out.coeffs.push_back(coeffs[k] * Rational(static_cast<long>(k)));
  trim(out);
  return out;
}

PolyInX PolyInX::derivative_t() const {
  PolyInX out;
  for (const auto& c : coeffs) out.coeffs.push_back(c.derivative());
  trim(out);
  return out;
}

double PolyInX::evaluate(double theta, double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->evaluate(theta);
  return acc;
}

std::string PolyInX::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << coeffs[k].to_string() << "]";
    if (k >= 1) os << "*x";
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

PolyInX operator+(const PolyInX& a, const PolyInX& b) {
  PolyInX out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = a.coeff(k) + b.coeff(k);
  trim(out);
  return out;
}

PolyInX operator-(const PolyInX& a, const PolyInX& b) {
  PolyInX out;
  out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = a.coeff(k) - b.coeff(k);
  trim(out);
  return out;
}

PolyInX operator*(const PolyInX& a, const PolyInX& b) {
  if (a.is_zero() || b.is_zero()) return {};
  PolyInX out;
  out.coeffs.resize(a.coeffs.size() + b.coeffs.size() - 1);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  trim(out);
  return out;
}

bool operator==(const PolyInX& a, const PolyInX& b) { return (a - b).is_zero(); }

Cofactors cofactors(const FactoredAbel& f) {
  TrigRational a1r(f.a1);
  PolyInX curve{{TrigRational::constant(-1), a1r}};
  PolyInX quotient{{-f.b2, f.a2}};
  Cofactors k;
  k.of_zero = curve * quotient - constant_in_x(log_derivative(f.a1));
  k.of_curve = PolyInX{{TrigRational(), a1r}} * quotient;
  return k;
}

std::pair<PolyInX, PolyInX> cofactor_residuals(const FactoredAbel& f) {
  AbelEquation eq = f.reconstruct();
  PolyInX field{{TrigRational(), eq.c1, eq.c2, eq.c3}};
  Cofactors k = cofactors(f);

  const PolyInX& q0 = x_poly();
  PolyInX r0 = q0.derivative_t() + q0.derivative_x() * field - q0 * k.of_zero;

  PolyInX q1{{TrigRational::constant(-1), TrigRational(f.a1)}};
  PolyInX r1 = q1.derivative_t() + q1.derivative_x() * field - q1 * k.of_curve;
  return {r0, r1};
}

PolyInX build_G(const FactoredAbel& f, const GParameters& g) {
  TrigRational a1r(f.a1);
  const Rational& al = g.alpha;
  const Rational& be = g.beta;
  PolyInX out;
  out.coeffs.resize(3);
  out.coeffs[2] = a1r * f.a2 * Rational(3 + al + be);
  out.coeffs[1] = -(f.a2 * Rational(2 + al) + a1r * f.b2 * Rational(2 + al + be));
  out.coeffs[0] = f.b2 * Rational(1 + al);
  if (g.eta != 0) out.coeffs[0] += log_derivative(f.a1) * g.eta;
  trim(out);
  return out;
}

TrigRational sturm_tail_q2(const FactoredAbel& f, const GParameters& g) {
  if (g.alpha + g.beta + 3 == 0) throw DegenerateLeadingCoefficient();
  if (f.a2.is_zero()) throw std::invalid_argument("sturm_tail_q2: a2 is identically zero");
  PolyInX G = build_G(f, g);
  TrigRational A = G.coeff(2), B = G.coeff(1), C = G.coeff(0);
  return B * B / (A * Rational(4)) - C;
}

TrigRational sturm_tail_q2_printed(const FactoredAbel& f, const GParameters& g) {
  if (g.alpha + g.beta + 3 == 0) throw DegenerateLeadingCoefficient();
  if (f.a2.is_zero()) throw std::invalid_argument("sturm_tail_q2_printed: a2 is identically zero");
  const Rational& al = g.alpha;
  const Rational& be = g.beta;
  Rational s = 3 + al + be;
  TrigRational a1r(f.a1);
  TrigRational out = f.a2 / a1r * Rational((2 + al) * (2 + al) / (4 * s));
  out += a1r * f.b2 * f.b2 / f.a2 * Rational((2 + al + be) * (2 + al + be) / (4 * s));
  out -= f.b2 * Rational((2 + al * al + al * (4 + be)) / (2 * s));
  if (g.eta != 0) out += log_derivative(f.a1) * g.eta;
  return out;
}

std::string to_string(RegionV::Kind k) {
  switch (k) {
    case RegionV::Kind::A1Positive: return "A1Positive";
    case RegionV::Kind::A1SignChanging: return "A1SignChanging";
    case RegionV::Kind::A1Negative: return "A1Negative";
  }
  return "?";
}

RegionV classify_region(const FactoredAbel& f) {
  if (f.a1.is_zero()) throw std::invalid_argument("a1 is identically zero");
  RegionV r;
  r.a1_sign = trig::definite_sign_on_period(f.a1);
  switch (r.a1_sign) {
    case SignOnSet::StrictlyPositive:
      r.kind = RegionV::Kind::A1Positive;
      r.description = "0 < x < 1/a1(t) for every t";
      break;
    case SignOnSet::StrictlyNegative:
      r.kind = RegionV::Kind::A1Negative;
      r.description = "x > 0 or x < 1/a1(t), glued through x = infinity";
      break;
    default:
      // Touching zero without crossing still makes 1/a1 unbounded.
      r.kind = RegionV::Kind::A1SignChanging;
      r.description = "x > 0 with x < 1/a1(t) where a1(t) > 0";
      break;
  }
  return r;
}

AbelEquation HLNormalizedAbel::reconstruct() const {
  AbelEquation eq;
  eq.c3 = a1 * a2;
  eq.c2 = -(a1 * b2 + b1 * a2) - a1.derivative() / b1;
  eq.c1 = b1 * b2 + b1.derivative() / b1;
  eq.period = period;
  return eq;
}

HLNormalizedAbel hl_normalize(const FactoredAbel& f, const TrigPoly& b1) {
  const SignOnSet s = trig::definite_sign_on_period(b1);
  if (s != SignOnSet::StrictlyPositive && s != SignOnSet::StrictlyNegative)
    throw std::invalid_argument("hl_normalize: b1 must have no zeros on the period");
  HLNormalizedAbel h;
  TrigPoly a1b = f.a1 * b1;
  TrigRational b1r(b1);
  h.a1 = a1b;
  h.b1 = b1r;
  h.a2 = f.a2 / b1r;
  h.b2 = (f.b2 - log_derivative(a1b)) / b1r;
  h.period = f.period == Period::Pi && b1r.detect_period() == Period::Pi ? Period::Pi : Period::TwoPi;
  return h;
}

}  // namespace abel_cycles::abel
