#include "abel_cycles/poly/rational_poly.hpp"

#include <algorithm>
#include <sstream>

namespace abel_cycles::poly {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::identity() { return monomial(1, 1); }

RationalPoly RationalPoly::from_roots(std::span<const Rational> roots) {
  RationalPoly out = constant(1);
  for (const auto& r : roots) out *= RationalPoly{Rational(-r), Rational(1)};
  return out;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  refresh_approx();
}

void RationalPoly::refresh_approx() {
  approx_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) approx_[i] = coeffs_[i].get_d();
}

Rational RationalPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& RationalPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return RationalPoly(std::move(d));
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = approx_.rbegin(); it != approx_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const {
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
  return acc;
}

RationalPoly RationalPoly::pow(unsigned k) const {
  RationalPoly out = constant(1);
  RationalPoly base = *this;
  while (k) {
    if (k & 1u) out *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return out;
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  RationalPoly out = *this;
  out *= Rational(1 / leading());
  return out;
}

RationalPoly RationalPoly::reflect() const {
  std::vector<Rational> v = coeffs_;
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return RationalPoly(std::move(v));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    trim();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly out = *this;
  out *= Rational(-1);
  return out;
}

std::string RationalPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1 && k != 0;
    if (!unit) os << mag.get_str();
    if (k >= 1) {
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

DivisionResult divide(const RationalPoly& p, const RationalPoly& d) {
  if (d.is_zero()) throw DivisionByZero();
  if (p.degree() < d.degree()) return {RationalPoly{}, p};
  std::vector<Rational> rem(p.coefficients().begin(), p.coefficients().end());
  const int dd = d.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - dd + 1));
  const Rational lead_inv = 1 / d.leading();
  for (int k = p.degree(); k >= dd; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Rational factor = top * lead_inv;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= factor * d.coeff(static_cast<std::size_t>(j));
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly gcd(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly x = a.monic();
  RationalPoly y = b.monic();
  while (!y.is_zero()) {
    RationalPoly r = divide(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RationalPoly squarefree_part(const RationalPoly& p) {
  if (p.degree() <= 0) return p.monic();
  RationalPoly g = gcd(p, p.derivative());
  return divide(p, g).quotient.monic();
}

Rational cauchy_bound(const RationalPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeff(static_cast<std::size_t>(k))) / lead;
    if (r > m) m = r;
  }
  // Round up to an integer to keep later bisection endpoints small.
  Integer ceil_m;
  mpz_cdiv_q(ceil_m.get_mpz_t(), m.get_num_mpz_t(), m.get_den_mpz_t());
  return Rational(ceil_m + 1);
}

}  // namespace abel_cycles::poly
