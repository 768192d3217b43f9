#include "abel_cycles/trig/trig_poly.hpp"

#include <cmath>
#include <sstream>

#include "abel_cycles/trig/sign_chart.hpp"

namespace abel_cycles::trig {

namespace {

const RationalPoly& one_minus_c2() {
  static const RationalPoly p{Rational(1), Rational(0), Rational(-1)};
  return p;
}

const RationalPoly& one_plus_t2() {
  static const RationalPoly p{Rational(1), Rational(0), Rational(1)};
  return p;
}

Rational binomial(unsigned n, unsigned k) {
  poly::Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace

std::string to_string(Period p) { return p == Period::Pi ? "pi" : "2pi"; }

TrigPoly TrigPoly::constant(const Rational& c) { return TrigPoly(RationalPoly::constant(c), {}); }
TrigPoly TrigPoly::cos() { return TrigPoly(RationalPoly::identity(), {}); }
TrigPoly TrigPoly::sin() { return TrigPoly({}, RationalPoly::constant(1)); }

TrigPoly TrigPoly::monomial(const Rational& c, unsigned cos_power, unsigned sin_power) {
  RationalPoly base = RationalPoly::monomial(c, cos_power) * one_minus_c2().pow(sin_power / 2);
  if (sin_power % 2 == 0) return TrigPoly(std::move(base), {});
  return TrigPoly({}, std::move(base));
}

TrigPoly TrigPoly::from_terms(const TermMap& terms) {
  TrigPoly out;
  for (const auto& [ij, c] : terms) out += monomial(c, ij.first, ij.second);
  return out;
}

TermMap TrigPoly::terms() const {
  TermMap out;
  for (int k = 0; k <= even_.degree(); ++k)
    if (even_.coeff(k) != 0) out[{static_cast<unsigned>(k), 0u}] = even_.coeff(k);
  for (int k = 0; k <= odd_.degree(); ++k)
    if (odd_.coeff(k) != 0) out[{static_cast<unsigned>(k), 1u}] = odd_.coeff(k);
  return out;
}

int TrigPoly::max_degree() const {
  int d = -1;
  if (!even_.is_zero()) d = even_.degree();
  if (!odd_.is_zero()) d = std::max(d, odd_.degree() + 1);
  return d;
}

std::optional<int> TrigPoly::homogeneous_degree() const {
  if (is_zero()) return 0;
  int parity = -1;
  for (const auto& [ij, c] : terms()) {
    int p = static_cast<int>((ij.first + ij.second) % 2);
    if (parity == -1) parity = p;
    if (p != parity) return std::nullopt;
  }
  return max_degree();
}

TermMap TrigPoly::homogeneous_terms(int degree) const {
  TermMap out;
  for (const auto& [ij, c] : terms()) {
    int rest = degree - static_cast<int>(ij.first + ij.second);
    if (rest < 0 || rest % 2 != 0) {
      std::ostringstream os;
      os << "term cos^" << ij.first << " sin^" << ij.second << " does not fit a homogeneous form of degree "
         << degree << "; decompose into homogeneous layers first";
      throw NotHomogeneous(os.str());
    }
    unsigned m = static_cast<unsigned>(rest / 2);
    // c * cos^i sin^j (cos^2 + sin^2)^m
    for (unsigned k = 0; k <= m; ++k) {
      auto key = std::make_pair(ij.first + 2 * (m - k), ij.second + 2 * k);
      out[key] += c * binomial(m, k);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

TrigPoly TrigPoly::derivative() const {
  // d/dtheta [E(c) + s O(c)] = [c O - (1 - c^2) O'] + s [-E'].
  RationalPoly even = RationalPoly::identity() * odd_ - one_minus_c2() * odd_.derivative();
  RationalPoly odd = -even_.derivative();
  return TrigPoly(std::move(even), std::move(odd));
}

TrigPoly TrigPoly::conjugate() const { return TrigPoly(even_, -odd_); }

RationalPoly TrigPoly::norm() const { return even_ * even_ - one_minus_c2() * odd_ * odd_; }

TrigPoly TrigPoly::shift_by_pi() const {
  // c -> -c, s -> -s
  return TrigPoly(even_.reflect(), -odd_.reflect());
}

Period TrigPoly::detect_period() const { return shift_by_pi() == *this ? Period::Pi : Period::TwoPi; }

double TrigPoly::evaluate(double theta) const {
  const double c = std::cos(theta);
  return even_.evaluate(c) + std::sin(theta) * odd_.evaluate(c);
}

Rational TrigPoly::evaluate_at(const Rational& cos_value, const Rational& sin_value) const {
  return even_.evaluate(cos_value) + sin_value * odd_.evaluate(cos_value);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& rhs) {
  even_ += rhs.even_;
  odd_ += rhs.odd_;
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& rhs) {
  even_ -= rhs.even_;
  odd_ -= rhs.odd_;
  return *this;
}

TrigPoly& TrigPoly::operator*=(const TrigPoly& rhs) {
  RationalPoly even = even_ * rhs.even_ + one_minus_c2() * odd_ * rhs.odd_;
  RationalPoly odd = even_ * rhs.odd_ + odd_ * rhs.even_;
  even_ = std::move(even);
  odd_ = std::move(odd);
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& c) {
  even_ *= c;
  odd_ *= c;
  return *this;
}

TrigPoly TrigPoly::operator-() const { return TrigPoly(-even_, -odd_); }

TrigPoly TrigPoly::pow(unsigned k) const {
  TrigPoly out = constant(1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

std::string TrigPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto t = terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    const auto& [ij, c] = *it;
    Rational mag = poly::abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = ij.first == 0 && ij.second == 0;
    if (mag != 1 || bare) os << mag.get_str();
    bool need_star = mag != 1;
    if (ij.first > 0) {
      os << (need_star ? "*" : "") << "cos";
      if (ij.first > 1) os << '^' << ij.first;
      need_star = true;
    }
    if (ij.second > 0) os << (need_star ? "*" : "") << "sin";
  }
  return os.str();
}

RationalPoly tan_substitute(const TrigPoly& f, int degree) {
  RationalPoly out;
  for (const auto& [ij, c] : f.terms()) {
    int rest = degree - static_cast<int>(ij.first + ij.second);
    if (rest < 0 || rest % 2 != 0) {
      std::ostringstream os;
      os << "tan_substitute: " << f.to_string() << " is not homogeneous of degree " << degree
         << "; decompose into homogeneous layers first";
      throw NotHomogeneous(os.str());
    }
    out += RationalPoly::monomial(c, ij.second) * one_plus_t2().pow(static_cast<unsigned>(rest / 2));
  }
  return out;
}

RationalPoly half_angle_substitute(const TrigPoly& f) {
  if (f.is_zero()) return {};
  const unsigned m = static_cast<unsigned>(f.max_degree());
  static const RationalPoly one_minus_u2{Rational(1), Rational(0), Rational(-1)};
  static const RationalPoly two_u{Rational(0), Rational(2)};
  RationalPoly out;
  for (const auto& [ij, c] : f.terms()) {
    out += c * one_minus_u2.pow(ij.first) * two_u.pow(ij.second) * one_plus_t2().pow(m - ij.first - ij.second);
  }
  return out;
}

SignOnSet definite_sign_on_period(const TrigPoly& f) {
  if (f.is_zero()) return SignOnSet::IdenticallyZero;
  SignChart chart({TrigRational(f)});
  return chart.sign_of(0);
}

}  // namespace abel_cycles::trig
