#include "abel_cycles/planar/bivariate.hpp"

#include <cmath>
#include <sstream>

namespace abel_cycles::planar {

Bivariate::Bivariate(Terms terms) {
  for (auto& [k, c] : terms) add(k, c);
}

Bivariate Bivariate::constant(const Rational& c) { return monomial(c, 0, 0); }

Bivariate Bivariate::monomial(const Rational& c, unsigned i, unsigned j) {
  Bivariate b;
  b.add({i, j}, c);
  return b;
}

void Bivariate::add(std::pair<unsigned, unsigned> key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Bivariate::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Bivariate::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.first + k.second));
  return d;
}

bool Bivariate::is_homogeneous(unsigned degree) const {
  for (const auto& [k, c] : terms_)
    if (k.first + k.second != degree) return false;
  return true;
}

Bivariate Bivariate::layer(unsigned degree) const {
  Bivariate out;
  for (const auto& [k, c] : terms_)
    if (k.first + k.second == degree) out.terms_.emplace(k, c);
  return out;
}

std::optional<Bivariate> Bivariate::divide_by_x() const {
  Bivariate out;
  for (const auto& [k, c] : terms_) {
    if (k.first == 0) return std::nullopt;
    out.terms_.emplace(std::make_pair(k.first - 1, k.second), c);
  }
  return out;
}

std::optional<Bivariate> Bivariate::divide_by_y() const {
  Bivariate out;
  for (const auto& [k, c] : terms_) {
    if (k.second == 0) return std::nullopt;
    out.terms_.emplace(std::make_pair(k.first, k.second - 1), c);
  }
  return out;
}

TrigPoly Bivariate::on_unit_circle() const {
  trig::TermMap t;
  for (const auto& [k, c] : terms_) t[k] = c;
  return TrigPoly::from_terms(t);
}

double Bivariate::evaluate(double x, double y) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_) acc += c.get_d() * std::pow(x, k.first) * std::pow(y, k.second);
  return acc;
}

Bivariate& Bivariate::operator+=(const Bivariate& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k, c);
  return *this;
}

Bivariate& Bivariate::operator-=(const Bivariate& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k, -c);
  return *this;
}

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
  Bivariate out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

Bivariate operator*(const Rational& c, const Bivariate& a) {
  Bivariate out;
  for (const auto& [k, v] : a.terms_) out.add(k, c * v);
  return out;
}

std::string Bivariate::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    Rational mag = poly::abs(c);
    bool bare = k.first == 0 && k.second == 0;
    if (mag != 1 || bare) os << mag.get_str();
    bool star = mag != 1 || bare;
    if (k.first > 0) {
      os << (star ? "*" : "") << 'x';
      if (k.first > 1) os << '^' << k.first;
      star = true;
    }
    if (k.second > 0) {
      os << (star ? "*" : "") << 'y';
      if (k.second > 1) os << '^' << k.second;
    }
  }
  return os.str();
}

}  // namespace abel_cycles::planar
