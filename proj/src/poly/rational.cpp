#include "abel_cycles/poly/rational.hpp"

#include <cmath>

namespace abel_cycles::poly {

namespace {

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_text(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string owned(s[0] == '+' ? s.substr(1) : s);
  return Integer(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string digits(whole.empty() || whole == "-" || whole == "+" ? std::string_view("0") : whole);
    if (negative && digits == "-") digits = "-0";
    if (frac.empty() || !is_integer_text(frac) || frac[0] == '-' || frac[0] == '+')
      throw ParseError("bad decimal literal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer int_part = parse_integer(digits);
    Integer frac_part = parse_integer(frac);
    Integer num = abs(int_part) * scale + frac_part;
    if (negative) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) { return value.get_str(); }

int sign(const Rational& value) { return sgn(value); }

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);

  // Continued-fraction descent on 0 < lo <= hi.
  Integer fl = floor_of(lo);
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational lo_frac = lo - fl;
  Rational hi_frac = hi - fl;
  // lo_frac, hi_frac in (0, 1]; recurse on reciprocals with swapped roles.
  Rational inner = simplest_rational_in(1 / hi_frac, 1 / lo_frac);
  return Rational(fl) + 1 / inner;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("from_double: non-finite value");
  Rational q(value);
  q.canonicalize();
  return q;
}

}  // namespace abel_cycles::poly
