#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abel_cycles/trig/sign_chart.hpp"

using namespace abel_cycles;
using poly::Rational;
using poly::RationalPoly;
using poly::SignOnSet;
using trig::Period;
using trig::TrigPoly;
using trig::TrigRational;

namespace {

const TrigPoly c = TrigPoly::cos();
const TrigPoly s = TrigPoly::sin();

// Example 2 forms, written out from the published expansions of phi and psi.
const Rational p0(-1), p1(20731, 20000), p2(-19, 1000), p3(9, 10000);
const Rational q0(1, 2), q1(2, 5), q2(-17631, 20000), q3(0);

TrigPoly psi() {
  return q3 * c.pow(4) + (q2 - p3) * c.pow(3) * s + (q1 - p2) * c.pow(2) * s.pow(2) + (q0 - p1) * c * s.pow(3) -
         p0 * s.pow(4);
}
TrigPoly phi() {
  return p3 * c.pow(4) + (p2 + q3) * c.pow(3) * s + (p1 + q2) * c.pow(2) * s.pow(2) + (p0 + q1) * c * s.pow(3) +
         q0 * s.pow(4);
}

TrigPoly random_trig(std::mt19937_64& rng, int max_power) {
  std::uniform_int_distribution<int> coef(-9, 9), pw(0, max_power);
  TrigPoly f;
  for (int k = 0; k < 4; ++k) f += TrigPoly::monomial(coef(rng), pw(rng), pw(rng));
  return f;
}

TrigPoly random_homogeneous(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> coef(-9, 9);
  TrigPoly f;
  for (int j = 0; j <= d; ++j) f += TrigPoly::monomial(coef(rng), static_cast<unsigned>(d - j), static_cast<unsigned>(j));
  return f;
}

int sgn(double v) { return (v > 0) - (v < 0); }

}  // namespace

TEST_CASE("canonical form") {
  CHECK(c * s + s * c == Rational(2) * c * s);
  CHECK(s.pow(2) + c.pow(2) == TrigPoly::constant(1));
  CHECK((s.pow(2) - TrigPoly::constant(1) + c.pow(2)).is_zero());
  // Terms keep j in {0, 1}.
  for (const auto& [ij, coef] : (s.pow(5) * c).terms()) CHECK(ij.second <= 1);
}

TEST_CASE("canonical reduction preserves values") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> th(-4, 4);
  for (int k = 0; k < 20; ++k) {
    std::uniform_int_distribution<int> coef(-9, 9), pw(0, 5);
    TrigPoly f;
    std::vector<std::tuple<int, int, int>> raw;
    for (int j = 0; j < 4; ++j) {
      raw.emplace_back(coef(rng), pw(rng), pw(rng));
      f += TrigPoly::monomial(std::get<0>(raw.back()), std::get<1>(raw.back()), std::get<2>(raw.back()));
    }
    CHECK(TrigPoly::from_terms(f.terms()) == f);
    for (int i = 0; i < 100; ++i) {
      const double t = th(rng);
      double direct = 0;
      for (auto [a, i1, j1] : raw) direct += a * std::pow(std::cos(t), i1) * std::pow(std::sin(t), j1);
      CHECK(f.evaluate(t) == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("derivative against finite differences") {
  const TrigPoly a1 = c.pow(3) * s.pow(3);
  CHECK(a1.derivative() == Rational(-3) * c.pow(2) * s.pow(4) + Rational(3) * c.pow(4) * s.pow(2));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(0, 2 * std::numbers::pi);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double t = th(rng);
    const double fd = (a1.evaluate(t + h) - a1.evaluate(t - h)) / (2 * h);
    CHECK(std::abs(a1.derivative().evaluate(t) - fd) < 1e-6);
  }
  // Rational functions away from their poles.
  const TrigRational b2 = TrigRational::constant(6) + TrigRational::quotient(Rational(3) * c, s) -
                          TrigRational::quotient(Rational(3) * s, c);
  for (int i = 0; i < 100; ++i) {
    const double t = th(rng);
    if (std::abs(std::sin(2 * t)) < 0.1) continue;
    const double fd = (b2.evaluate(t + h) - b2.evaluate(t - h)) / (2 * h);
    CHECK(std::abs(b2.derivative().evaluate(t) - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("Example 2 forms") {
  CHECK(phi().evaluate_at(1, 0) == p3);
  CHECK(psi().detect_period() == Period::Pi);
  CHECK(phi().detect_period() == Period::Pi);
  const RationalPoly P_psi = trig::tan_substitute(psi(), 4);
  CHECK(P_psi == RationalPoly{q3, q2 - p3, q1 - p2, q0 - p1, -p0});
  CHECK(P_psi == Rational(1, 20000) * RationalPoly{-1, 1} * RationalPoly{0, 1} * RationalPoly{17649, 9269, 20000});
  CHECK(trig::definite_sign_on_period(psi()) == SignOnSet::Mixed);
}

TEST_CASE("detect_period") {
  CHECK(c.pow(4).detect_period() == Period::Pi);
  CHECK(c.detect_period() == Period::TwoPi);
  CHECK((c + c * s).detect_period() == Period::TwoPi);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(-4, 4);
  for (int k = 0; k < 30; ++k) {
    const auto f = random_trig(rng, 4);
    if (f.detect_period() != Period::Pi) continue;
    for (int i = 0; i < 100; ++i) {
      const double t = th(rng);
      CHECK(std::abs(f.evaluate(t) - f.evaluate(t + std::numbers::pi)) < 1e-12 * std::max(1.0, std::abs(f.evaluate(t))));
    }
  }
}

TEST_CASE("tan_substitute") {
  CHECK(trig::tan_substitute(c.pow(3) * s.pow(3), 6) == RationalPoly::monomial(1, 3));
  CHECK(trig::tan_substitute(TrigPoly::constant(1), 0) == RationalPoly{1});
  CHECK_THROWS_AS(trig::tan_substitute(c + c * s, 1), trig::NotHomogeneous);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(-std::numbers::pi / 2 + 1e-3, std::numbers::pi / 2 - 1e-3);
  for (int d = 1; d <= 6; ++d) {
    const auto f = random_homogeneous(rng, d);
    const auto P = trig::tan_substitute(f, d);
    for (int i = 0; i < 10000 / 6; ++i) {
      const double t = th(rng);
      const double v = f.evaluate(t);
      if (std::abs(v) > 1e-9) CHECK(sgn(v) == sgn(P.evaluate(std::tan(t))));
    }
  }
}

TEST_CASE("definite_sign_on_period") {
  CHECK(trig::definite_sign_on_period(c.pow(2)) == SignOnSet::NonNegative);
  CHECK(trig::definite_sign_on_period(TrigPoly::constant(2) + c) == SignOnSet::StrictlyPositive);
  CHECK(trig::definite_sign_on_period(c.pow(3) * s.pow(3)) == SignOnSet::Mixed);
  const TrigPoly a2 = Rational(-12) * c.pow(3) * s.pow(3) + Rational(18) * c.pow(2) * s.pow(4) - Rational(6) * c * s.pow(5);
  CHECK(trig::definite_sign_on_period(a2) == SignOnSet::Mixed);
  CHECK(trig::definite_sign_on_period(-(s.pow(2))) == SignOnSet::NonPositive);
  // Mixed parity: falls back to the half-angle chart.
  CHECK(trig::definite_sign_on_period(TrigPoly::constant(1) + s * c.pow(2)) == SignOnSet::StrictlyPositive);

  // Agreement with dense sampling on random inputs.
  std::mt19937_64 rng(6);
  for (int k = 0; k < 60; ++k) {
    const auto f = random_trig(rng, 3) + TrigPoly::constant(static_cast<long>(rng() % 20));
    const auto sign = trig::definite_sign_on_period(f);
    double lo = INFINITY, hi = -INFINITY;
    for (int i = 0; i < 20000; ++i) {
      const double v = f.evaluate(2 * std::numbers::pi * i / 20000);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (sign == SignOnSet::StrictlyPositive) CHECK(lo > 0);
    if (sign == SignOnSet::StrictlyNegative) CHECK(hi < 0);
    if (lo > 1e-9) CHECK(sign == SignOnSet::StrictlyPositive);
    if (hi < -1e-9) CHECK(sign == SignOnSet::StrictlyNegative);
    if (lo < -1e-9 && hi > 1e-9) CHECK(sign == SignOnSet::Mixed);
  }
}

TEST_CASE("cancel_pole_combination") {
  const TrigPoly a1 = c.pow(3) * s.pow(3);
  const TrigRational b2 = TrigRational::constant(6) + TrigRational::quotient(Rational(3) * c, s) -
                          TrigRational::quotient(Rational(3) * s, c);
  CHECK(trig::cancel_pole_combination(b2, a1, -1) == TrigRational::constant(6));
  CHECK(trig::cancel_pole_combination(b2, a1, 0) == b2);
  // (n - 1) a + psi'/psi with eta = -1 leaves (n - 1) a.
  const TrigRational hb2 = TrigRational::constant(1) + TrigRational::quotient(psi().derivative(), psi());
  CHECK(trig::cancel_pole_combination(hb2, psi(), -1) == TrigRational::constant(1));
}

TEST_CASE("trig rationals reduce to a unique form") {
  const TrigRational f = TrigRational::quotient(s * c, c);
  CHECK(f == TrigRational(s));
  CHECK(f.is_polynomial());
  const TrigRational g = TrigRational::quotient(TrigPoly::constant(1), s);
  CHECK(g * TrigRational(s) == TrigRational::constant(1));
  CHECK(TrigRational::quotient(c, s).detect_period() == Period::Pi);
  CHECK_THROWS(TrigRational::quotient(c, TrigPoly()));
}

TEST_CASE("sign chart") {
  const TrigPoly a1 = c.pow(3) * s.pow(3);
  trig::SignChart chart({TrigRational(a1), TrigRational(TrigPoly::constant(1) + s * c.pow(2))});
  CHECK(chart.kind() == trig::ChartKind::HalfAngle);
  CHECK(chart.sign_of(0) == SignOnSet::Mixed);
  CHECK(chart.sign_of(1) == SignOnSet::StrictlyPositive);
  // Every region's sign matches a numeric evaluation at its angle.
  for (const auto& r : chart.regions()) {
    if (!r.positive_measure()) continue;
    CHECK(r.signs[0] == sgn(a1.evaluate(r.theta)));
  }

  trig::SignChart tan_chart({TrigRational(a1)});
  CHECK(tan_chart.kind() == trig::ChartKind::Tangent);
  CHECK(tan_chart.sign_of(0) == SignOnSet::Mixed);
}
