#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "abel_cycles/oracle/oracle.hpp"
#include "abel_cycles/planar/planar.hpp"
#include "abel_cycles/repro/worked_examples.hpp"
#include "support.hpp"

using namespace abel_cycles;
using oracle::Stability;
using poly::Rational;
using trig::TrigPoly;
using trig::TrigRational;

namespace {

constexpr double kPi = std::numbers::pi;
const TrigPoly c = TrigPoly::cos();
const TrigPoly s = TrigPoly::sin();

abel::FactoredAbel constants(long a1, long a2, long b2) {
  return abel::make_factored(TrigPoly::constant(a1), TrigRational::constant(a2), TrigRational::constant(b2));
}

oracle::Field linear_field() {
  return oracle::Field(abel::make_equation(TrigRational::constant(1), TrigRational(), TrigRational()));
}

}  // namespace

TEST_CASE("linear equation against its closed form") {
  const auto r = oracle::integrate(linear_field(), 1.0, 0.0, 1.0);
  CHECK(!r.escaped());
  CHECK(std::abs(r.x - std::numbers::e) < 1e-8);
  CHECK(std::abs(r.z - 1.0) < 1e-12);
}

TEST_CASE("tolerance halving shrinks the error") {
  // Over [0, 20] the solution grows to e^20 and the global error is the
  // accumulated local error. With the step cap lifted, a 5(4) pair used with
  // local extrapolation gives global error proportional to the tolerance, so
  // each halving should roughly halve it.
  const auto field = linear_field();
  std::vector<double> err;
  for (double tol = 1e-7; tol > 1e-11; tol /= 2) {
    oracle::IntegratorConfig cfg;
    cfg.rtol = tol;
    cfg.atol = tol * 1e-2;
    cfg.x_max = 1e12;
    cfg.max_step_fraction = 1.0;
    const auto r = oracle::integrate(field, 1.0, 0.0, 20.0, cfg);
    REQUIRE(!r.escaped());
    err.push_back(std::abs(r.x / std::exp(20.0) - 1));
  }
  for (std::size_t i = 1; i < err.size(); ++i) {
    const double ratio = err[i - 1] / err[i];
    CHECK(ratio > std::pow(2.0, 0.6));
    CHECK(ratio < std::pow(2.0, 1.4));
  }
}

TEST_CASE("autonomous cubic moves towards the curve") {
  // x (x - 1)(-x - 1) at 1/2 is 0.375 > 0, so x increases and d(1/2) > 0.
  const auto f = constants(1, -1, 1);
  const oracle::Field field(f);
  const auto samples = oracle::displacement_map(field, {0.0, 0.5});
  CHECK(samples[0].d == 0.0);
  CHECK(!samples[1].escaped);
  CHECK(samples[1].d > 0);
  CHECK(samples[1].x0 + samples[1].d < 1.0);

  // d > 0 on the whole fiber: no cycle.
  for (const auto& smp : oracle::displacement_map(field, oracle::graded_grid(0, 1, 100))) {
    CHECK(!smp.escaped);
    CHECK(smp.d > 0);
  }
}

TEST_CASE("d(0) vanishes exactly") {
  for (const auto& f : {constants(1, -1, 1), constants(1, 2, 1), repro::example1_expected_factored(),
                        planar::cherkas_transform(repro::example2_system()).abel}) {
    const auto smp = oracle::displacement_map(oracle::Field(f), {0.0});
    CHECK(smp[0].d == 0.0);
    CHECK(!smp[0].escaped);
  }
}

TEST_CASE("variational derivative matches finite differences") {
  oracle::IntegratorConfig cfg;
  cfg.rtol = 1e-12;
  cfg.atol = 1e-14;
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  const double h = 1e-6;
  for (const auto& f : {constants(1, 2, 1), constants(1, -1, 1), planar::cherkas_transform(repro::example2_system()).abel}) {
    const oracle::Field field(f);
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng);
      grid.insert(grid.end(), {x, x - h, x + h});
    }
    const auto smp = oracle::displacement_map(field, grid, cfg);
    int compared = 0;
    for (std::size_t i = 0; i < smp.size(); i += 3) {
      if (smp[i].escaped || smp[i + 1].escaped || smp[i + 2].escaped) continue;
      const double fd = (smp[i + 2].d - smp[i + 1].d) / (2 * h);
      CHECK(std::abs(smp[i].dprime - fd) <= 1e-4 * std::max(1.0, std::abs(fd)));
      ++compared;
    }
    CHECK(compared >= 25);
  }
}

TEST_CASE("one stable cycle for x' = x (x - 1)(2x - 1)") {
  const auto rep = oracle::count_cycles_in_V(constants(1, 2, 1));
  REQUIRE(rep.cycles.size() == 1);
  const auto& cy = rep.cycles[0];
  CHECK(std::abs(cy.x_star - 0.5) < 1e-8);
  CHECK(cy.x_lo <= cy.x_star);
  CHECK(cy.x_star <= cy.x_hi);
  CHECK(cy.d_lo * cy.d_hi < 0);
  // p_x(1/2) = d/dx [2x^3 - 3x^2 + x] = 6/4 - 3 + 1 = -1/2 over the period pi.
  CHECK(std::abs(cy.dprime - std::expm1(-kPi / 2)) < 1e-6);
  CHECK(cy.stability == Stability::Stable);

  CHECK(oracle::count_cycles_in_V(constants(1, -1, 1)).cycles.empty());
}

TEST_CASE("Example 2 after the Cherkas transform has no cycle in V") {
  const auto rep = oracle::count_cycles_in_V(planar::cherkas_transform(repro::example2_system()).abel);
  CHECK(rep.cycles.empty());
}

TEST_CASE("Example 1 origin is unstable") {
  // Starting at exactly 0 keeps x = 0, so z is the integral of C1 = 6.
  const auto f = repro::example1_expected_factored();
  const auto smp = oracle::displacement_map(oracle::Field(f), {0.0});
  const double T = kPi;
  CHECK(smp[0].dprime > 0);
  CHECK(std::abs(std::log1p(smp[0].dprime) - 6 * T) < 1e-8 * 6 * T);
}

TEST_CASE("invariance of the two curves") {
  const auto ex = repro::example1_expected_factored();
  CHECK(oracle::verify_invariance(ex, oracle::Curve::Zero, 0, kPi) == 0.0);
  CHECK(oracle::verify_invariance(ex, oracle::Curve::A1Curve, kPi / 8, 3 * kPi / 8) < 1e-6);
  // |a1| = |sin 2t|^3 / 8 stays above 1e-2 up to about 1.348.
  CHECK(oracle::verify_invariance(ex, oracle::Curve::A1Curve, kPi / 4, 1.34) < 1e-6);
  CHECK(oracle::verify_invariance(constants(1, -1, 1), oracle::Curve::A1Curve, 0, kPi) < 1e-10);

  // Following 1/a1 into the zero of a1 at pi/2 must stop, not return garbage.
  const oracle::Field field(ex);
  const double x0 = 1 / ex.a1.evaluate(kPi / 4);
  const auto r = oracle::integrate(field, x0, kPi / 4, kPi / 2 + 0.1);
  CHECK(r.escaped());
}

TEST_CASE("negative a1 component") {
  const auto f = constants(-1, 1, 1);
  const auto g = oracle::negative_component_transform(f);
  // y' = -y (y - 1)(y + 1).
  const auto eq = g.reconstruct();
  CHECK(eq.c3 == TrigRational::constant(-1));
  CHECK(eq.c2.is_zero());
  CHECK(eq.c1 == TrigRational::constant(1));
  CHECK_THROWS(oracle::negative_component_transform(constants(1, 1, 1)));

  const auto rep = oracle::count_cycles_in_V(f);
  REQUIRE(rep.cycles.size() == 1);
  // x = b2 / a2 = 1 maps to y = a1 b2 / a2 = -1.
  CHECK(std::abs(rep.cycles[0].x_star + 1) < 1e-8);
  CHECK(rep.cycles[0].stability == Stability::Stable);
}

TEST_CASE("negative transform agrees with direct substitution") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int k = 0; k < 20; ++k) {
    const TrigPoly a1 = TrigPoly::constant(-4) + testsupport::ratio(coef(rng), 2) * c + testsupport::ratio(coef(rng), 2) * s;
    const TrigRational a2 = TrigPoly::constant(coef(rng)) + Rational(coef(rng)) * c * s;
    const TrigRational b2 = TrigPoly::constant(coef(rng)) + Rational(coef(rng)) * s;
    const auto f = abel::make_factored(a1, a2, b2);
    const auto eq = oracle::negative_component_transform(f).reconstruct();
    // y = a1 x turns the field into y (y - 1)(a2 y / a1 - b2).
    const TrigRational r = a2 / TrigRational(a1);
    CHECK(eq.c3 == r);
    CHECK(eq.c2 == -(r + b2));
    CHECK(eq.c1 == b2);
  }
}

TEST_CASE("stability of the a1 curve when a1 < 0") {
  // In y = a1 x the curve is y = 1 and its multiplier is the exponential of
  // the integral of a2/a1 - b2. That has the sign of a1 b2 - a2 whenever the
  // latter keeps one sign, since a1 < 0.
  const TrigPoly a1 = TrigPoly::constant(-2) - c;
  for (const auto& [a2, b2] : std::vector<std::pair<TrigRational, TrigRational>>{
           {TrigRational::constant(1), TrigRational::constant(1)},
           {TrigRational::constant(-3), TrigRational::constant(1)},
           {TrigRational(c), TrigRational::constant(-1)}}) {
    const auto f = abel::make_factored(a1, a2, b2);
    const oracle::Field field(oracle::negative_component_transform(f));
    const auto smp = oracle::displacement_map(field, {1.0});
    REQUIRE(!smp[0].escaped);
    CHECK(std::abs(smp[0].d) < 1e-9);
    const auto multiplier = a2 / TrigRational(a1) - b2;
    const auto criterion = TrigRational(a1) * b2 - a2;
    const double T = field.period();
    double integral = 0, crit_integral = 0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      integral += multiplier.evaluate((i + 0.5) * T / n) * T / n;
      crit_integral += criterion.evaluate((i + 0.5) * T / n) * T / n;
    }
    CHECK(std::abs(std::log1p(smp[0].dprime) - integral) < 1e-6 * std::max(1.0, std::abs(integral)));
    CHECK((std::expm1(crit_integral) > 0) == (smp[0].dprime > 0));
  }
}

TEST_CASE("CSV output") {
  std::ostringstream os;
  oracle::write_samples_csv(os, oracle::displacement_map(oracle::Field(constants(1, 2, 1)), {0.25, 0.75}));
  const std::string text = os.str();
  CHECK(text.rfind("x0,d,dprime,escaped\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
