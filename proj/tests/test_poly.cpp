#include <doctest.h>

#include "abel_cycles/poly/feasibility.hpp"
#include "abel_cycles/poly/sturm.hpp"
#include "support.hpp"

using namespace abel_cycles::poly;
using testsupport::brute_force_roots;
using testsupport::random_poly;

namespace {

const RationalPoly x2m1{-1, 0, 1};

RationalPoly P_phi() {
  return Rational(1, 10000) * RationalPoly{-9, 10} * RationalPoly{-1, 10} * RationalPoly{1, -10, 50};
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  Rational r = parse_rational("6/-4");
  CHECK(to_string(r) == "-3/2");
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(simplest_rational_in(Rational(1, 3), Rational(3, 4)) == Rational(1, 2));
}

TEST_CASE("sturm sequence of x^2 - 1") {
  const auto chain = sturm_sequence(x2m1);
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == x2m1);
  CHECK(chain[1] == RationalPoly{0, 2});
  CHECK(chain[2] == RationalPoly{1});
  CHECK(sign_variations(chain, ExtendedPoint::neg_infinity()) == 2);
  CHECK(sign_variations(chain, Rational(0)) == 1);
  CHECK(sign_variations(chain, ExtendedPoint::pos_infinity()) == 0);
  CHECK_THROWS(sturm_sequence(RationalPoly{}));
}

TEST_CASE("sturm sequence of a non-squarefree input stops at the gcd") {
  const auto chain = sturm_sequence(RationalPoly::monomial(1, 3));
  REQUIRE(chain.size() == 2);
  CHECK(chain[1] == RationalPoly::monomial(3, 2));
  CHECK(count_distinct_roots(RationalPoly::monomial(1, 3), ExtendedPoint::neg_infinity(),
                             ExtendedPoint::pos_infinity()) == 1);
}

TEST_CASE("count_distinct_roots examples") {
  CHECK(count_distinct_roots(x2m1, Rational(-2), Rational(2)) == 2);
  CHECK(count_distinct_roots(P_phi(), ExtendedPoint::neg_infinity(), ExtendedPoint::pos_infinity()) == 2);
  CHECK(P_phi().evaluate(Rational(1, 10)) == 0);
  CHECK(P_phi().evaluate(Rational(9, 10)) == 0);
  CHECK_THROWS_AS(count_distinct_roots(x2m1, Rational(1), Rational(2)), EndpointRootError);
}

TEST_CASE("isolate_real_roots examples") {
  const auto r = isolate_real_roots(RationalPoly{-2, 0, 1});
  REQUIRE(r.size() == 2);
  for (const auto& iv : r) {
    CHECK(!iv.exact);
    CHECK(count_distinct_roots(RationalPoly{-2, 0, 1}, iv.lo, iv.hi) == 1);
  }
  CHECK(r[0].hi <= r[1].lo);

  const RationalPoly p2{0, 0, 0, -12, 18, -6};
  const auto r2 = isolate_real_roots(p2);
  REQUIRE(r2.size() == 3);
  CHECK(*r2[0].exact == 0);
  CHECK(*r2[1].exact == 1);
  CHECK(*r2[2].exact == 2);

  const RationalPoly p3 = RationalPoly{0, 0, 0, 6} * RationalPoly{3, -3, 1};
  const auto r3 = isolate_real_roots(p3);
  REQUIRE(r3.size() == 1);
  CHECK(*r3[0].exact == 0);
}

TEST_CASE("sign_on_real_line examples") {
  CHECK(sign_on_real_line(RationalPoly{6}) == SignOnSet::StrictlyPositive);
  CHECK(sign_on_real_line(RationalPoly::monomial(1, 2)) == SignOnSet::NonNegative);
  CHECK(sign_on_real_line(RationalPoly::monomial(1, 3)) == SignOnSet::Mixed);
  CHECK(sign_on_real_line(RationalPoly{}) == SignOnSet::IdenticallyZero);
  CHECK(sign_on_real_line(RationalPoly{-1, 0, -1}) == SignOnSet::StrictlyNegative);
}

TEST_CASE("sign_implication examples") {
  const RationalPoly t{0, 1};
  const RationalPoly p1 = RationalPoly::monomial(1, 3);
  const RationalPoly p2{0, 0, 0, -12, 18, -6};
  CHECK(sign_implication(p1, SignCondition::Negative, p2, SignCondition::NonNegative).holds);
  CHECK(sign_implication(p1, SignCondition::Negative, p2, SignCondition::Positive).holds);
  CHECK(sign_implication(t, SignCondition::Negative, t, SignCondition::NonPositive).holds);
  const auto bad = sign_implication(t, SignCondition::Negative, -t, SignCondition::NonPositive);
  REQUIRE(!bad.holds);
  REQUIRE(bad.counterexample);
  const double w = approx(*bad.counterexample);
  CHECK(w < 0);
}

TEST_CASE("arithmetic") {
  const auto d = divide(x2m1, RationalPoly{-1, 1});
  CHECK(d.quotient == RationalPoly{1, 1});
  CHECK(d.remainder.is_zero());
  CHECK_THROWS_AS(divide(x2m1, RationalPoly{}), DivisionByZero);

  // P_psi = -p0 t^4 + (q0 - p1) t^3 + (q1 - p2) t^2 + (q2 - p3) t + q3.
  const Rational p0(-1), p1(20731, 20000), p2(-19, 1000), p3(9, 10000), q0(1, 2), q1(2, 5), q2(-17631, 20000), q3(0);
  const RationalPoly P_psi{q3, q2 - p3, q1 - p2, q0 - p1, -p0};
  const RationalPoly by_hand{q2 - p3, 2 * (q1 - p2), 3 * (q0 - p1), -4 * p0};
  CHECK(P_psi.derivative() == by_hand);
  CHECK(P_psi == Rational(1, 20000) * RationalPoly{-1, 1} * RationalPoly{0, 1} * RationalPoly{17649, 9269, 20000});

  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const auto p = random_poly(rng, 1 + static_cast<int>(rng() % 7), 50);
    const auto q = random_poly(rng, static_cast<int>(rng() % 5), 50);
    const auto back = divide(p * q, q);
    CHECK(back.quotient == p);
    CHECK(back.remainder.is_zero());
  }
}

TEST_CASE("property: Sturm counts match the brute-force root oracle") {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> deg(1, 8), endpoint(-700, 700);
  int mismatches = 0, intervals_checked = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto p = random_poly(rng, deg(rng), 100);
    const auto approx_roots = brute_force_roots(p);
    const int total = count_distinct_roots(p, ExtendedPoint::neg_infinity(), ExtendedPoint::pos_infinity());
    if (total != static_cast<int>(approx_roots.size())) ++mismatches;

    const auto iso = isolate_real_roots(p);
    CHECK(static_cast<int>(iso.size()) == total);
    for (std::size_t i = 0; i < iso.size(); ++i) {
      if (!iso[i].exact) CHECK(count_distinct_roots(p, iso[i].lo, iso[i].hi) == 1);
      if (i) CHECK(iso[i - 1].hi <= iso[i].lo);
    }

    for (int j = 0; j < 20; ++j) {
      Rational lo(endpoint(rng), 7), hi(endpoint(rng), 7);
      if (lo == hi) continue;
      if (lo > hi) std::swap(lo, hi);
      if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0) continue;
      const double l = lo.get_d(), h = hi.get_d();
      bool ambiguous = false;
      int expected = 0;
      for (long double r : approx_roots) {
        if (std::fabs(r - l) < 1e-7 || std::fabs(r - h) < 1e-7) ambiguous = true;
        expected += (r > l && r < h);
      }
      if (ambiguous) continue;
      ++intervals_checked;
      if (count_distinct_roots(p, lo, hi) != expected) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
  CHECK(intervals_checked > 15000);
}

TEST_CASE("property: sign_variations is non-increasing") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const auto p = random_poly(rng, 1 + static_cast<int>(rng() % 8), 20);
    const auto chain = sturm_sequence(squarefree_part(p));
    int prev = sign_variations(chain, ExtendedPoint::neg_infinity());
    for (int i = -40; i <= 40; ++i) {
      const Rational x(2 * i + 1, 8);
      const int v = sign_variations(chain, x);
      CHECK(v <= prev);
      prev = v;
    }
    CHECK(sign_variations(chain, ExtendedPoint::pos_infinity()) <= prev);
  }
}

TEST_CASE("property: sign_implication agrees with dense sampling") {
  std::mt19937_64 rng(11);
  int holds = 0, fails = 0;
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
    const auto b = random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
    const auto res = sign_implication(a, SignCondition::Negative, b, SignCondition::NonPositive);
    const auto ca = testsupport::to_ld(a), cb = testsupport::to_ld(b);
    // Every root of either polynomial lies inside this window.
    bool violated = false;
    for (int i = 0; i <= 100000 && !violated; ++i) {
      const long double x = -30.0L + 60.0L * i / 100000;
      violated = testsupport::eval_ld(ca, x) < -1e-12L && testsupport::eval_ld(cb, x) > 1e-12L;
    }
    if (res.holds) {
      ++holds;
      CHECK(!violated);
    } else {
      ++fails;
      REQUIRE(res.counterexample);
      // The witness is checked exactly when rational.
      if (const auto* q = std::get_if<Rational>(&*res.counterexample)) {
        CHECK(a.sign_at(*q) < 0);
        CHECK(b.sign_at(*q) > 0);
      }
      CHECK(violated);
    }
  }
  CHECK(holds > 20);
  CHECK(fails > 20);
}

TEST_CASE("linear parameter feasibility") {
  // t^2 - 1 + eta * 1 >= 0 for all t needs eta >= 1.
  std::vector<LinearFamily> fam{{RationalPoly{-1, 0, 1}, RationalPoly{1}}};
  auto r = find_linear_parameter(fam, {});
  REQUIRE(r.status == ParameterFeasibility::Status::Feasible);
  CHECK(*r.eta >= 1);
  // t + eta >= 0 for all t is impossible.
  std::vector<LinearFamily> bad{{RationalPoly{0, 1}, RationalPoly{1}}};
  CHECK(find_linear_parameter(bad, {}).status == ParameterFeasibility::Status::Infeasible);
  // eta * t >= 0 forces eta = 0, a single rational point.
  std::vector<LinearFamily> thin{{RationalPoly{}, RationalPoly{0, 1}}};
  r = find_linear_parameter(thin, {});
  REQUIRE(r.status == ParameterFeasibility::Status::Feasible);
  CHECK(*r.eta == 0);
}
