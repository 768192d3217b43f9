// One PASS/FAIL line per acceptance criterion. Published values are spelled
// out here from their closed forms rather than taken from the library's
// own reproduction tables; derived values use the oracles in support.hpp.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "abel_cycles/criteria/criteria.hpp"
#include "abel_cycles/oracle/oracle.hpp"
#include "abel_cycles/planar/planar.hpp"
#include "abel_cycles/poly/sturm.hpp"
#include "abel_cycles/repro/worked_examples.hpp"
#include "support.hpp"

using namespace abel_cycles;
using criteria::Bound;
using criteria::Outcome;
using poly::ExtendedPoint;
using poly::Rational;
using poly::RationalPoly;
using poly::SignCondition;
using trig::TrigPoly;
using trig::TrigRational;

namespace {

constexpr double kPi = std::numbers::pi;
const TrigPoly c = TrigPoly::cos();
const TrigPoly s = TrigPoly::sin();

/// Collects failed sub-checks so each criterion prints a single line.
struct Ledger {
  std::vector<std::string> failures;
  std::ostringstream summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

abel::FactoredAbel constants(long a1, long a2, long b2) {
  return abel::make_factored(TrigPoly::constant(a1), TrigRational::constant(a2), TrigRational::constant(b2));
}

void criterion1(Ledger& L) {
  const auto rigid = planar::detect_rigid(repro::example1_rigid().to_planar());
  L.expect(rigid.k == 6, "k = 6");
  const TrigPoly a1 = c.pow(3) * s.pow(3);
  const auto f = abel::factor_through_invariant(planar::rigid_to_abel(rigid), a1);
  L.expect(f.a1 == a1, "a1 = cos^3 sin^3");
  L.expect(f.a2 == TrigRational(Rational(-12) * c.pow(3) * s.pow(3) + Rational(18) * c.pow(2) * s.pow(4) -
                                Rational(6) * c * s.pow(5)),
           "a2");
  L.expect(f.b2 == TrigRational::constant(6) + TrigRational::quotient(Rational(3) * c, s) -
                       TrigRational::quotient(Rational(3) * s, c),
           "b2 = 6 + 3 cot - 3 tan");
  L.expect(f.b2 - f.a1.derivative() / TrigRational(f.a1) == TrigRational::constant(6), "b2 - a1'/a1 = 6");

  const RationalPoly t{0, 1};
  const RationalPoly p1 = trig::tan_substitute(a1, 6);
  const RationalPoly p2 = trig::tan_substitute(*f.a2.as_poly(), 6);
  const RationalPoly p3 = trig::tan_substitute(Rational(6) * a1 - *f.a2.as_poly(), 6);
  L.expect(p1 == RationalPoly::monomial(1, 3), "p1 = t^3");
  L.expect(p2 == RationalPoly{0, 0, 0, -12, 18, -6}, "p2");
  L.expect(p3 == Rational(6) * RationalPoly::monomial(1, 3) * RationalPoly{3, -3, 1}, "p3 = 6t^3(3 - 3t + t^2)");
  const auto r2 = poly::isolate_real_roots(p2);
  L.expect(r2.size() == 3 && r2[0].exact && *r2[0].exact == 0 && r2[1].exact && *r2[1].exact == 1 && r2[2].exact &&
               *r2[2].exact == 2,
           "p2 roots {0, 1, 2}");
  const auto r3 = poly::isolate_real_roots(p3);
  L.expect(r3.size() == 1 && r3[0].exact && *r3[0].exact == 0, "p3 root {0}");
  // The two sign checks that finish the argument.
  L.expect(poly::sign_implication(t, SignCondition::Negative, p2, SignCondition::Positive).holds, "p2 > 0 for t < 0");
  L.expect(poly::sign_implication(t, SignCondition::Positive, p3, SignCondition::Positive).holds, "p3 > 0 for t > 0");

  const auto v2 = criteria::check_theorem2(f, -1);
  L.expect(v2.outcome == Outcome::Holds && v2.bound == Bound::AtMostOne, "theorem 2 Holds/AtMostOne");
  const auto hl = criteria::check_hl5_prop10(abel::hl_normalize(f, TrigPoly::constant(1)), {-1, 0, 1});
  L.expect(hl.outcome == Outcome::Fails, "HL5 Prop 10 Fails");
  L.summary << "Example 1 exact reproduction";
}

void criterion2(Ledger& L) {
  using planar::Bivariate;
  const Rational a(1, 2);
  const Rational p0(-1), p1(20731, 20000), p2(-19, 1000), p3(9, 10000);
  const Rational q0(1, 2), q1(2, 5), q2(-17631, 20000), q3(0);
  // p_i multiplies x^(3-i) y^i, likewise q_i.
  const Bivariate P = Bivariate::monomial(p0, 0, 3) + Bivariate::monomial(p1, 1, 2) + Bivariate::monomial(p2, 2, 1) +
                      Bivariate::monomial(p3, 3, 0);
  const Bivariate Q = Bivariate::monomial(q0, 0, 3) + Bivariate::monomial(q1, 1, 2) + Bivariate::monomial(q2, 2, 1) +
                      Bivariate::monomial(q3, 3, 0);
  const auto sys = planar::make_homogeneous(a, 3, P, Q);
  const RationalPoly P_psi = trig::tan_substitute(sys.psi, 4);
  const RationalPoly P_phi = trig::tan_substitute(sys.phi, 4);
  L.expect(P_psi == Rational(1, 20000) * RationalPoly{-1, 1} * RationalPoly{0, 1} * RationalPoly{17649, 9269, 20000},
           "P_psi factored");
  L.expect(P_phi == Rational(1, 10000) * RationalPoly{-9, 10} * RationalPoly{-1, 10} * RationalPoly{1, -10, 50},
           "P_phi factored");
  L.expect(poly::count_distinct_roots(P_phi, ExtendedPoint::neg_infinity(), ExtendedPoint::pos_infinity()) == 2,
           "P_phi has 2 real roots");
  // t in [0, 1] is t^2 - t <= 0.
  L.expect(poly::sign_implication(RationalPoly{0, -1, 1}, SignCondition::NonPositive, a * P_psi - P_phi,
                                  SignCondition::NonPositive)
               .holds,
           "a P_psi - P_phi <= 0 on [0, 1]");

  const auto c1 = criteria::check_corollary1(sys);
  L.expect(c1.outcome == Outcome::Holds && c1.bound == Bound::NoNontrivialCycle, "corollary 1 Holds");
  const auto neg = criteria::hl5_negative_checks(sys);
  L.expect(neg.checks.size() == 5 && neg.all_confirmed(), "five HL5 negative checks");
  L.expect(neg.p1 && neg.p2 && criteria::root_with_negative_partner(*neg.p1, *neg.p2, Rational(-1, 2), Rational(1, 2)),
           "P1 root in [-1/2, 1/2] with P2 < 0 there");
  L.summary << "Example 2 exact reproduction";
}

void criterion3(Ledger& L) {
  oracle::OracleOptions opt;
  opt.grid = 400;
  const auto ex2 = oracle::count_cycles_in_V(planar::cherkas_transform(repro::example2_system()).abel, opt);
  L.expect(ex2.cycles.empty(), "Example 2: no sign change of d in V");
  const auto one = oracle::count_cycles_in_V(constants(1, 2, 1), opt);
  L.expect(one.cycles.size() == 1 && std::abs(one.cycles[0].x_star - 0.5) <= 1e-8, "(1, 2, 1): one cycle at 1/2");
  const auto none = oracle::count_cycles_in_V(constants(1, -1, 1), opt);
  L.expect(none.cycles.empty(), "(1, -1, 1): no cycle");
  L.summary << "oracle counts 0 / " << one.cycles.size() << " / " << none.cycles.size() << " (kernel " << one.kernel
            << ")";
}

void criterion4(Ledger& L) {
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<int> deg(1, 8), endpoint(-700, 700);
  int mismatches = 0, intervals = 0;
  for (int k = 0; k < 1000; ++k) {
    const auto p = testsupport::random_poly(rng, deg(rng), 100);
    const auto roots = testsupport::brute_force_roots(p);
    if (poly::count_distinct_roots(p, ExtendedPoint::neg_infinity(), ExtendedPoint::pos_infinity()) !=
        static_cast<int>(roots.size()))
      ++mismatches;
    for (int j = 0; j < 20; ++j) {
      Rational lo(endpoint(rng), 7), hi(endpoint(rng), 7);
      lo.canonicalize();
      hi.canonicalize();
      if (lo == hi) continue;
      if (lo > hi) std::swap(lo, hi);
      if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0) continue;
      const double l = lo.get_d(), h = hi.get_d();
      bool ambiguous = false;
      int expected = 0;
      for (long double r : roots) {
        ambiguous = ambiguous || std::fabs(r - l) < 1e-7 || std::fabs(r - h) < 1e-7;
        expected += (r > l && r < h);
      }
      if (ambiguous) continue;
      ++intervals;
      if (poly::count_distinct_roots(p, lo, hi) != expected) ++mismatches;
    }
  }
  L.expect(mismatches == 0, std::to_string(mismatches) + " root-count mismatches");

  int disagreements = 0;
  for (int k = 0; k < 200; ++k) {
    const auto A = testsupport::random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
    const auto B = testsupport::random_poly(rng, 1 + static_cast<int>(rng() % 4), 5);
    const auto res = poly::sign_implication(A, SignCondition::Negative, B, SignCondition::NonPositive);
    const auto ca = testsupport::to_ld(A), cb = testsupport::to_ld(B);
    bool violated = false;
    for (int i = 0; i <= 100000 && !violated; ++i) {
      const long double x = -30.0L + 60.0L * i / 100000;
      violated = testsupport::eval_ld(ca, x) < -1e-12L && testsupport::eval_ld(cb, x) > 1e-12L;
    }
    if (res.holds == violated) ++disagreements;
  }
  L.expect(disagreements == 0, std::to_string(disagreements) + " sign_implication disagreements");
  L.summary << "1000 polynomials, " << intervals << " finite intervals, 200 implication pairs";
}

void criterion5(Ledger& L) {
  oracle::IntegratorConfig cfg;
  cfg.rtol = 1e-12;
  cfg.atol = 1e-14;
  const double h = 1e-6;
  std::mt19937_64 rng(5005);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  const std::vector<abel::FactoredAbel> suite{constants(1, 2, 1), constants(1, -1, 1),
                                              planar::cherkas_transform(repro::example2_system()).abel,
                                              repro::example1_expected_factored()};
  int compared = 0;
  double worst = 0;
  for (const auto& f : suite) {
    const oracle::Field field(f);
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng);
      grid.insert(grid.end(), {x, x - h, x + h});
    }
    const auto smp = oracle::displacement_map(field, grid, cfg);
    for (std::size_t i = 0; i < smp.size(); i += 3) {
      if (smp[i].escaped || smp[i + 1].escaped || smp[i + 2].escaped) continue;
      const double fd = (smp[i + 2].d - smp[i + 1].d) / (2 * h);
      worst = std::max(worst, std::abs(smp[i].dprime - fd) / std::max(1.0, std::abs(fd)));
      ++compared;
    }
    const auto zero = oracle::displacement_map(field, {0.0}, cfg);
    L.expect(zero[0].d == 0.0 && !zero[0].escaped, "d(0) = 0");
  }
  L.expect(compared >= 50, "at least 50 finite-difference comparisons");
  L.expect(worst <= 1e-4, "d' within 1e-4 of finite differences");

  const auto ex1 = repro::example1_expected_factored();
  const double inv1 = oracle::verify_invariance(ex1, oracle::Curve::A1Curve, kPi / 8, 3 * kPi / 8);
  const double inv2 = oracle::verify_invariance(constants(1, -1, 1), oracle::Curve::A1Curve, 0, kPi);
  L.expect(inv1 < 1e-6, "Example 1 curve invariance");
  L.expect(inv2 < 1e-6, "constant curve invariance");
  L.expect(oracle::verify_invariance(ex1, oracle::Curve::Zero, 0, kPi) == 0.0, "x = 0 invariance");
  L.summary << compared << " d' comparisons (worst " << worst << "), invariance " << inv1 << " / " << inv2;
}

std::string describe(const abel::FactoredAbel& f) {
  return "a1 = " + f.a1.to_string() + ", a2 = " + f.a2.to_string() + ", b2 = " + f.b2.to_string();
}

TrigPoly small_trig(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), pw(0, 2);
  TrigPoly f = TrigPoly::constant(testsupport::ratio(coef(rng), 2));
  for (int k = 0; k < 2; ++k) f += TrigPoly::monomial(testsupport::ratio(coef(rng), 2), pw(rng), pw(rng));
  return f;
}

void criterion6(Ledger& L) {
  std::mt19937_64 rng(6006);
  int holds1 = 0, holds2 = 0, attained = 0, tried = 0, violations = 0;
  std::string first_violation;
  oracle::OracleOptions opt;
  opt.grid = 200;
  while ((holds1 < 20 || holds2 < 20) && tried < 200000) {
    ++tried;
    const TrigPoly a1 = small_trig(rng);
    if (a1.is_zero()) continue;
    const TrigRational a2 = small_trig(rng), b2 = small_trig(rng);
    if (a2.is_zero() || b2.is_zero()) continue;
    const auto f = abel::make_factored(a1, a2, b2);
    const bool want1 = holds1 < 20, want2 = holds2 < 20;
    const auto v1 = want1 ? criteria::check_theorem1_sweep(f) : criteria::CriterionVerdict{};
    const auto v2 = want2 ? criteria::check_theorem2_sweep(f) : criteria::CriterionVerdict{};
    if (!v1.holds() && !v2.holds()) continue;
    const auto rep = oracle::count_cycles_in_V(f, opt);
    const std::size_t n = rep.cycles.size();
    if (v1.holds()) {
      ++holds1;
      if (n > 0) ++violations, first_violation = first_violation.empty() ? describe(f) : first_violation;
    }
    if (v2.holds()) {
      ++holds2;
      if (n > 1) ++violations, first_violation = first_violation.empty() ? describe(f) : first_violation;
      if (n == 1) ++attained;
    }
  }
  L.expect(holds1 >= 20, "20 instances passing theorem 1 (found " + std::to_string(holds1) + ")");
  L.expect(holds2 >= 20, "20 instances passing theorem 2 (found " + std::to_string(holds2) + ")");
  L.expect(violations == 0, std::to_string(violations) + " bound violations, first " + first_violation);
  L.summary << holds1 << " theorem-1 and " << holds2 << " theorem-2 instances from " << tried
            << " draws, no bound exceeded; theorem-2 bound attained on " << attained;
}

}  // namespace

int main() {
  using Check = std::function<void(Ledger&)>;
  struct Entry {
    std::string name;
    Check run;
    double limit_s;
  };
  const std::vector<Entry> all{{"example1", criterion1, 10},          {"example2", criterion2, 30},
                               {"oracle-consistency", criterion3, 60}, {"sturm-properties", criterion4, 120},
                               {"numerical-integrity", criterion5, 0}, {"bounds-vs-oracle", criterion6, 0}};
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Ledger L;
    const auto start = std::chrono::steady_clock::now();
    try {
      all[i].run(L);
    } catch (const std::exception& e) {
      L.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (all[i].limit_s > 0 && secs > all[i].limit_s)
      L.failures.push_back("runtime over " + std::to_string(static_cast<int>(all[i].limit_s)) + " s");
    std::cout << (L.failures.empty() ? "PASS" : "FAIL") << " " << (i + 1) << " " << all[i].name << ": "
              << L.summary.str() << " (" << std::fixed << std::setprecision(1) << secs << " s)";
    std::cout.unsetf(std::ios::fixed);
    for (const auto& f : L.failures) std::cout << "\n    failed: " << f;
    std::cout << std::endl;
    failed += !L.failures.empty();
  }
  return failed == 0 ? 0 : 1;
}
