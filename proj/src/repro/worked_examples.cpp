#include "abel_cycles/repro/worked_examples.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace abel_cycles::repro {

using poly::Rational;
using poly::RationalPoly;
using trig::TrigPoly;
using trig::TrigRational;
using planar::Bivariate;

namespace {

Bivariate bivariate(std::initializer_list<std::tuple<unsigned, unsigned, Rational>> terms) {
  Bivariate b;
  for (const auto& [i, j, c] : terms) b += Bivariate::monomial(c, i, j);
  return b;
}

const TrigPoly& cos_() {
  static const TrigPoly c = TrigPoly::cos();
  return c;
}
const TrigPoly& sin_() {
  static const TrigPoly s = TrigPoly::sin();
  return s;
}

std::string roots_text(const std::vector<poly::RootInterval>& roots) {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ", ";
    out += poly::to_string(poly::Witness(roots[i]));
  }
  return out + "}";
}

bool roots_are(const std::vector<poly::RootInterval>& roots, std::initializer_list<Rational> want) {
  if (roots.size() != want.size()) return false;
  auto it = want.begin();
  for (const auto& r : roots)
    if (!r.exact || *r.exact != *it++) return false;
  return true;
}

class Table {
 public:
  explicit Table(ReproReport& rep) : rep_(rep) {}
  void add(std::string id, std::string expected, std::string observed, bool pass) {
    rep_.rows.push_back({std::move(id), std::move(expected), std::move(observed), pass});
  }
  // Runs `body`, turning an exception into a failed row.
  template <class F>
  void guarded(const std::string& id, const std::string& expected, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(id, expected, std::string("exception: ") + e.what(), false);
    }
  }

 private:
  ReproReport& rep_;
};

std::string verdict_text(const criteria::CriterionVerdict& v) {
  return criteria::to_string(v.outcome) + "/" + criteria::to_string(v.bound);
}

}  // namespace

planar::RigidSystem example1_rigid() {
  Bivariate p = bivariate({{0, 0, 1},
                           {4, 2, Rational(-1, 2)},
                           {3, 3, 1},
                           {2, 4, Rational(-5, 2)},
                           {1, 5, 1},
                           {6, 6, -2},
                           {5, 7, 3},
                           {4, 8, -1}});
  return {p, 6};
}

TrigPoly example1_a1() { return cos_().pow(3) * sin_().pow(3); }

abel::FactoredAbel example1_expected_factored() {
  const auto& c = cos_();
  const auto& s = sin_();
  TrigRational a2 = Rational(-12) * c.pow(3) * s.pow(3) + Rational(18) * c.pow(2) * s.pow(4) - Rational(6) * c * s.pow(5);
  TrigRational b2 = TrigRational::constant(6) + TrigRational::quotient(Rational(3) * c, s) -
                    TrigRational::quotient(Rational(3) * s, c);
  return abel::make_factored(example1_a1(), a2, b2);
}

planar::HomogeneousSystem example2_system() {
  const Rational a(1, 2);
  const Rational p0(-1), p1(20731, 20000), p2(-19, 1000), p3(9, 10000);
  const Rational q0(1, 2), q1(2, 5), q2(-17631, 20000), q3(0);
  Bivariate P = bivariate({{3, 0, p3}, {2, 1, p2}, {1, 2, p1}, {0, 3, p0}});
  Bivariate Q = bivariate({{3, 0, q3}, {2, 1, q2}, {1, 2, q1}, {0, 3, q0}});
  return planar::make_homogeneous(a, 3, P, Q);
}

io::json example1_input() {
  const auto sys = example1_rigid().to_planar();
  return {{"xdot", io::to_json(sys.xdot)}, {"ydot", io::to_json(sys.ydot)}, {"invariant_curve", io::to_json(example1_a1())}};
}

io::json example2_input() {
  const auto sys = example2_system();
  return {{"a", io::to_json(sys.a)}, {"n", sys.n}, {"P", io::to_json(sys.P)}, {"Q", io::to_json(sys.Q)}};
}

bool ReproReport::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return !rows.empty();
}

void ReproReport::print_table(std::ostream& os) const {
  std::size_t w = 10;
  for (const auto& r : rows) w = std::max(w, r.id.size());
  os << "reproduce " << example << "\n";
  for (const auto& r : rows) {
    os << (r.pass ? "  PASS  " : "  FAIL  ") << std::left << std::setw(static_cast<int>(w)) << r.id << "  expected "
       << r.expected << "; got " << r.observed << "\n";
  }
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.pass;
  os << passed << "/" << rows.size() << " assertions pass\n";
}

ReproReport reproduce_example1(const oracle::OracleOptions& opt) {
  ReproReport rep;
  rep.example = "example1";
  Table t(rep);
  const auto expected = example1_expected_factored();
  const Rational eta(-1);

  t.guarded("rigid.k", "6", [&] {
    const auto r = planar::detect_rigid(example1_rigid().to_planar());
    t.add("rigid.k", "6", std::to_string(r.k), r.k == 6);
  });

  abel::FactoredAbel f;
  t.guarded("transform", "a1, a2, b2 as printed", [&] {
    const auto r = planar::detect_rigid(example1_rigid().to_planar());
    const auto eq = planar::rigid_to_abel(r);
    const auto layer6 = example1_rigid().p.layer(6).on_unit_circle();
    const auto layer12 = example1_rigid().p.layer(12).on_unit_circle();
    const bool coeffs = eq.c1 == TrigRational::constant(6) && eq.c2 == TrigRational(Rational(6) * layer6) &&
                        eq.c3 == TrigRational(Rational(6) * layer12);
    t.add("rho' coefficients", "C1 = 6, C2 = 6 p6, C3 = 6 p12", coeffs ? "match" : "differ", coeffs);
    f = abel::factor_through_invariant(eq, example1_a1());
    t.add("a1", expected.a1.to_string(), f.a1.to_string(), f.a1 == expected.a1);
    t.add("a2", expected.a2.to_string(), f.a2.to_string(), f.a2 == expected.a2);
    t.add("b2", expected.b2.to_string(), f.b2.to_string(), f.b2 == expected.b2);
    t.add("period", "pi", trig::to_string(f.period), f.period == trig::Period::Pi);
    const auto [r0, r1] = abel::cofactor_residuals(f);
    t.add("invariant curves", "both residuals 0", r0.is_zero() && r1.is_zero() ? "0, 0" : "nonzero",
          r0.is_zero() && r1.is_zero());
  });
  if (f.a1.is_zero()) f = expected;

  t.guarded("b2 - a1'/a1", "6", [&] {
    const auto k = trig::cancel_pole_combination(f.b2, f.a1, eta);
    t.add("b2 - a1'/a1", "6", k.to_string(), k == TrigRational::constant(6));
    const auto sweep = criteria::eta_candidate_sweep(f);
    const bool has = std::find(sweep.begin(), sweep.end(), eta) != sweep.end();
    t.add("eta sweep contains -1", "yes", has ? "yes" : "no", has);
  });

  t.guarded("p1", "t^3", [&] {
    const auto p1 = trig::tan_substitute(f.a1, 6);
    t.add("p1", "t^3", p1.to_string('t'), p1 == RationalPoly::monomial(1, 3));
    const auto a2 = f.a2.as_poly();
    if (!a2) throw std::runtime_error("a2 is not a trig polynomial");
    const auto p2 = trig::tan_substitute(*a2, 6);
    const RationalPoly p2_want{0, 0, 0, -12, 18, -6};
    t.add("p2", p2_want.to_string('t'), p2.to_string('t'), p2 == p2_want);
    const auto r2 = poly::isolate_real_roots(p2);
    t.add("p2 real roots", "{0, 1, 2}", roots_text(r2), roots_are(r2, {0, 1, 2}));
    const auto six_a1 = TrigRational(Rational(6) * f.a1) - f.a2;
    const auto p3 = trig::tan_substitute(*six_a1.as_poly(), 6);
    const RationalPoly p3_want = RationalPoly{0, 0, 0, 6} * RationalPoly{3, -3, 1};
    t.add("p3", p3_want.to_string('t'), p3.to_string('t'), p3 == p3_want);
    const auto r3 = poly::isolate_real_roots(p3);
    t.add("p3 real roots", "{0}", roots_text(r3), roots_are(r3, {0}));
    const auto a2_sign = trig::definite_sign_on_period(*a2);
    t.add("a2 sign", "Mixed", poly::to_string(a2_sign), a2_sign == poly::SignOnSet::Mixed);
    const auto region = abel::classify_region(f);
    t.add("region V", "A1SignChanging", abel::to_string(region.kind),
          region.kind == abel::RegionV::Kind::A1SignChanging);
  });

  t.guarded("criteria", "", [&] {
    const auto th1 = criteria::check_theorem1(f, eta);
    const auto th2 = criteria::check_theorem2(f, eta);
    const auto hl = criteria::check_hl5_prop10(abel::hl_normalize(f, TrigPoly::constant(1)), {-1, 0, 1});
    t.add("theorem 1 (eta = -1)", "Fails", verdict_text(th1), th1.outcome == criteria::Outcome::Fails);
    t.add("theorem 2 (eta = -1)", "Holds/AtMostOne", verdict_text(th2),
          th2.outcome == criteria::Outcome::Holds && th2.bound == criteria::Bound::AtMostOne);
    t.add("HL5 Prop 10", "Fails", verdict_text(hl), hl.outcome == criteria::Outcome::Fails);
    rep.details["theorem1"] = io::to_json(th1);
    rep.details["theorem2"] = io::to_json(th2);
    rep.details["hl5_prop10"] = io::to_json(hl);
  });

  t.guarded("oracle", "", [&] {
    const oracle::Field field(f);
    // Along x = 0 the variational integral is exactly the integral of C1.
    const auto r = oracle::integrate(field, 0.0, 0.0, field.period(), opt.cfg);
    const double dprime = std::expm1(r.z), want = std::expm1(6.0 * field.period());
    std::ostringstream obs;
    obs << dprime;
    t.add("d'(0) > 0 (origin unstable)", "exp(6T) - 1 > 0", obs.str(),
          !r.escaped() && dprime > 0 && std::abs(dprime - want) <= 1e-8 * want);
    const auto report = oracle::count_cycles_in_V(f, opt);
    t.add("oracle cycles in V", "<= 1", std::to_string(report.cycles.size()), report.cycles.size() <= 1);
    rep.details["oracle"] = io::to_json(report);
  });
  rep.details["factored"] = io::to_json(f);
  return rep;
}

ReproReport reproduce_example2(const oracle::OracleOptions& opt) {
  ReproReport rep;
  rep.example = "example2";
  Table t(rep);
  const auto sys = example2_system();
  const unsigned n = sys.n;

  t.guarded("coefficients", "", [&] {
    const Rational phi0 = sys.phi.evaluate_at(1, 0);
    t.add("phi(0) = p3", "9/10000", poly::to_string(phi0), phi0 == Rational(9, 10000));
    t.add("psi period", "pi", trig::to_string(sys.psi.detect_period()), sys.psi.detect_period() == trig::Period::Pi);

    const auto P_psi = trig::tan_substitute(sys.psi, 4);
    const RationalPoly psi_want = Rational(1, 20000) * RationalPoly{-1, 1} * RationalPoly{0, 1} *
                                  RationalPoly{17649, 9269, 20000};
    t.add("P_psi", psi_want.to_string('t'), P_psi.to_string('t'), P_psi == psi_want);
    const auto P_phi = trig::tan_substitute(sys.phi, 4);
    const RationalPoly phi_want = Rational(1, 10000) * RationalPoly{-9, 10} * RationalPoly{-1, 10} *
                                  RationalPoly{1, -10, 50};
    t.add("P_phi", phi_want.to_string('t'), P_phi.to_string('t'), P_phi == phi_want);
    const auto roots = poly::isolate_real_roots(P_phi);
    t.add("P_phi real roots", "{1/10, 9/10}", roots_text(roots), roots_are(roots, {Rational(1, 10), Rational(9, 10)}));
    const auto psi_sign = trig::definite_sign_on_period(sys.psi);
    t.add("psi sign", "Mixed", poly::to_string(psi_sign), psi_sign == poly::SignOnSet::Mixed);
  });

  abel::FactoredAbel f;
  t.guarded("cherkas", "", [&] {
    const auto ch = planar::cherkas_transform(sys);
    f = ch.abel;
    const Rational m(n - 1);
    const TrigRational a2_want(m * (sys.a * sys.psi - sys.phi));
    const TrigRational b2_want = TrigRational::constant(sys.a * m) + TrigRational::quotient(sys.psi.derivative(), sys.psi);
    t.add("a1 = psi", "psi", f.a1 == sys.psi ? "psi" : f.a1.to_string(), f.a1 == sys.psi);
    t.add("a2 = 2(psi/2 - phi)", a2_want.to_string(), f.a2.to_string(), f.a2 == a2_want);
    t.add("b2 = a(n-1) + psi'/psi", b2_want.to_string(), f.b2.to_string(), f.b2 == b2_want);
    const bool expansion = planar::cherkas_expansion_residual(sys).is_zero();
    t.add("Cherkas expansion identity", "residual 0", expansion ? "0" : "nonzero", expansion);
    const auto k = trig::cancel_pole_combination(f.b2, f.a1, ch.default_eta);
    t.add("b2 - psi'/psi", "1", k.to_string(), ch.default_eta == -1 && k == TrigRational::constant(sys.a * m));
  });

  t.guarded("criteria", "", [&] {
    const auto c1 = criteria::check_corollary1(sys);
    t.add("corollary 1", "Holds/NoNontrivialCycle", verdict_text(c1),
          c1.outcome == criteria::Outcome::Holds && c1.bound == criteria::Bound::NoNontrivialCycle);
    const auto neg = criteria::hl5_negative_checks(sys);
    for (const auto& c : neg.checks) t.add("HL5 negative " + c.id, "confirmed", c.confirmed ? "confirmed" : "not confirmed", c.confirmed);
    const bool window = neg.root_window && neg.root_window->first == Rational(-1, 2) && neg.root_window->second == Rational(1, 2);
    t.add("P1 root with P2 < 0", "[-1/2, 1/2]",
          neg.root_window ? "[" + poly::to_string(neg.root_window->first) + ", " + poly::to_string(neg.root_window->second) + "]"
                          : "none",
          window);
    rep.details["corollary1"] = io::to_json(c1);
    rep.details["hl5_negative_checks"] = io::to_json(neg);
  });

  t.guarded("oracle", "", [&] {
    if (f.a1.is_zero()) throw std::runtime_error("no transformed equation");
    const auto report = oracle::count_cycles_in_V(f, opt);
    t.add("oracle cycles in V", "0", std::to_string(report.cycles.size()), report.cycles.empty());
    rep.details["oracle"] = io::to_json(report);
  });
  if (!f.a1.is_zero()) rep.details["factored"] = io::to_json(f);
  return rep;
}

std::optional<ReproReport> reproduce(const std::string& id, const oracle::OracleOptions& opt) {
  if (id == "example1") return reproduce_example1(opt);
  if (id == "example2") return reproduce_example2(opt);
  return std::nullopt;
}

}  // namespace abel_cycles::repro
