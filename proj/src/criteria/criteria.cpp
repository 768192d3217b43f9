#include "abel_cycles/criteria/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace abel_cycles::criteria {

using poly::SignCondition;
using poly::SignOnSet;
using trig::ChartRegion;
using trig::SignChart;

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "Holds";
    case Outcome::Fails: return "Fails";
    case Outcome::Inapplicable: return "Inapplicable";
  }
  return "?";
}

std::string to_string(Bound b) {
  switch (b) {
    case Bound::NoNontrivialCycle: return "NoNontrivialCycle";
    case Bound::AtMostOne: return "AtMostOne";
    case Bound::None: return "None";
  }
  return "?";
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::PositiveBranch: return "PositiveBranch";
    case Branch::NegativeBranch: return "NegativeBranch";
    case Branch::None: return "None";
  }
  return "?";
}

std::string Location::to_string() const {
  std::ostringstream os;
  if (!point) {
    os << label;
  } else {
    os << chart << '=' << poly::to_string(*point);
    if (sheet == 1) os << " (+pi)";
  }
  os << " theta~" << theta;
  return os.str();
}

namespace {

/// premise(t) => target(t) wherever both are defined; premise < 0 means
/// unconditional.
struct Requirement {
  std::string id;
  int premise = -1;
  SignCondition premise_cond = SignCondition::NonZero;
  int target = 0;
  SignCondition target_cond = SignCondition::NonNegative;
};

SignCondition strict_of(SignCondition c) {
  switch (c) {
    case SignCondition::NonNegative: return SignCondition::Positive;
    case SignCondition::NonPositive: return SignCondition::Negative;
    default: return c;
  }
}

Location locate(const SignChart& chart, const ChartRegion& r) {
  Location loc;
  loc.chart = chart.kind() == trig::ChartKind::Tangent ? "t" : "u";
  loc.sheet = r.sheet;
  loc.theta = r.theta;
  if (r.where == ChartRegion::Where::ExtraPoint) {
    loc.label = r.label;
  } else {
    loc.point = chart.chart_witness(r);
  }
  return loc;
}

double chart_to_theta(const SignChart& chart, const Rational& x, int sheet) {
  if (chart.kind() == trig::ChartKind::Tangent) return std::atan(x.get_d()) + (sheet ? std::numbers::pi : 0.0);
  return 2.0 * std::atan(x.get_d());
}

bool relevant(const ChartRegion& r, const Requirement& q) {
  if (q.premise >= 0 && !r.defined[q.premise]) return false;
  return r.defined[q.target];
}

bool premise_holds(const ChartRegion& r, const Requirement& q) {
  return q.premise < 0 || poly::satisfies(r.signs[q.premise], q.premise_cond);
}

std::string describe_requirement(const Requirement& q, const std::vector<std::string>& names) {
  std::string out;
  if (q.premise >= 0) out = names[q.premise] + " " + poly::to_string(q.premise_cond) + " => ";
  return out + names[q.target] + " " + poly::to_string(q.target_cond);
}

/// First violating region, preferring positive-measure ones.
std::optional<WitnessEntry> find_violation(const SignChart& chart, const Requirement& q,
                                           const std::vector<std::string>& names) {
  const ChartRegion* found = nullptr;
  for (const auto& r : chart.regions()) {
    if (!relevant(r, q) || !premise_holds(r, q)) continue;
    if (poly::satisfies(r.signs[q.target], q.target_cond)) continue;
    if (r.positive_measure()) {
      found = &r;
      break;
    }
    if (!found) found = &r;
  }
  if (!found) return std::nullopt;
  WitnessEntry w{q.id, locate(chart, *found), {}};
  std::ostringstream os;
  os << "violates " << describe_requirement(q, names) << ": sign(" << names[q.target]
     << ") = " << found->signs[q.target];
  w.detail = os.str();
  return w;
}

/// An open chart interval where one of the requirements holds strictly with
/// its premise satisfied.
std::optional<StrictnessEvidence> find_strict(const SignChart& chart, const std::vector<Requirement>& alts) {
  for (const auto& r : chart.regions()) {
    if (!r.positive_measure()) continue;
    for (const auto& q : alts) {
      if (!relevant(r, q) || !premise_holds(r, q)) continue;
      if (!poly::satisfies(r.signs[q.target], strict_of(q.target_cond))) continue;
      StrictnessEvidence e;
      e.condition = q.id;
      e.chart = chart.kind() == trig::ChartKind::Tangent ? "t" : "u";
      e.sheet = r.sheet;
      e.lo = r.cell.inner_lo;
      e.hi = r.cell.inner_hi;
      e.theta_lo = chart_to_theta(chart, e.lo, r.sheet);
      e.theta_hi = chart_to_theta(chart, e.hi, r.sheet);
      return e;
    }
  }
  return std::nullopt;
}

struct BranchResult {
  std::vector<WitnessEntry> violations;
  std::optional<StrictnessEvidence> strict;
  bool passed() const { return violations.empty() && strict.has_value(); }
};

BranchResult run_branch(const SignChart& chart, const std::vector<Requirement>& reqs,
                        const std::vector<Requirement>& strict_alts, const std::vector<std::string>& names) {
  BranchResult out;
  for (const auto& q : reqs)
    if (auto w = find_violation(chart, q, names)) out.violations.push_back(std::move(*w));
  if (out.violations.empty()) out.strict = find_strict(chart, strict_alts);
  return out;
}

/// Witness for the absence of positive-measure strictness: any open region.
WitnessEntry no_strictness_witness(const SignChart& chart, const std::string& id) {
  for (const auto& r : chart.regions())
    if (r.positive_measure()) return {id, locate(chart, r), "no open set where the inequalities are strict"};
  return {id, {}, "no open set where the inequalities are strict"};
}

SignCondition branch_cond(int sigma, bool nonnegative) {
  bool pos = (sigma > 0) == nonnegative;
  return pos ? SignCondition::NonNegative : SignCondition::NonPositive;
}

TrigRational log_derivative(const TrigPoly& p) { return TrigRational::quotient(p.derivative(), p); }

/// Odd-order real poles make the sign flip across the pole.
bool has_odd_order_poles(const TrigRational& f) {
  if (f.is_polynomial()) return false;
  SignChart chart({TrigRational(f.denominator_trig())});
  return chart.sign_of(0) == SignOnSet::Mixed;
}

bool has_poles(const TrigRational& f) {
  if (f.is_polynomial()) return false;
  SignOnSet s = SignChart({TrigRational(f.denominator_trig())}).sign_of(0);
  return s != SignOnSet::StrictlyPositive && s != SignOnSet::StrictlyNegative;
}

void fill_branch_verdict(CriterionVerdict& v, const SignChart& chart, int sigma, const BranchResult& br,
                         Bound bound) {
  v.branch = sigma > 0 ? Branch::PositiveBranch : Branch::NegativeBranch;
  if (br.passed()) {
    v.outcome = Outcome::Holds;
    v.bound = bound;
    v.strictness.push_back(*br.strict);
    return;
  }
  v.outcome = Outcome::Fails;
  v.bound = Bound::None;
  v.witnesses = br.violations;
  if (v.witnesses.empty()) v.witnesses.push_back(no_strictness_witness(chart, "strictness"));
}

/// Theorems share everything except the orientation of condition (i).
CriterionVerdict check_theorem(const FactoredAbel& f, const Rational& eta, int which) {
  CriterionVerdict v;
  v.criterion = which == 1 ? "theorem1" : "theorem2";
  v.eta = eta;
  if (f.is_riccati()) {
    v.notes.push_back("a2 is identically zero: Riccati equation, at most one non-null limit cycle");
    return v;
  }
  if (which == 2 && f.b2.is_zero()) {
    v.notes.push_back("b2 is identically zero");
    return v;
  }
  TrigRational k = trig::cancel_pole_combination(f.b2, f.a1, eta);
  if (has_odd_order_poles(k)) {
    v.notes.push_back("b2 + eta a1'/a1 = " + k.to_string() + " has odd-order poles for eta = " + poly::to_string(eta));
    return v;
  }
  TrigRational a1(f.a1);
  TrigRational w = a1 * f.b2 - f.a2 + TrigRational(f.a1.derivative()) * eta;
  const std::vector<std::string> names{"a1", "b2+eta*a1'/a1", "a2", "a1*b2-a2+eta*a1'"};
  SignChart chart({a1, k, f.a2, w});
  if (chart.sign_of(0) == SignOnSet::StrictlyNegative) {
    v.notes.push_back("a1 < 0 on the whole period: condition (i) makes a2 of definite sign, so the bound "
                      "follows through the definite-a2 proposition");
  }
  if (which == 2) v.notes.push_back("the bound of one cycle is attained within this class, not necessarily here");

  std::optional<std::pair<int, BranchResult>> reported;
  for (int sigma : {1, -1}) {
    // Theorem 1: a1 < 0 => a2 <= 0; Theorem 2: a1 < 0 => a2 >= 0 (positive branch).
    std::vector<Requirement> reqs{
        {"(a) b2+eta*a1'/a1 definite", -1, SignCondition::NonZero, 1, branch_cond(sigma, true)},
        {"(i)", 0, SignCondition::Negative, 2, branch_cond(sigma, which == 2)},
        {"(ii)", 0, SignCondition::Positive, 3, branch_cond(sigma, true)},
    };
    std::vector<Requirement> strict{reqs[1], reqs[2]};
    BranchResult br = run_branch(chart, reqs, strict, names);
    if (br.passed()) {
      fill_branch_verdict(v, chart, sigma, br, which == 1 ? Bound::NoNontrivialCycle : Bound::AtMostOne);
      return v;
    }
    // Report the branch whose sign hypothesis (a) is met, if any.
    bool a_ok = br.violations.empty() || br.violations.front().condition.rfind("(a)", 0) != 0;
    if (!reported || (a_ok && !reported->second.violations.empty() &&
                      reported->second.violations.front().condition.rfind("(a)", 0) == 0)) {
      reported = std::make_pair(sigma, std::move(br));
    }
  }
  fill_branch_verdict(v, chart, reported->first, reported->second, Bound::None);
  return v;
}

CriterionVerdict sweep(const FactoredAbel& f, int which) {
  std::optional<CriterionVerdict> best;
  std::string tried;
  for (const Rational& eta : eta_candidate_sweep(f)) {
    tried += (tried.empty() ? "" : ", ") + poly::to_string(eta);
    CriterionVerdict v = check_theorem(f, eta, which);
    if (v.holds()) return v;
    if (!best || (best->outcome == Outcome::Inapplicable && v.outcome == Outcome::Fails)) best = std::move(v);
  }
  best->notes.push_back("eta candidates tried: " + tried);
  return *best;
}

}  // namespace

CriterionVerdict check_theorem1(const FactoredAbel& f, const Rational& eta) { return check_theorem(f, eta, 1); }
CriterionVerdict check_theorem2(const FactoredAbel& f, const Rational& eta) { return check_theorem(f, eta, 2); }
CriterionVerdict check_theorem1_sweep(const FactoredAbel& f) { return sweep(f, 1); }
CriterionVerdict check_theorem2_sweep(const FactoredAbel& f) { return sweep(f, 2); }

CriterionVerdict check_prop_definite_a2(const FactoredAbel& f) {
  CriterionVerdict v;
  v.criterion = "prop_definite_a2";
  if (f.is_riccati()) {
    v.notes.push_back("a2 is identically zero (excluded: Riccati equation)");
    return v;
  }
  SignChart chart({f.a2});
  const std::vector<std::string> names{"a2"};
  for (int sigma : {1, -1}) {
    Requirement q{"a2 definite", -1, SignCondition::NonZero, 0, branch_cond(sigma, true)};
    BranchResult br = run_branch(chart, {q}, {q}, names);
    if (br.passed()) {
      fill_branch_verdict(v, chart, sigma, br, Bound::AtMostOne);
      return v;
    }
  }
  v.outcome = Outcome::Fails;
  for (int sigma : {1, -1}) {
    Requirement q{"a2 definite", -1, SignCondition::NonZero, 0, branch_cond(sigma, true)};
    if (auto w = find_violation(chart, q, names)) v.witnesses.push_back(*w);
  }
  return v;
}

namespace {

CriterionVerdict check_corollary(const HomogeneousSystem& sys, int which) {
  CriterionVerdict v;
  v.criterion = which == 1 ? "corollary1" : "corollary2";
  v.eta = Rational(-1);
  if (sys.a == 0) {
    v.notes.push_back("a = 0: the branch is undetermined");
    return v;
  }
  if (sys.psi.is_zero()) {
    v.notes.push_back("psi is identically zero: Riccati equation, at most one non-null limit cycle");
    return v;
  }
  const int sigma = sys.a > 0 ? 1 : -1;
  TrigPoly omega1 = sys.a * sys.psi - sys.phi;
  SignChart chart({TrigRational(sys.psi), TrigRational(omega1), TrigRational(sys.phi)});
  const std::vector<std::string> names{"psi", "a*psi-phi", "phi"};
  // Corollary 1: psi < 0 => a psi - phi <= 0; Corollary 2 flips it.
  std::vector<Requirement> reqs{
      {"(i)", 0, SignCondition::Negative, 1, branch_cond(sigma, which == 2)},
      {"(ii)", 0, SignCondition::Positive, 2, branch_cond(sigma, true)},
  };
  BranchResult br = run_branch(chart, reqs, reqs, names);
  fill_branch_verdict(v, chart, sigma, br, which == 1 ? Bound::NoNontrivialCycle : Bound::AtMostOne);
  if (v.holds())
    v.notes.push_back(which == 1 ? "no limit cycles surrounding the origin"
                                 : "at most one limit cycle surrounding the origin");
  return v;
}

}  // namespace

CriterionVerdict check_corollary1(const HomogeneousSystem& sys) { return check_corollary(sys, 1); }
CriterionVerdict check_corollary2(const HomogeneousSystem& sys) { return check_corollary(sys, 2); }

std::vector<Rational> eta_candidate_sweep(const FactoredAbel& f) {
  std::vector<Rational> out{Rational(-1), Rational(0), Rational(1)};
  if (f.b2.is_polynomial()) return out;
  const TrigRational lg = log_derivative(f.a1);
  const poly::RationalPoly& d1 = f.b2.denominator();
  const poly::RationalPoly& d2 = lg.denominator();
  poly::RationalPoly g = poly::gcd(d1, d2);
  if (g.degree() < 1) return out;
  // Numerators over the common denominator lcm(d1, d2); an eta that cancels
  // a shared factor makes N1 + eta N2 vanish modulo that factor.
  poly::RationalPoly lcm = poly::divide(d1 * d2, g).quotient;
  TrigPoly n1 = f.b2.numerator() * TrigPoly::of_cos(poly::divide(lcm, d1).quotient);
  TrigPoly n2 = lg.numerator() * TrigPoly::of_cos(poly::divide(lcm, d2).quotient);
  const int generic_degree = trig::cancel_pole_combination(f.b2, f.a1, Rational(7919, 3)).denominator().degree();
  auto consider = [&](const poly::RationalPoly& r1, const poly::RationalPoly& r2) {
    for (int k = 0; k <= r2.degree(); ++k) {
      if (r2.coeff(k) == 0) continue;
      Rational eta = -r1.coeff(k) / r2.coeff(k);
      if (std::find(out.begin(), out.end(), eta) != out.end()) continue;
      if (trig::cancel_pole_combination(f.b2, f.a1, eta).denominator().degree() < generic_degree) out.push_back(eta);
    }
  };
  consider(poly::divide(n1.even_part(), g).remainder, poly::divide(n2.even_part(), g).remainder);
  consider(poly::divide(n1.odd_part(), g).remainder, poly::divide(n2.odd_part(), g).remainder);
  return out;
}

namespace {

/// Pair of chart polynomials sharing one chart, with the constraint families
/// and extra points they induce for sign(L + eta M) >= 0 on the period.
struct ChartedPair {
  std::vector<poly::LinearFamily> families;
  std::vector<poly::LinearPoint> points;
};

ChartedPair chart_pair(const TrigPoly& p0, const TrigPoly& p1) {
  ChartedPair out;
  // -1: zero function (no degree constraint); -2: not homogeneous.
  const int d0 = p0.is_zero() ? -1 : p0.homogeneous_degree().value_or(-2);
  const int d1 = p1.is_zero() ? -1 : p1.homogeneous_degree().value_or(-2);
  bool tangent = d0 != -2 && d1 != -2;
  if (tangent && d0 >= 0 && d1 >= 0 && (d0 - d1) % 2 != 0) tangent = false;
  if (tangent) {
    const int d = std::max({d0, d1, 0});
    poly::RationalPoly t0 = trig::tan_substitute(p0, d), t1 = trig::tan_substitute(p1, d);
    Rational l = t0.coeff(static_cast<std::size_t>(d)), m = t1.coeff(static_cast<std::size_t>(d));
    out.families.push_back({t0, t1});
    out.points.push_back({l, m});
    if (d % 2 != 0) {
      out.families.push_back({-t0, -t1});
      out.points.push_back({-l, -m});
    }
    return out;
  }
  const int m0 = p0.max_degree(), m1 = p1.max_degree();
  const poly::RationalPoly one_plus_u2{Rational(1), Rational(0), Rational(1)};
  poly::RationalPoly h0 = trig::half_angle_substitute(p0), h1 = trig::half_angle_substitute(p1);
  if (m0 < m1) h0 *= one_plus_u2.pow(static_cast<unsigned>(m1 - std::max(m0, 0)));
  if (m1 < m0) h1 *= one_plus_u2.pow(static_cast<unsigned>(m0 - std::max(m1, 0)));
  out.families.push_back({h0, h1});
  out.points.push_back({p0.evaluate_at(-1, 0), p1.evaluate_at(-1, 0)});
  return out;
}

SignOnSet sign_on_period(const TrigRational& f) { return SignChart({f}).sign_of(0); }

}  // namespace

poly::ParameterFeasibility feasible_eta_on_period(const TrigRational& l, const TrigRational& m, bool eta_nonnegative) {
  // sign(L + eta M) = sign((NL DM + eta NM DL) DL DM) away from poles.
  TrigPoly dl = l.denominator_trig(), dm = m.denominator_trig();
  TrigPoly p0 = l.numerator() * dm * dl * dm;
  TrigPoly p1 = m.numerator() * dl * dl * dm;
  ChartedPair cp = chart_pair(p0, p1);
  if (eta_nonnegative) cp.points.push_back({Rational(0), Rational(1)});
  return poly::find_linear_parameter(cp.families, cp.points);
}

CriterionVerdict check_hl5_prop10(const HLNormalizedAbel& h, const std::vector<Rational>& eta_grid) {
  CriterionVerdict v;
  v.criterion = "hl5_prop10";
  if (has_poles(h.a2) || has_poles(h.b2)) {
    v.notes.push_back("normalized a2 or b2 has poles; the criterion assumes pole-free coefficients");
    return v;
  }
  std::vector<std::string> passed;

  // (i) a1 without zeros and some eta with a1 b2 + eta a2 b1 + a1'/b1 of definite sign.
  SignOnSet a1_sign = sign_on_period(h.a1);
  TrigRational l = h.a1 * h.b2 + h.a1.derivative() / h.b1;
  TrigRational m = h.a2 * h.b1;
  if (a1_sign != SignOnSet::StrictlyPositive && a1_sign != SignOnSet::StrictlyNegative) {
    SignChart chart({h.a1});
    for (const auto& r : chart.regions())
      if (r.signs[0] == 0) {
        v.witnesses.push_back({"(i) a1 != 0", locate(chart, r), "a1 vanishes"});
        break;
      }
  } else {
    std::optional<Rational> eta;
    for (const Rational& e : eta_grid)
      if (poly::is_definite(sign_on_period(l + m * e))) {
        eta = e;
        break;
      }
    std::string detail;
    if (!eta) {
      for (int sigma : {1, -1}) {
        auto res = feasible_eta_on_period(l * Rational(sigma), m * Rational(sigma));
        if (res.status == poly::ParameterFeasibility::Status::Feasible) {
          eta = res.eta;
          break;
        }
        detail += (detail.empty() ? "" : "; ") + std::string(sigma > 0 ? ">= 0: " : "<= 0: ") +
                  (res.status == poly::ParameterFeasibility::Status::Infeasible ? "infeasible, " : "undecided, ") +
                  res.certificate;
      }
    }
    if (eta) {
      v.eta = eta;
      passed.push_back("(i)");
    } else {
      v.witnesses.push_back({"(i) eta feasibility", {"", 0, std::nullopt, "no eta", 0.0}, detail});
    }
  }

  // (ii) a2 of definite sign.
  {
    SignChart chart({h.a2});
    if (poly::is_definite(chart.sign_of(0))) {
      passed.push_back("(ii)");
    } else {
      Requirement q{"(ii) a2 >= 0", -1, SignCondition::NonZero, 0, SignCondition::NonNegative};
      if (auto w = find_violation(chart, q, {"a2"})) v.witnesses.push_back(*w);
      q = {"(ii) a2 <= 0", -1, SignCondition::NonZero, 0, SignCondition::NonPositive};
      if (auto w = find_violation(chart, q, {"a2"})) v.witnesses.push_back(*w);
    }
  }

  // (iii) a1 a2 >= 0 and b1 b2 <= 0, or the reverse.
  {
    SignChart chart({h.a1 * h.a2, h.b1 * h.b2});
    const std::vector<std::string> names{"a1*a2", "b1*b2"};
    bool any = false;
    for (int sigma : {1, -1}) {
      std::vector<Requirement> reqs{{"(iii) a1*a2", -1, SignCondition::NonZero, 0, branch_cond(sigma, true)},
                                    {"(iii) b1*b2", -1, SignCondition::NonZero, 1, branch_cond(sigma, false)}};
      std::vector<WitnessEntry> ws;
      for (const auto& q : reqs)
        if (auto w = find_violation(chart, q, names)) ws.push_back(*w);
      if (ws.empty()) {
        any = true;
        break;
      }
      v.witnesses.push_back(ws.front());
    }
    if (any) passed.push_back("(iii)");
  }

  if (!passed.empty()) {
    v.outcome = Outcome::Holds;
    v.bound = Bound::AtMostOne;
    v.witnesses.clear();
    std::string list;
    for (const auto& p : passed) list += (list.empty() ? "" : ", ") + p;
    v.notes.push_back("conditions satisfied: " + list);
  } else {
    v.outcome = Outcome::Fails;
  }
  return v;
}

bool root_with_negative_partner(const poly::RationalPoly& p1, const poly::RationalPoly& p2, const Rational& lo,
                                const Rational& hi) {
  if (p1.is_zero() || p2.is_zero() || !(lo < hi)) return false;
  bool root = p1.sign_at(lo) == 0 || p1.sign_at(hi) == 0 || poly::count_distinct_roots(p1, lo, hi) >= 1;
  bool negative = p2.sign_at(lo) < 0 && p2.sign_at(hi) < 0 && poly::count_distinct_roots(p2, lo, hi) == 0;
  return root && negative;
}

bool NegativeChecksReport::all_confirmed() const {
  for (const auto& c : checks)
    if (!c.confirmed) return false;
  return !checks.empty();
}

namespace {

NegativeCheck not_definite(const std::string& id, const std::vector<std::pair<std::string, TrigPoly>>& fs) {
  NegativeCheck c{id, true, {}, {}};
  for (const auto& [name, f] : fs) {
    SignChart chart({TrigRational(f)});
    SignOnSet s = chart.sign_of(0);
    c.detail += (c.detail.empty() ? "" : "; ") + name + ": " + poly::to_string(s);
    if (poly::is_definite(s)) {
      c.confirmed = false;
      if (s == SignOnSet::IdenticallyZero) c.detail += " (degenerate)";
      continue;
    }
    for (const auto& r : chart.regions())
      if (r.positive_measure() && r.all_defined() && r.signs[0] != 0) {
        c.witnesses.push_back({name, locate(chart, r), r.signs[0] > 0 ? "positive" : "negative"});
        break;
      }
    for (auto it = chart.regions().rbegin(); it != chart.regions().rend(); ++it)
      if (it->positive_measure() && it->signs[0] != 0 && it->signs[0] != chart.regions().front().signs[0]) {
        c.witnesses.push_back({name, locate(chart, *it), it->signs[0] > 0 ? "positive" : "negative"});
        break;
      }
  }
  return c;
}

std::string feasibility_text(const poly::ParameterFeasibility& r) {
  switch (r.status) {
    case poly::ParameterFeasibility::Status::Feasible: return "feasible with parameter " + poly::to_string(*r.eta);
    case poly::ParameterFeasibility::Status::Infeasible: return "infeasible: " + r.certificate;
    case poly::ParameterFeasibility::Status::Undecided: return "undecided: " + r.certificate;
  }
  return "?";
}

}  // namespace

NegativeChecksReport hl5_negative_checks(const HomogeneousSystem& sys) {
  NegativeChecksReport rep;
  const Rational n1(sys.n - 1);
  const TrigPoly omega1 = sys.a * sys.psi - sys.phi;
  const TrigPoly omega2 = n1 * (Rational(2) * sys.a * sys.psi - sys.phi) + sys.psi.derivative();

  auto d1 = omega1.homogeneous_degree(), d2 = omega2.homogeneous_degree();
  if (d1 && d2 && !omega1.is_zero() && !omega2.is_zero() && (*d1 - *d2) % 2 == 0) {
    const int d = std::max(*d1, *d2);
    rep.p1 = trig::tan_substitute(omega1, d);
    rep.p2 = trig::tan_substitute(omega2, d);
  }

  // (1) no mu1 omega1 + mu2 omega2 of definite sign, (mu1, mu2) != 0.
  {
    NegativeCheck c{"(1) no definite combination of omega1, omega2", true, {}, {}};
    SignOnSet s1 = sign_on_period(TrigRational(omega1));
    if (poly::is_definite(s1)) {
      c.confirmed = false;
      c.detail = "omega1 alone has definite sign (" + poly::to_string(s1) + ")";
    } else {
      // mu2 != 0, scale to mu2 = +-1: +-omega2 + mu omega1 >= 0 (the <= 0 case is the same family negated).
      for (int sigma : {1, -1}) {
        auto res = feasible_eta_on_period(TrigRational(omega2 * Rational(sigma)), TrigRational(omega1));
        c.detail += std::string(c.detail.empty() ? "" : "; ") + (sigma > 0 ? "omega2" : "-omega2") +
                    " + mu*omega1 >= 0: " + feasibility_text(res);
        if (res.status != poly::ParameterFeasibility::Status::Infeasible) c.confirmed = false;
      }
    }
    if (rep.p1 && rep.p2) {
      for (Rational w : {Rational(1, 2), Rational(1), Rational(2), Rational(1, 4)}) {
        if (root_with_negative_partner(*rep.p1, *rep.p2, -w, w)) {
          rep.root_window = std::make_pair(Rational(-w), w);
          c.detail += "; P1 has a root in [" + poly::to_string(Rational(-w)) + ", " + poly::to_string(w) +
                      "] where P2 < 0 throughout";
          break;
        }
      }
    }
    rep.checks.push_back(std::move(c));
  }

  // (2) no nu1, nu2 >= 0, (a nu1)^2 + nu2^2 != 0 with omega1 (nu1 a psi - nu2 phi) <= 0.
  {
    NegativeCheck c{"(2) no admissible cone combination", true, {}, {}};
    TrigPoly with_psi = sys.a * omega1 * sys.psi;
    TrigPoly with_phi = omega1 * sys.phi;
    if (sys.a != 0) {
      SignOnSet s = sign_on_period(TrigRational(with_psi));
      c.detail = "nu2 = 0: a*omega1*psi is " + poly::to_string(s);
      if (poly::is_nonpositive(s)) c.confirmed = false;
    }
    // nu2 = 1, nu1 = nu >= 0: omega1 phi - nu a omega1 psi >= 0.
    auto res = feasible_eta_on_period(TrigRational(with_phi), TrigRational(-with_psi), true);
    c.detail += std::string(c.detail.empty() ? "" : "; ") + "nu2 = 1: " + feasibility_text(res);
    if (res.status != poly::ParameterFeasibility::Status::Infeasible) c.confirmed = false;
    rep.checks.push_back(std::move(c));
  }

  rep.checks.push_back(not_definite("(3) omega1, omega2 not definite", {{"omega1", omega1}, {"omega2", omega2}}));
  rep.checks.push_back(not_definite("(4) -(n-1)omega1+omega2, -2(n-1)omega1+omega2 not definite",
                                    {{"-(n-1)omega1+omega2", omega2 - n1 * omega1},
                                     {"-2(n-1)omega1+omega2", omega2 - Rational(2) * n1 * omega1}}));
  rep.checks.push_back(not_definite("(5) a*omega1*psi, omega1*phi not definite",
                                    {{"a*omega1*psi", sys.a * omega1 * sys.psi}, {"omega1*phi", omega1 * sys.phi}}));
  return rep;
}

}  // namespace abel_cycles::criteria
