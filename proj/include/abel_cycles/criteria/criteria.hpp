#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel_cycles/abel/abel.hpp"
#include "abel_cycles/planar/planar.hpp"
#include "abel_cycles/poly/feasibility.hpp"
#include "abel_cycles/trig/sign_chart.hpp"

namespace abel_cycles::criteria {

using abel::FactoredAbel;
using abel::HLNormalizedAbel;
using planar::HomogeneousSystem;
using poly::Rational;
using trig::TrigPoly;
using trig::TrigRational;

enum class Outcome { Holds, Fails, Inapplicable };
enum class Bound { NoNontrivialCycle, AtMostOne, None };
enum class Branch { PositiveBranch, NegativeBranch, None };

std::string to_string(Outcome o);
std::string to_string(Bound b);
std::string to_string(Branch b);

/// A location in one period, in the coordinates of the sign chart used:
/// t = tan(theta) (sheet 1 adds pi) or u = tan(theta/2), or a named point.
struct Location {
  std::string chart;
  int sheet = 0;
  std::optional<poly::Witness> point;
  std::string label;
  double theta = 0.0;

  std::string to_string() const;
};

struct WitnessEntry {
  std::string condition;
  Location where;
  std::string detail;
};

/// Closed chart interval [lo, hi] of positive length on which the strict
/// inequality of `condition` holds; root free by construction.
struct StrictnessEvidence {
  std::string condition;
  std::string chart;
  int sheet = 0;
  Rational lo;
  Rational hi;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
};

struct CriterionVerdict {
  std::string criterion;
  Outcome outcome = Outcome::Inapplicable;
  Bound bound = Bound::None;
  Branch branch = Branch::None;
  std::optional<Rational> eta;
  std::vector<WitnessEntry> witnesses;
  std::vector<StrictnessEvidence> strictness;
  std::vector<std::string> notes;

  bool holds() const { return outcome == Outcome::Holds; }
};

/// No non-trivial limit cycle in V.
CriterionVerdict check_theorem1(const FactoredAbel& f, const Rational& eta);
/// At most one non-trivial limit cycle in V.
CriterionVerdict check_theorem2(const FactoredAbel& f, const Rational& eta);
/// Runs the theorem over eta_candidate_sweep and keeps the first Holds, else
/// the most informative failure.
CriterionVerdict check_theorem1_sweep(const FactoredAbel& f);
CriterionVerdict check_theorem2_sweep(const FactoredAbel& f);

/// a2 of definite sign: at most one limit cycle.
CriterionVerdict check_prop_definite_a2(const FactoredAbel& f);

/// The Huang-Liang-Llibre criterion for the normalized form.
CriterionVerdict check_hl5_prop10(const HLNormalizedAbel& h, const std::vector<Rational>& eta_grid);

CriterionVerdict check_corollary1(const HomogeneousSystem& sys);
CriterionVerdict check_corollary2(const HomogeneousSystem& sys);

struct NegativeCheck {
  std::string id;
  bool confirmed = false;
  std::string detail;
  std::vector<WitnessEntry> witnesses;
};

struct NegativeChecksReport {
  std::vector<NegativeCheck> checks;
  /// omega1, omega2 in the tangent chart when they are homogeneous forms.
  std::optional<poly::RationalPoly> p1;
  std::optional<poly::RationalPoly> p2;
  /// P1 has a root in [lo, hi] while P2 < 0 on [lo, hi].
  std::optional<std::pair<Rational, Rational>> root_window;

  bool all_confirmed() const;
};

/// The five claims that the HL5 criteria do not apply.
NegativeChecksReport hl5_negative_checks(const HomogeneousSystem& sys);

/// p1 has a root in [lo, hi] while p2 < 0 on all of [lo, hi].
bool root_with_negative_partner(const poly::RationalPoly& p1, const poly::RationalPoly& p2, const Rational& lo,
                                const Rational& hi);

/// {-1, 0, 1} plus every eta that lowers the pole order of b2 + eta a1'/a1.
std::vector<Rational> eta_candidate_sweep(const FactoredAbel& f);

/// Exact decision of: exists eta with L + eta M >= 0 on the whole period
/// (L, M trig rationals, poles ignored), plus optional eta >= 0.
poly::ParameterFeasibility feasible_eta_on_period(const TrigRational& l, const TrigRational& m,
                                                  bool eta_nonnegative = false);

}  // namespace abel_cycles::criteria
