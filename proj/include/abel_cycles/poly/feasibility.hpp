#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abel_cycles/poly/sturm.hpp"

namespace abel_cycles::poly {

/// Constraint L(t) + eta * M(t) >= 0 for every real t.
struct LinearFamily {
  RationalPoly constant_part;
  RationalPoly eta_part;
};

/// Single constraint l + eta * m >= 0.
struct LinearPoint {
  Rational constant_part;
  Rational eta_part;
};

/// Outcome of deciding whether some real eta satisfies every constraint.
///
/// Feasible carries an eta that was re-verified exactly. Infeasible carries an
/// exact certificate: either a point where the eta coefficient vanishes and
/// the constant part is negative, a family whose constant part dominates at
/// infinity with the wrong sign, or two points t1, t2 whose ratio bounds
/// -L/M cross (M(t1) > 0, M(t2) < 0, -L(t1)/M(t1) > -L(t2)/M(t2)).
/// Undecided is returned only when the feasible set, if any, is too thin for
/// a rational probe (for example a single irrational eta).
struct ParameterFeasibility {
  enum class Status { Feasible, Infeasible, Undecided };
  Status status = Status::Undecided;
  std::optional<Rational> eta;
  std::string certificate;
  std::vector<Witness> witnesses;
};

ParameterFeasibility find_linear_parameter(std::span<const LinearFamily> families,
                                           std::span<const LinearPoint> points);

}  // namespace abel_cycles::poly
