#pragma once

#include <stdexcept>
#include <string>

#include "abel_cycles/abel/abel.hpp"
#include "abel_cycles/planar/bivariate.hpp"

namespace abel_cycles::planar {

/// x' = xdot(x, y), y' = ydot(x, y).
struct PlanarPolySystem {
  Bivariate xdot;
  Bivariate ydot;
};

/// x' = -y + x p(x, y), y' = x + y p(x, y) with
/// p = p00 + (degree k layer) + (degree 2k layer).
struct RigidSystem {
  Bivariate p;
  unsigned k = 1;

  PlanarPolySystem to_planar() const;
};

class NotRigid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws NotRigid naming the offending monomials.
RigidSystem detect_rigid(const PlanarPolySystem& sys);
/// rho = r^k: rho' = k p00 rho + k p_k(cos, sin) rho^2 + k p_2k(cos, sin) rho^3.
abel::AbelEquation rigid_to_abel(const RigidSystem& r);

/// x' = a x - y + P(x, y), y' = x + a y + Q(x, y), P and Q homogeneous of
/// degree n.
struct HomogeneousSystem {
  Rational a;
  unsigned n = 2;
  Bivariate P;
  Bivariate Q;
  /// P(c, s) c + Q(c, s) s and Q(c, s) c - P(c, s) s.
  TrigPoly phi;
  TrigPoly psi;

  PlanarPolySystem to_planar() const;
};

/// Validates homogeneity and degree caps, fills phi and psi.
HomogeneousSystem make_homogeneous(Rational a, unsigned n, Bivariate P, Bivariate Q);
std::pair<TrigPoly, TrigPoly> phi_psi(const HomogeneousSystem& sys);

class RiccatiRoute : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CherkasTransform {
  abel::FactoredAbel abel;
  /// The value that cancels psi'/psi in b2 + eta a1'/a1.
  Rational default_eta = -1;
  /// Cycles of the planar system avoid 1 + psi r^(n-1) = 0; in rho this is
  /// the curve psi rho - 1 = 0, the second invariant curve.
  std::string domain_guard;
};

/// rho = r^(n-1) / (1 + psi r^(n-1)). Throws RiccatiRoute when psi = 0.
CherkasTransform cherkas_transform(const HomogeneousSystem& sys);

/// (psi rho - 1)((n-1)(a psi - phi) rho - (n-1) a) rho - psi' rho^2 minus the
/// expanded Abel field; both displayed forms must agree, so this is zero.
abel::PolyInX cherkas_expansion_residual(const HomogeneousSystem& sys);

inline constexpr unsigned kMaxDegree = 16;

}  // namespace abel_cycles::planar
