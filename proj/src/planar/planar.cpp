#include "abel_cycles/planar/planar.hpp"

#include <set>
#include <sstream>

namespace abel_cycles::planar {

using abel::PolyInX;
using trig::TrigRational;

namespace {

void check_degree_cap(const Bivariate& b, const char* what) {
  if (b.total_degree() > static_cast<int>(kMaxDegree)) {
    throw std::invalid_argument(std::string(what) + " has degree " + std::to_string(b.total_degree()) +
                                ", above the cap of " + std::to_string(kMaxDegree));
  }
}

std::string list_terms(const Bivariate& b) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : b.terms()) {
    os << (first ? "" : ", ") << poly::to_string(c) << "*x^" << k.first << "*y^" << k.second;
    first = false;
  }
  return os.str();
}

}  // namespace

PlanarPolySystem RigidSystem::to_planar() const {
  return {Bivariate::x() * p - Bivariate::y(), Bivariate::y() * p + Bivariate::x()};
}

RigidSystem detect_rigid(const PlanarPolySystem& sys) {
  check_degree_cap(sys.xdot, "x'");
  check_degree_cap(sys.ydot, "y'");
  auto from_x = (sys.xdot + Bivariate::y()).divide_by_x();
  if (!from_x) throw NotRigid("x' + y is not divisible by x: " + list_terms(sys.xdot + Bivariate::y()));
  auto from_y = (sys.ydot - Bivariate::x()).divide_by_y();
  if (!from_y) throw NotRigid("y' - x is not divisible by y: " + list_terms(sys.ydot - Bivariate::x()));
  if (!(*from_x == *from_y)) {
    throw NotRigid("(x' + y)/x and (y' - x)/y differ by " + list_terms(*from_x - *from_y));
  }
  const Bivariate& p = *from_x;
  std::set<unsigned> degrees;
  for (const auto& [k, c] : p.terms())
    if (k.first + k.second > 0) degrees.insert(k.first + k.second);

  RigidSystem r{p, 1};
  if (degrees.empty()) return r;
  std::vector<unsigned> d(degrees.begin(), degrees.end());
  if (d.size() == 1) {
    r.k = d[0];
  } else if (d.size() == 2 && d[1] == 2 * d[0]) {
    r.k = d[0];
  } else {
    Bivariate bad = p - p.layer(0) - p.layer(d[0]) - p.layer(2 * d[0]);
    throw NotRigid("p does not have layers of degree 0, k, 2k; offending terms: " + list_terms(bad));
  }
  return r;
}

abel::AbelEquation rigid_to_abel(const RigidSystem& r) {
  Rational k(r.k);
  TrigRational c1 = TrigRational::constant(k * r.p.coeff(0, 0));
  TrigRational c2(k * r.p.layer(r.k).on_unit_circle());
  TrigRational c3(k * r.p.layer(2 * r.k).on_unit_circle());
  return abel::make_equation(std::move(c1), std::move(c2), std::move(c3));
}

PlanarPolySystem HomogeneousSystem::to_planar() const {
  Bivariate ax = a * Bivariate::x(), ay = a * Bivariate::y();
  return {ax - Bivariate::y() + P, Bivariate::x() + ay + Q};
}

HomogeneousSystem make_homogeneous(Rational a, unsigned n, Bivariate P, Bivariate Q) {
  if (n < 2 || n > kMaxDegree) throw std::invalid_argument("homogeneous degree n must be in [2, 16]");
  if (!P.is_homogeneous(n)) throw std::invalid_argument("P is not homogeneous of degree " + std::to_string(n));
  if (!Q.is_homogeneous(n)) throw std::invalid_argument("Q is not homogeneous of degree " + std::to_string(n));
  HomogeneousSystem sys{std::move(a), n, std::move(P), std::move(Q), {}, {}};
  std::tie(sys.phi, sys.psi) = phi_psi(sys);
  return sys;
}

std::pair<TrigPoly, TrigPoly> phi_psi(const HomogeneousSystem& sys) {
  TrigPoly c = TrigPoly::cos(), s = TrigPoly::sin();
  TrigPoly p = sys.P.on_unit_circle(), q = sys.Q.on_unit_circle();
  return {p * c + q * s, q * c - p * s};
}

CherkasTransform cherkas_transform(const HomogeneousSystem& sys) {
  if (sys.psi.is_zero()) {
    throw RiccatiRoute("psi is identically zero: the polar equation is a Riccati equation "
                       "(at most one non-null limit cycle)");
  }
  Rational m(sys.n - 1);
  TrigRational a2(m * (sys.a * sys.psi - sys.phi));
  TrigRational b2 = TrigRational::constant(m * sys.a) + TrigRational::quotient(sys.psi.derivative(), sys.psi);
  CherkasTransform out{abel::make_factored(sys.psi, std::move(a2), std::move(b2)), Rational(-1), {}};
  out.domain_guard = "1 + psi(theta) r^" + std::to_string(sys.n - 1) +
                     " = 0 in polar coordinates, i.e. psi(theta) rho - 1 = 0; r > 0 maps into V";
  return out;
}

PolyInX cherkas_expansion_residual(const HomogeneousSystem& sys) {
  Rational m(sys.n - 1);
  TrigRational psi(sys.psi), phi(sys.phi), dpsi(sys.psi.derivative());
  TrigRational a = TrigRational::constant(sys.a);
  PolyInX rho{{TrigRational(), TrigRational::constant(1)}};
  PolyInX curve{{TrigRational::constant(-1), psi}};
  PolyInX linear{{-(a * m), (a * psi - phi) * m}};
  PolyInX rho2 = rho * rho;
  PolyInX factored = curve * linear * rho - PolyInX{{dpsi}} * rho2;
  PolyInX expanded{{TrigRational(), a * m, (phi - a * psi * Rational(2)) * m - dpsi, (a * psi - phi) * psi * m}};
  return factored - expanded;
}

}  // namespace abel_cycles::planar
