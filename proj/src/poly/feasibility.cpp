#include "abel_cycles/poly/feasibility.hpp"

#include <sstream>

namespace abel_cycles::poly {

namespace {

struct RatioBound {
  std::optional<Rational> value;
  Witness at = Rational(0);
};

int sign_at_infinity(const RationalPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!positive && p.degree() % 2 != 0) s = -s;
  return s;
}

bool family_holds(const LinearFamily& f, const Rational& eta) {
  RationalPoly combined = f.constant_part + f.eta_part * eta;
  return is_nonnegative(sign_on_real_line(combined));
}

ParameterFeasibility infeasible(std::string why, std::vector<Witness> witnesses) {
  ParameterFeasibility r;
  r.status = ParameterFeasibility::Status::Infeasible;
  r.certificate = std::move(why);
  r.witnesses = std::move(witnesses);
  return r;
}

}  // namespace

ParameterFeasibility find_linear_parameter(std::span<const LinearFamily> families,
                                           std::span<const LinearPoint> points) {
  RatioBound lower;  // eta >= lower (from M > 0)
  RatioBound upper;  // eta <= upper (from M < 0)
  std::vector<Rational> limit_candidates;

  auto offer = [&](const Rational& l, const Rational& m, const Witness& at) {
    if (m > 0) {
      Rational r = -l / m;
      if (!lower.value || r > *lower.value) lower = {r, at};
    } else if (m < 0) {
      Rational r = -l / m;
      if (!upper.value || r < *upper.value) upper = {r, at};
    }
  };

  for (const auto& p : points) {
    if (p.eta_part == 0 && p.constant_part < 0)
      return infeasible("point constraint with zero eta coefficient and negative constant", {});
    offer(p.constant_part, p.eta_part, Witness(Rational(0)));
  }

  for (const auto& f : families) {
    const RationalPoly& L = f.constant_part;
    const RationalPoly& M = f.eta_part;
    std::vector<RationalPoly> pair{L, M};
    auto cells = decompose_real_line(pair);
    for (const auto& c : cells) {
      if (c.signs[1] == 0 && c.signs[0] < 0) {
        Witness w = c.kind == Cell::Kind::Open ? Witness(c.sample)
                                                : (c.root.exact ? Witness(*c.root.exact) : Witness(c.root));
        return infeasible("eta coefficient vanishes where the constant part is negative", {w});
      }
    }
    if (M.is_zero()) continue;
    for (bool pos : {true, false}) {
      if (L.degree() > M.degree() && sign_at_infinity(L, pos) < 0)
        return infeasible(std::string("constant part dominates with negative sign at ") + (pos ? "+inf" : "-inf"), {});
      if (L.degree() == M.degree()) limit_candidates.push_back(-L.leading() / M.leading());
    }
    if (L.degree() < M.degree()) limit_candidates.push_back(0);

    std::vector<Rational> probes;
    for (const auto& c : cells) {
      if (c.kind == Cell::Kind::Open) {
        probes.push_back(c.sample);
        probes.push_back(c.inner_lo);
        probes.push_back(c.inner_hi);
      } else {
        RationalPoly msq = squarefree_part(M);
        if (c.signs[1] == 0 && msq.degree() >= 1) {
          RootInterval iv = c.root;
          if (!iv.exact) iv = refine_root(msq, iv, Rational(Integer(1), Integer(1) << 40));
          probes.push_back(iv.lo);
          probes.push_back(iv.hi);
        }
      }
    }
    Rational far = cauchy_bound(L * M + RationalPoly::constant(1)) + 1;
    for (int k = 0; k < 4; ++k) {
      probes.push_back(far);
      probes.push_back(-far);
      far *= 1000;
    }
    RationalPoly crit = L.derivative() * M - L * M.derivative();
    if (!crit.is_zero() && crit.degree() >= 1) {
      RationalPoly csq = squarefree_part(crit);
      for (auto iv : isolate_real_roots(csq)) {
        if (!iv.exact) iv = refine_root(csq, iv, Rational(Integer(1), Integer(1) << 60));
        probes.push_back(iv.exact ? *iv.exact : iv.midpoint());
      }
    }
    for (const auto& t : probes) offer(L.evaluate(t), M.evaluate(t), Witness(t));
  }

  if (lower.value && upper.value && *lower.value > *upper.value) {
    std::ostringstream os;
    os << "ratio bounds cross: eta >= " << to_string(*lower.value) << " and eta <= " << to_string(*upper.value);
    return infeasible(os.str(), {lower.at, upper.at});
  }

  std::vector<Rational> candidates;
  if (lower.value && upper.value) {
    const Rational& lo = *lower.value;
    const Rational& hi = *upper.value;
    candidates = {(lo + hi) / 2, lo, hi, lo + (hi - lo) / 1000, hi - (hi - lo) / 1000};
  } else if (lower.value) {
    const Rational& lo = *lower.value;
    candidates = {lo, lo + 1, lo + abs(lo) + 1};
  } else if (upper.value) {
    const Rational& hi = *upper.value;
    candidates = {hi, hi - 1, hi - abs(hi) - 1};
  } else {
    candidates = {0, 1, -1};
  }
  candidates.insert(candidates.end(), limit_candidates.begin(), limit_candidates.end());

  for (const auto& eta : candidates) {
    if (lower.value && eta < *lower.value) continue;
    if (upper.value && eta > *upper.value) continue;
    bool ok = true;
    for (const auto& p : points) ok = ok && (p.constant_part + eta * p.eta_part >= 0);
    for (const auto& f : families) ok = ok && family_holds(f, eta);
    if (ok) {
      ParameterFeasibility r;
      r.status = ParameterFeasibility::Status::Feasible;
      r.eta = eta;
      r.certificate = "eta = " + to_string(eta) + " verified exactly";
      return r;
    }
  }
  ParameterFeasibility r;
  r.status = ParameterFeasibility::Status::Undecided;
  r.certificate = "no rational probe satisfied the constraints and no crossing certificate was found";
  return r;
}

}  // namespace abel_cycles::poly
