#include "abel_cycles/poly/sturm.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace abel_cycles::poly {

const Rational& ExtendedPoint::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() of an infinite point");
  return value_;
}

std::strong_ordering operator<=>(const ExtendedPoint& a, const ExtendedPoint& b) {
  auto rank = [](ExtendedPoint::Kind k) {
    switch (k) {
      case ExtendedPoint::Kind::NegInfinity: return 0;
      case ExtendedPoint::Kind::Finite: return 1;
      case ExtendedPoint::Kind::PosInfinity: return 2;
    }
    return 1;
  };
  if (auto c = rank(a.kind_) <=> rank(b.kind_); c != 0) return c;
  if (a.kind_ != ExtendedPoint::Kind::Finite) return std::strong_ordering::equal;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtendedPoint::to_string() const {
  switch (kind_) {
    case Kind::NegInfinity: return "-inf";
    case Kind::PosInfinity: return "+inf";
    case Kind::Finite: return poly::to_string(value_);
  }
  return "?";
}

std::string to_string(SignOnSet s) {
  switch (s) {
    case SignOnSet::StrictlyPositive: return "StrictlyPositive";
    case SignOnSet::NonNegative: return "NonNegative";
    case SignOnSet::StrictlyNegative: return "StrictlyNegative";
    case SignOnSet::NonPositive: return "NonPositive";
    case SignOnSet::IdenticallyZero: return "IdenticallyZero";
    case SignOnSet::Mixed: return "Mixed";
  }
  return "?";
}

SignOnSet classify_signs(bool saw_positive, bool saw_zero, bool saw_negative) {
  if (saw_positive && saw_negative) return SignOnSet::Mixed;
  if (saw_positive) return saw_zero ? SignOnSet::NonNegative : SignOnSet::StrictlyPositive;
  if (saw_negative) return saw_zero ? SignOnSet::NonPositive : SignOnSet::StrictlyNegative;
  return SignOnSet::IdenticallyZero;
}

bool is_nonnegative(SignOnSet s) {
  return s == SignOnSet::StrictlyPositive || s == SignOnSet::NonNegative || s == SignOnSet::IdenticallyZero;
}

bool is_nonpositive(SignOnSet s) {
  return s == SignOnSet::StrictlyNegative || s == SignOnSet::NonPositive || s == SignOnSet::IdenticallyZero;
}

bool is_definite(SignOnSet s) { return s != SignOnSet::Mixed; }

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("sturm_sequence: zero polynomial");
  std::vector<RationalPoly> chain{p};
  RationalPoly next = p.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    next = -divide(a, b).remainder;
  }
  return chain;
}

namespace {

int sign_at_infinity(const RationalPoly& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.leading());
  if (!positive && (p.degree() % 2 != 0)) s = -s;
  return s;
}

int sign_at(const RationalPoly& p, const ExtendedPoint& at) {
  switch (at.kind()) {
    case ExtendedPoint::Kind::NegInfinity: return sign_at_infinity(p, false);
    case ExtendedPoint::Kind::PosInfinity: return sign_at_infinity(p, true);
    case ExtendedPoint::Kind::Finite: return p.sign_at(at.value());
  }
  return 0;
}

// Bisects an isolating interval of squarefree q (simple root => sign change).
RootInterval bisect_once(const RationalPoly& q, RootInterval iv) {
  Rational mid = iv.midpoint();
  int sm = q.sign_at(mid);
  if (sm == 0) {
    Rational half = (iv.hi - iv.lo) / 4;
    iv.exact = mid;
    // Shrink symmetric neighbourhood; q has no other root in (lo, hi).
    while (q.sign_at(mid - half) == 0 || q.sign_at(mid + half) == 0) half /= 2;
    iv.lo = mid - half;
    iv.hi = mid + half;
    return iv;
  }
  if (sm == q.sign_at(iv.lo)) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
  return iv;
}

void try_exact(const RationalPoly& q, RootInterval& iv) {
  if (iv.exact) return;
  static const Rational kWidth(Integer(1), Integer(1) << 34);
  iv = refine_root(q, iv, kWidth);
  if (iv.exact) return;
  Rational cand = simplest_rational_in(iv.lo, iv.hi);
  if (q.sign_at(cand) == 0) iv.exact = cand;
}

}  // namespace

int sign_variations(std::span<const RationalPoly> chain, const ExtendedPoint& at) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_distinct_roots(const RationalPoly& p, const ExtendedPoint& lo, const ExtendedPoint& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_distinct_roots: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("count_distinct_roots: requires lo < hi");
  if (lo.is_finite() && p.sign_at(lo.value()) == 0) throw EndpointRootError(lo.to_string());
  if (hi.is_finite() && p.sign_at(hi.value()) == 0) throw EndpointRootError(hi.to_string());
  RationalPoly q = squarefree_part(p);
  auto chain = sturm_sequence(q);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

RootInterval refine_root(const RationalPoly& squarefree, RootInterval iv, const Rational& width) {
  while (!iv.exact && iv.hi - iv.lo > width) iv = bisect_once(squarefree, iv);
  return iv;
}

std::vector<RootInterval> isolate_real_roots(const RationalPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  RationalPoly q = squarefree_part(p);
  std::vector<RootInterval> out;
  if (q.degree() < 1) return out;
  auto chain = sturm_sequence(q);
  Rational bound = cauchy_bound(q);

  std::function<void(const Rational&, const Rational&, int, int)> split =
      [&](const Rational& lo, const Rational& hi, int v_lo, int v_hi) {
        int count = v_lo - v_hi;
        if (count <= 0) return;
        if (count == 1) {
          out.push_back(RootInterval{lo, hi, std::nullopt});
          return;
        }
        Rational mid = (lo + hi) / 2;
        if (q.sign_at(mid) == 0) {
          Rational half = (hi - lo) / 4;
          auto ok = [&](const Rational& h) {
            return q.sign_at(mid - h) != 0 && q.sign_at(mid + h) != 0 &&
                   sign_variations(chain, ExtendedPoint(Rational(mid - h))) -
                           sign_variations(chain, ExtendedPoint(Rational(mid + h))) ==
                       1;
          };
          while (!ok(half)) half /= 2;
          Rational left = mid - half;
          Rational right = mid + half;
          split(lo, left, v_lo, sign_variations(chain, ExtendedPoint(left)));
          out.push_back(RootInterval{left, right, mid});
          split(right, hi, sign_variations(chain, ExtendedPoint(right)), v_hi);
          return;
        }
        int v_mid = sign_variations(chain, ExtendedPoint(mid));
        split(lo, mid, v_lo, v_mid);
        split(mid, hi, v_mid, v_hi);
      };
  Rational lo = -bound;
  Rational hi = bound;
  split(lo, hi, sign_variations(chain, ExtendedPoint(lo)), sign_variations(chain, ExtendedPoint(hi)));
  for (auto& iv : out) try_exact(q, iv);
  return out;
}

SignOnSet sign_on_real_line(const RationalPoly& p) {
  if (p.is_zero()) return SignOnSet::IdenticallyZero;
  std::vector<RationalPoly> one{p};
  bool pos = false, zero = false, neg = false;
  for (const auto& cell : decompose_real_line(one)) {
    int s = cell.signs[0];
    pos |= s > 0;
    zero |= s == 0;
    neg |= s < 0;
  }
  return classify_signs(pos, zero, neg);
}

std::vector<Cell> decompose_real_line(std::span<const RationalPoly> polys) {
  struct Entry {
    RootInterval iv;
    std::vector<std::size_t> owners;
    std::size_t primary;
  };
  std::vector<RationalPoly> sqf(polys.size());
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) continue;
    sqf[i] = squarefree_part(polys[i]);
    for (auto& iv : isolate_real_roots(sqf[i])) entries.push_back(Entry{iv, {i}, i});
  }

  auto by_lo = [](const Entry& a, const Entry& b) { return a.iv.lo < b.iv.lo; };
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(entries.begin(), entries.end(), by_lo);
    for (std::size_t k = 0; k + 1 < entries.size(); ++k) {
      Entry& a = entries[k];
      Entry& b = entries[k + 1];
      if (a.iv.hi < b.iv.lo) continue;
      changed = true;
      const bool same_exact = a.iv.exact && b.iv.exact && *a.iv.exact == *b.iv.exact;
      Rational ilo = std::max(a.iv.lo, b.iv.lo);
      Rational ihi = std::min(a.iv.hi, b.iv.hi);
      bool merge = same_exact;
      if (!merge && ilo < ihi && !(a.iv.exact && b.iv.exact)) {
        RationalPoly g = gcd(sqf[a.primary], sqf[b.primary]);
        merge = g.degree() >= 1 && g.sign_at(ilo) * g.sign_at(ihi) < 0;
      }
      if (merge) {
        RootInterval iv = same_exact ? a.iv : RootInterval{ilo, ihi, a.iv.exact ? a.iv.exact : b.iv.exact};
        if (same_exact && b.iv.hi - b.iv.lo < a.iv.hi - a.iv.lo) iv = b.iv;
        a.iv = iv;
        a.owners.insert(a.owners.end(), b.owners.begin(), b.owners.end());
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(k + 1));
      } else {
        // Distinct roots: shrink the wider interval.
        Entry& wide = (a.iv.hi - a.iv.lo >= b.iv.hi - b.iv.lo) ? a : b;
        Entry& other = (&wide == &a) ? b : a;
        if (wide.iv.exact) {
          if (other.iv.exact) {
            // Two distinct exact roots: pick radii below half their distance.
            Rational gap = abs(*wide.iv.exact - *other.iv.exact) / 4;
            for (Entry* e : {&wide, &other}) {
              Rational r = std::min(gap, Rational((e->iv.hi - e->iv.lo) / 2));
              const Rational& x = *e->iv.exact;
              while (sqf[e->primary].sign_at(x - r) == 0 || sqf[e->primary].sign_at(x + r) == 0) r /= 2;
              e->iv.lo = x - r;
              e->iv.hi = x + r;
            }
          } else {
            wide.iv = bisect_once(sqf[wide.primary], wide.iv);
            other.iv = bisect_once(sqf[other.primary], other.iv);
          }
        } else {
          wide.iv = bisect_once(sqf[wide.primary], wide.iv);
        }
      }
      break;
    }
  }

  auto signs_at = [&](const Rational& x) {
    std::vector<int> s(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) s[i] = polys[i].sign_at(x);
    return s;
  };

  std::vector<Cell> cells;
  auto push_open = [&](ExtendedPoint lo, ExtendedPoint hi, Rational inner_lo, Rational inner_hi) {
    Cell c{Cell::Kind::Open, {}, simplest_rational_in(inner_lo, inner_hi), inner_lo, inner_hi, std::move(lo), std::move(hi), {}};
    c.signs = signs_at(c.sample);
    cells.push_back(std::move(c));
  };

  if (entries.empty()) {
    push_open(ExtendedPoint::neg_infinity(), ExtendedPoint::pos_infinity(), Rational(-1), Rational(1));
    return cells;
  }
  push_open(ExtendedPoint::neg_infinity(), ExtendedPoint(entries.front().iv.lo), entries.front().iv.lo - 1,
            entries.front().iv.lo);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Entry& e = entries[k];
    Cell p{Cell::Kind::Point, e.iv, e.iv.exact ? *e.iv.exact : e.iv.midpoint(), e.iv.lo, e.iv.hi,
           ExtendedPoint(e.iv.lo), ExtendedPoint(e.iv.hi), {}};
    p.signs.resize(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (polys[i].is_zero() || std::find(e.owners.begin(), e.owners.end(), i) != e.owners.end()) {
        p.signs[i] = 0;
      } else {
        p.signs[i] = polys[i].sign_at(e.iv.exact ? *e.iv.exact : e.iv.midpoint());
      }
    }
    cells.push_back(std::move(p));
    if (k + 1 < entries.size()) {
      push_open(ExtendedPoint(e.iv.hi), ExtendedPoint(entries[k + 1].iv.lo), e.iv.hi, entries[k + 1].iv.lo);
    }
  }
  push_open(ExtendedPoint(entries.back().iv.hi), ExtendedPoint::pos_infinity(), entries.back().iv.hi,
            entries.back().iv.hi + 1);
  return cells;
}

bool satisfies(int sign, SignCondition cond) {
  switch (cond) {
    case SignCondition::Negative: return sign < 0;
    case SignCondition::NonPositive: return sign <= 0;
    case SignCondition::Zero: return sign == 0;
    case SignCondition::NonNegative: return sign >= 0;
    case SignCondition::Positive: return sign > 0;
    case SignCondition::NonZero: return sign != 0;
  }
  return false;
}

std::string to_string(SignCondition c) {
  switch (c) {
    case SignCondition::Negative: return "<0";
    case SignCondition::NonPositive: return "<=0";
    case SignCondition::Zero: return "=0";
    case SignCondition::NonNegative: return ">=0";
    case SignCondition::Positive: return ">0";
    case SignCondition::NonZero: return "!=0";
  }
  return "?";
}

std::string to_string(const Witness& w) {
  if (const auto* q = std::get_if<Rational>(&w)) return poly::to_string(*q);
  const auto& iv = std::get<RootInterval>(w);
  if (iv.exact) return poly::to_string(*iv.exact);
  std::ostringstream os;
  os << "(" << poly::to_string(iv.lo) << ", " << poly::to_string(iv.hi) << ")";
  return os.str();
}

double approx(const Witness& w) {
  if (const auto* q = std::get_if<Rational>(&w)) return q->get_d();
  return std::get<RootInterval>(w).approx();
}

ImplicationResult sign_implication(const RationalPoly& a, SignCondition cond_a, const RationalPoly& b,
                                   SignCondition cond_b) {
  std::vector<RationalPoly> polys{a, b};
  for (const auto& cell : decompose_real_line(polys)) {
    if (satisfies(cell.signs[0], cond_a) && !satisfies(cell.signs[1], cond_b)) {
      ImplicationResult r{false, std::nullopt};
      if (cell.kind == Cell::Kind::Open) {
        r.counterexample = Witness(cell.sample);
      } else if (cell.root.exact) {
        r.counterexample = Witness(*cell.root.exact);
      } else {
        r.counterexample = Witness(cell.root);
      }
      return r;
    }
  }
  return {};
}

}  // namespace abel_cycles::poly
