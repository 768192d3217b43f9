#pragma once

// Independent numeric oracles and random generators shared by the tests and
// the acceptance binary. Nothing here calls into the Sturm machinery.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "abel_cycles/poly/rational_poly.hpp"

namespace testsupport {

using abel_cycles::poly::Rational;
using abel_cycles::poly::RationalPoly;

/// mpq_class(n, d) does not reduce; exact comparisons need lowest terms.
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline long double eval_ld(const std::vector<long double>& c, long double x) {
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline std::vector<long double> to_ld(const RationalPoly& p) {
  std::vector<long double> out;
  for (const auto& c : p.coefficients()) out.push_back(static_cast<long double>(c.get_d()));
  return out;
}

/// Approximate real roots by dense sampling plus bisection: `samples` uniform
/// points on [-B, B] with B = 1 + max|c_i / c_n|, sign changes refined to
/// `width`. Exact zeros at sample points are kept. Even-multiplicity roots are
/// invisible to this oracle, so callers feed it squarefree-in-practice input.
inline std::vector<long double> brute_force_roots(const RationalPoly& p, int samples = 100000,
                                                  long double width = 1e-9L) {
  std::vector<long double> roots;
  if (p.degree() < 1) return roots;
  const auto c = to_ld(p);
  long double bound = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, std::fabs(c[i] / c.back()));
  bound += 1;
  long double prev_x = -bound, prev = eval_ld(c, prev_x);
  for (int k = 1; k <= samples; ++k) {
    const long double x = -bound + 2 * bound * k / samples;
    const long double v = eval_ld(c, x);
    if (v == 0) {
      roots.push_back(x);
    } else if (prev != 0 && (prev < 0) != (v < 0)) {
      long double lo = prev_x, hi = x, flo = prev;
      while (hi - lo > width) {
        const long double mid = (lo + hi) / 2, fm = eval_ld(c, mid);
        if (fm == 0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0) == (flo < 0)) lo = mid, flo = fm;
        else hi = mid;
      }
      roots.push_back((lo + hi) / 2);
    }
    prev_x = x;
    prev = v;
  }
  return roots;
}

/// Random integer polynomial of exact degree `degree` with |c| <= height.
inline RationalPoly random_poly(std::mt19937_64& rng, int degree, int height) {
  std::uniform_int_distribution<int> coef(-height, height);
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = coef(rng);
  while (c.back() == 0) c.back() = coef(rng);
  return RationalPoly(std::move(c));
}

}  // namespace testsupport
