// Compiled with -mavx2 -mfma; only reached through select_kernel() after a
// CPU feature check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "abel_cycles/oracle/kernels.hpp"
#include "dopri.hpp"

namespace abel_cycles::oracle {

namespace {

struct Lanes {
  __m256d dx;
  __m256d dz;
};

inline __m256d splat(double v) { return _mm256_set1_pd(v); }

inline Lanes rhs(const Coefficients& c, __m256d x) {
  const __m256d c1 = splat(c.c1), c2 = splat(c.c2), c3 = splat(c.c3);
  const __m256d q = _mm256_fmadd_pd(x, _mm256_fmadd_pd(c3, x, c2), c1);
  const __m256d dz = _mm256_fmadd_pd(x, _mm256_fmadd_pd(_mm256_mul_pd(splat(3.0), c3), x, _mm256_mul_pd(splat(2.0), c2)), c1);
  return {_mm256_mul_pd(x, q), dz};
}

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(splat(-0.0), v); }

// acc + h * sum(w_i * k_i)
template <std::size_t N>
inline __m256d combine(__m256d acc, double h, const double (&w)[N], const __m256d* (&k)[N]) {
  __m256d s = _mm256_setzero_pd();
  for (std::size_t i = 0; i < N; ++i) s = _mm256_fmadd_pd(splat(w[i]), *k[i], s);
  return _mm256_fmadd_pd(splat(h), s, acc);
}

double hmax(__m256d v) {
  alignas(32) double a[4];
  _mm256_store_pd(a, v);
  return std::max(std::max(a[0], a[1]), std::max(a[2], a[3]));
}

void integrate_group(const Field& field, const double* x0, std::size_t n, double t0, double t1,
                     const IntegratorConfig& cfg, LaneResult* out) {
  using namespace dopri;
  alignas(32) double xin[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) xin[i] = x0[i];
  for (std::size_t i = 0; i < n; ++i) out[i] = {x0[i], 0.0, Escape::None};
  if (t1 <= t0) return;

  // Lanes that have escaped keep their last state and stop influencing the
  // step size; padding lanes start inactive.
  Escape escape[4] = {Escape::None, Escape::None, Escape::None, Escape::None};
  bool active[4] = {n > 0, n > 1, n > 2, n > 3};
  auto active_mask = [&] {
    return _mm256_castsi256_pd(_mm256_set_epi64x(active[3] ? -1 : 0, active[2] ? -1 : 0, active[1] ? -1 : 0,
                                                 active[0] ? -1 : 0));
  };
  auto any_active = [&] { return active[0] || active[1] || active[2] || active[3]; };

  const double span = t1 - t0;
  const double h_max = cfg.max_step_fraction * field.period();
  const double h_min = 1e-14 * std::max(1.0, std::abs(t1));
  double t = t0, h = std::min(h_max, span / 64.0);
  __m256d x = _mm256_load_pd(xin), z = _mm256_setzero_pd();

  auto finish = [&](Escape reason) {
    alignas(32) double xs[4], zs[4];
    _mm256_store_pd(xs, x);
    _mm256_store_pd(zs, z);
    for (std::size_t i = 0; i < n; ++i)
      out[i] = {xs[i], zs[i], active[i] ? reason : escape[i]};
  };

  Coefficients c = field.at(t);
  if (c.min_denominator < cfg.pole_guard) return finish(Escape::Pole);
  Lanes k1 = rhs(c, x);
  const __m256d atol = splat(cfg.atol), rtol = splat(cfg.rtol), xmax = splat(cfg.x_max);

  for (long step = 0; step < cfg.max_steps; ++step) {
    if (t >= t1 || !any_active()) return finish(Escape::None);
    if (t + h > t1) h = t1 - t;

    Coefficients cs[5] = {field.at(t + c2 * h), field.at(t + c3 * h), field.at(t + c4 * h), field.at(t + c5 * h),
                          field.at(t + h)};
    for (const auto& q : cs)
      if (q.min_denominator < cfg.pole_guard) return finish(Escape::Pole);

    const __m256d* s1[1] = {&k1.dx};
    Lanes k2 = rhs(cs[0], combine(x, h, {a21}, s1));
    const __m256d* s2[2] = {&k1.dx, &k2.dx};
    Lanes k3 = rhs(cs[1], combine(x, h, {a31, a32}, s2));
    const __m256d* s3[3] = {&k1.dx, &k2.dx, &k3.dx};
    Lanes k4 = rhs(cs[2], combine(x, h, {a41, a42, a43}, s3));
    const __m256d* s4[4] = {&k1.dx, &k2.dx, &k3.dx, &k4.dx};
    Lanes k5 = rhs(cs[3], combine(x, h, {a51, a52, a53, a54}, s4));
    const __m256d* s5[5] = {&k1.dx, &k2.dx, &k3.dx, &k4.dx, &k5.dx};
    Lanes k6 = rhs(cs[4], combine(x, h, {a61, a62, a63, a64, a65}, s5));

    const __m256d* bx[5] = {&k1.dx, &k3.dx, &k4.dx, &k5.dx, &k6.dx};
    const __m256d* bz[5] = {&k1.dz, &k3.dz, &k4.dz, &k5.dz, &k6.dz};
    const __m256d xn = combine(x, h, {b1, b3, b4, b5, b6}, bx);
    const __m256d zn = combine(z, h, {b1, b3, b4, b5, b6}, bz);
    Lanes k7 = rhs(cs[4], xn);

    const __m256d* ex_k[6] = {&k1.dx, &k3.dx, &k4.dx, &k5.dx, &k6.dx, &k7.dx};
    const __m256d* ez_k[6] = {&k1.dz, &k3.dz, &k4.dz, &k5.dz, &k6.dz, &k7.dz};
    const __m256d ex = combine(_mm256_setzero_pd(), h, {e1, e3, e4, e5, e6, e7}, ex_k);
    const __m256d ez = combine(_mm256_setzero_pd(), h, {e1, e3, e4, e5, e6, e7}, ez_k);
    const __m256d sx = _mm256_fmadd_pd(rtol, _mm256_max_pd(abs_pd(x), abs_pd(xn)), atol);
    const __m256d sz = _mm256_fmadd_pd(rtol, _mm256_max_pd(abs_pd(z), abs_pd(zn)), atol);
    __m256d err_v = _mm256_max_pd(_mm256_div_pd(abs_pd(ex), sx), _mm256_div_pd(abs_pd(ez), sz));
    // NaN in an active lane counts as a rejected step.
    const __m256d nan_lane = _mm256_cmp_pd(err_v, err_v, _CMP_UNORD_Q);
    err_v = _mm256_blendv_pd(err_v, splat(1e10), nan_lane);
    const __m256d mask = active_mask();
    double err = hmax(_mm256_and_pd(err_v, mask));

    if (err <= 1.0) {
      t += h;
      x = _mm256_blendv_pd(x, xn, mask);
      z = _mm256_blendv_pd(z, zn, mask);
      k1.dx = _mm256_blendv_pd(k1.dx, k7.dx, mask);
      k1.dz = _mm256_blendv_pd(k1.dz, k7.dz, mask);
      // |x| <= x_max is false for NaN, matching the scalar test.
      const int ok = _mm256_movemask_pd(_mm256_cmp_pd(abs_pd(x), xmax, _CMP_LE_OQ));
      for (int i = 0; i < 4; ++i) {
        if (active[i] && !(ok & (1 << i))) {
          active[i] = false;
          escape[i] = Escape::BlowUp;
        }
      }
      if (!any_active()) return finish(Escape::None);
    }
    const double h_used = h;
    h = std::min(h_max, h * step_factor(err));
    if (h < h_min && t < t1) {
      // Retire only the lanes whose own error would push the step below the
      // floor (typically one racing to infinity); the rest start afresh.
      alignas(32) double e[4];
      _mm256_store_pd(e, err_v);
      bool retired = false;
      for (int i = 0; i < 4; ++i) {
        if (active[i] && h_used * step_factor(e[i]) < h_min) {
          active[i] = false;
          escape[i] = Escape::StepUnderflow;
          retired = true;
        }
      }
      if (!retired) return finish(Escape::StepUnderflow);
      if (!any_active()) return finish(Escape::None);
      h = std::min(h_max, (t1 - t) / 64.0);
    }
  }
  return finish(t >= t1 ? Escape::None : Escape::MaxSteps);
}

}  // namespace

void integrate_batch_avx2(const Field& field, const double* x0, std::size_t n, double t0, double t1,
                          const IntegratorConfig& cfg, LaneResult* out) {
  for (std::size_t i = 0; i < n; i += 4)
    integrate_group(field, x0 + i, std::min<std::size_t>(4, n - i), t0, t1, cfg, out + i);
}

}  // namespace abel_cycles::oracle
