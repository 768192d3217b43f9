#include <algorithm>
#include <cmath>

#include "abel_cycles/oracle/kernels.hpp"
#include "dopri.hpp"

namespace abel_cycles::oracle {

std::string to_string(Escape e) {
  switch (e) {
    case Escape::None: return "none";
    case Escape::BlowUp: return "blow-up";
    case Escape::Pole: return "pole";
    case Escape::StepUnderflow: return "step-underflow";
    case Escape::MaxSteps: return "max-steps";
  }
  return "?";
}

namespace {

struct Deriv {
  double dx;
  double dz;
};

inline Deriv rhs(const Coefficients& c, double x) {
  const double q = c.c1 + x * (c.c2 + c.c3 * x);
  return {x * q, c.c1 + x * (2.0 * c.c2 + 3.0 * c.c3 * x)};
}

LaneResult integrate_one(const Field& field, double x, double t0, double t1, const IntegratorConfig& cfg) {
  using namespace dopri;
  LaneResult r{x, 0.0, Escape::None};
  if (t1 <= t0) return r;
  const double span = t1 - t0;
  const double h_max = cfg.max_step_fraction * field.period();
  const double h_min = 1e-14 * std::max(1.0, std::abs(t1));
  double t = t0, z = 0.0;
  double h = std::min(h_max, span / 64.0);

  Coefficients c = field.at(t);
  if (c.min_denominator < cfg.pole_guard) return {x, z, Escape::Pole};
  Deriv k1 = rhs(c, x);
  for (long step = 0; step < cfg.max_steps; ++step) {
    if (t >= t1) return {x, z, Escape::None};
    if (t + h > t1) h = t1 - t;

    Coefficients cs[5];
    cs[0] = field.at(t + c2 * h);
    cs[1] = field.at(t + c3 * h);
    cs[2] = field.at(t + c4 * h);
    cs[3] = field.at(t + c5 * h);
    cs[4] = field.at(t + h);
    for (const auto& q : cs)
      if (q.min_denominator < cfg.pole_guard) return {x, z, Escape::Pole};

    Deriv k2 = rhs(cs[0], x + h * a21 * k1.dx);
    Deriv k3 = rhs(cs[1], x + h * (a31 * k1.dx + a32 * k2.dx));
    Deriv k4 = rhs(cs[2], x + h * (a41 * k1.dx + a42 * k2.dx + a43 * k3.dx));
    Deriv k5 = rhs(cs[3], x + h * (a51 * k1.dx + a52 * k2.dx + a53 * k3.dx + a54 * k4.dx));
    Deriv k6 = rhs(cs[4], x + h * (a61 * k1.dx + a62 * k2.dx + a63 * k3.dx + a64 * k4.dx + a65 * k5.dx));
    const double xn = x + h * (b1 * k1.dx + b3 * k3.dx + b4 * k4.dx + b5 * k5.dx + b6 * k6.dx);
    const double zn = z + h * (b1 * k1.dz + b3 * k3.dz + b4 * k4.dz + b5 * k5.dz + b6 * k6.dz);
    Deriv k7 = rhs(cs[4], xn);
    const double ex = h * (e1 * k1.dx + e3 * k3.dx + e4 * k4.dx + e5 * k5.dx + e6 * k6.dx + e7 * k7.dx);
    const double ez = h * (e1 * k1.dz + e3 * k3.dz + e4 * k4.dz + e5 * k5.dz + e6 * k6.dz + e7 * k7.dz);
    const double sx = cfg.atol + cfg.rtol * std::max(std::abs(x), std::abs(xn));
    const double sz = cfg.atol + cfg.rtol * std::max(std::abs(z), std::abs(zn));
    double err = std::max(std::abs(ex) / sx, std::abs(ez) / sz);
    if (!std::isfinite(err)) err = 1e10;

    if (err <= 1.0) {
      t += h;
      x = xn;
      z = zn;
      k1 = k7;
      if (!(std::abs(x) <= cfg.x_max)) return {x, z, Escape::BlowUp};
    }
    h = std::min(h_max, h * step_factor(err));
    if (h < h_min && t < t1) return {x, z, Escape::StepUnderflow};
  }
  return {x, z, t >= t1 ? Escape::None : Escape::MaxSteps};
}

}  // namespace

void integrate_batch_scalar(const Field& field, const double* x0, std::size_t n, double t0, double t1,
                            const IntegratorConfig& cfg, LaneResult* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = integrate_one(field, x0[i], t0, t1, cfg);
}

}  // namespace abel_cycles::oracle
