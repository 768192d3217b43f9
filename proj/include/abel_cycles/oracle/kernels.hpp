#pragma once

#include <cstddef>
#include <string>

#include "abel_cycles/oracle/field.hpp"

namespace abel_cycles::oracle {

enum class Escape { None, BlowUp, Pole, StepUnderflow, MaxSteps };
std::string to_string(Escape e);

/// u(t1) and z(t1) = integral of p_x(t, u(t)) from t0 to t1.
struct LaneResult {
  double x = 0.0;
  double z = 0.0;
  Escape escape = Escape::None;
};

/// Integrates x' = x (C1 + C2 x + C3 x^2) together with z' = p_x for every
/// initial value in x0[0..n) from t0 to t1.
using BatchKernel = void (*)(const Field& field, const double* x0, std::size_t n, double t0, double t1,
                             const IntegratorConfig& cfg, LaneResult* out);

/// Reference: each initial value gets its own adaptive step sequence.
void integrate_batch_scalar(const Field& field, const double* x0, std::size_t n, double t0, double t1,
                            const IntegratorConfig& cfg, LaneResult* out);

#ifdef ABEL_CYCLES_HAVE_AVX2_KERNEL
/// Four initial values advance in lockstep with a shared step size; the
/// coefficients are evaluated once per stage for all lanes.
void integrate_batch_avx2(const Field& field, const double* x0, std::size_t n, double t0, double t1,
                          const IntegratorConfig& cfg, LaneResult* out);
#endif

/// AVX2 + FMA when the CPU has them, unless ABEL_CYCLES_KERNEL=scalar.
BatchKernel select_kernel();
std::string selected_kernel_name();
bool avx2_kernel_available();

}  // namespace abel_cycles::oracle
