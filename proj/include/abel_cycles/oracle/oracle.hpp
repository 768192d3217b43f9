#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "abel_cycles/oracle/kernels.hpp"

namespace abel_cycles::oracle {

struct IntegrationResult {
  double x = 0.0;
  /// Integral of p_x along the solution.
  double z = 0.0;
  Escape escape = Escape::None;
  bool escaped() const { return escape != Escape::None; }
};

IntegrationResult integrate(const Field& field, double x0, double t0, double t1, const IntegratorConfig& cfg = {});

struct DisplacementSample {
  double x0 = 0.0;
  double d = 0.0;
  double dprime = 0.0;
  bool escaped = false;
  Escape reason = Escape::None;
};

/// One sample per grid point over a full period. Parallel over the grid;
/// ABEL_CYCLES_THREADS caps the number of workers.
std::vector<DisplacementSample> displacement_map(const Field& field, const std::vector<double>& grid,
                                                 const IntegratorConfig& cfg = {}, BatchKernel kernel = nullptr);

/// n points on (lo, hi), clustered towards both ends.
std::vector<double> graded_grid(double lo, double hi, std::size_t n);

enum class Stability { Stable, Unstable, NonHyperbolic };
std::string to_string(Stability s);

/// A connected piece of the t = 0 fiber of V, in the coordinate the oracle
/// integrates in.
struct Component {
  std::string label;
  double lo = 0.0;
  double hi = 0.0;
  /// The fiber is unbounded on one side and was cut off.
  bool heuristic_cutoff = false;
};

struct Cycle {
  double x_lo = 0.0;
  double x_hi = 0.0;
  double x_star = 0.0;
  double d_lo = 0.0;
  double d_hi = 0.0;
  double dprime = 0.0;
  Stability stability = Stability::NonHyperbolic;
  std::string component;
};

struct CycleReport {
  /// "x", or "y = a1 x" when the negative-component chart was used.
  std::string coordinate = "x";
  std::string region;
  std::vector<Component> components;
  std::vector<Cycle> cycles;
  std::vector<DisplacementSample> samples;
  std::size_t escaped_samples = 0;
  std::string kernel;
  std::vector<std::string> notes;
};

struct OracleOptions {
  IntegratorConfig cfg;
  std::size_t grid = 400;
  /// Replaces an infinite end of a fiber.
  double cutoff = 1e3;
  double refine_width = 1e-10;
  double nonhyperbolic = 1e-6;
  BatchKernel kernel = nullptr;
};

/// Scans each component with a graded grid, brackets sign changes of d and
/// refines them by bisection.
CycleReport scan_components(const Field& field, const std::vector<Component>& components, const OracleOptions& opt);

/// Works out V's fiber at t = 0 from the sign pattern of a1 and scans it.
CycleReport count_cycles_in_V(const abel::FactoredAbel& f, const OracleOptions& opt = {});

/// y = a1 x for a1 < 0: y' = (1/a1) y (y - 1)(a2 y - a1 b2), returned in
/// factored form with a1 = 1. Throws std::invalid_argument unless a1 < 0 on
/// the whole period.
abel::FactoredAbel negative_component_transform(const abel::FactoredAbel& f);

enum class Curve { Zero, A1Curve };

/// Starts on the curve at t0 and integrates to t1, returning the largest
/// relative deviation |a1 u - 1| (or |u| for x = 0) seen at `checkpoints`
/// evenly spaced times.
double verify_invariance(const abel::FactoredAbel& f, Curve curve, double t0, double t1,
                         const IntegratorConfig& cfg = {}, int checkpoints = 200);

void write_samples_csv(std::ostream& os, const std::vector<DisplacementSample>& samples);

}  // namespace abel_cycles::oracle
