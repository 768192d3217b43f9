#pragma once

#include <vector>

#include "abel_cycles/abel/abel.hpp"

namespace abel_cycles::oracle {

struct IntegratorConfig {
  double rtol = 1e-10;
  double atol = 1e-12;
  /// Largest step as a fraction of the period.
  double max_step_fraction = 0.02;
  /// Integration stops once a coefficient denominator drops below this.
  double pole_guard = 1e-6;
  double x_max = 1e6;
  long max_steps = 2'000'000;
};

/// Values of C1, C2, C3 at one time.
struct Coefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  /// Smallest |denominator| among the three; +inf when all are polynomials.
  double min_denominator = 0.0;
};

/// Floating-point image of an Abel equation x' = C1 x + C2 x^2 + C3 x^3 for
/// fast repeated evaluation.
class Field {
 public:
  explicit Field(const abel::AbelEquation& eq);
  explicit Field(const abel::FactoredAbel& f) : Field(f.reconstruct()) {}

  double period() const { return period_; }
  Coefficients at(double theta) const;

 private:
  struct Compiled {
    std::vector<double> even;
    std::vector<double> odd;
    std::vector<double> den;
    bool has_den = false;
  };
  static Compiled compile(const trig::TrigRational& f);
  static double horner(const std::vector<double>& p, double x);
  double eval(const Compiled& f, double c, double s, double& den_abs) const;

  Compiled c1_, c2_, c3_;
  double period_;
};

}  // namespace abel_cycles::oracle
