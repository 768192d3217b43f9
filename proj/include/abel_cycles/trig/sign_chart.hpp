#pragma once

#include <string>
#include <vector>

#include "abel_cycles/poly/sturm.hpp"
#include "abel_cycles/trig/trig_rational.hpp"

namespace abel_cycles::trig {

enum class ChartKind {
  /// t = tan(theta); every function is a homogeneous form. Covers
  /// (-pi/2, pi/2) and, through the parity of each form, its pi-shift.
  Tangent,
  /// u = tan(theta/2); works for any input, covers (-pi, pi).
  HalfAngle,
};

/// One region of the joint sign partition of a period.
struct ChartRegion {
  enum class Where { Line, ExtraPoint };
  Where where = Where::Line;
  /// Line regions: cell of the chart variable.
  poly::Cell cell;
  /// 0: theta = chart(t); 1: theta = chart(t) + pi (tangent chart only).
  int sheet = 0;
  /// Extra points: theta = pi/2, -pi/2 (tangent) or pi (half-angle).
  std::string label;
  double theta = 0.0;
  /// Exact sign of each function; meaningless where !defined[i].
  std::vector<int> signs;
  /// False where the function's denominator vanishes (pole).
  std::vector<bool> defined;

  bool positive_measure() const { return where == Where::Line && cell.kind == poly::Cell::Kind::Open; }
  bool all_defined() const;
};

/// Exact joint sign analysis of finitely many trig-rational functions over
/// one full period [0, 2pi].
class SignChart {
 public:
  explicit SignChart(std::vector<TrigRational> functions, bool force_half_angle = false);

  ChartKind kind() const { return kind_; }
  const std::vector<ChartRegion>& regions() const { return regions_; }
  std::size_t size() const { return functions_.size(); }

  /// Chart polynomials of function i: sign(f_i) = sign(num * den) on sheet 0.
  const RationalPoly& chart_numerator(std::size_t i) const { return chart_num_[i]; }
  const RationalPoly& chart_denominator(std::size_t i) const { return chart_den_[i]; }
  /// Sign factor applied on sheet 1, (-1)^(deg num + deg den).
  int sheet_flip(std::size_t i) const { return flip_[i]; }

  /// Classification of function i over the period, ignoring poles.
  SignOnSet sign_of(std::size_t i) const;

  /// Readable location, e.g. "t=-1 (theta~-0.785)".
  std::string describe(const ChartRegion& r) const;
  /// Witness description for a region: exact chart coordinate or interval.
  poly::Witness chart_witness(const ChartRegion& r) const;

 private:
  std::vector<TrigRational> functions_;
  ChartKind kind_;
  std::vector<RationalPoly> chart_num_;
  std::vector<RationalPoly> chart_den_;
  std::vector<int> flip_;
  std::vector<ChartRegion> regions_;
};

std::string to_string(ChartKind k);

}  // namespace abel_cycles::trig
