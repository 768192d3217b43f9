#include "abel_cycles/trig/sign_chart.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace abel_cycles::trig {

std::string to_string(ChartKind k) { return k == ChartKind::Tangent ? "tan" : "half-angle"; }

bool ChartRegion::all_defined() const {
  for (bool d : defined)
    if (!d) return false;
  return true;
}

namespace {

int sgn_of(const Rational& q) { return sgn(q); }

double cell_coordinate(const poly::Cell& c) {
  if (c.kind == poly::Cell::Kind::Point) return c.root.approx();
  return c.sample.get_d();
}

}  // namespace

SignChart::SignChart(std::vector<TrigRational> functions, bool force_half_angle)
    : functions_(std::move(functions)), kind_(ChartKind::Tangent) {
  const std::size_t n = functions_.size();
  std::vector<int> deg_num(n), deg_den(n);
  bool tangent_ok = !force_half_angle;
  for (std::size_t i = 0; i < n && tangent_ok; ++i) {
    auto dn = functions_[i].numerator().homogeneous_degree();
    auto dd = functions_[i].denominator_trig().homogeneous_degree();
    if (!dn || !dd) {
      tangent_ok = false;
      break;
    }
    deg_num[i] = *dn;
    deg_den[i] = *dd;
  }
  kind_ = tangent_ok ? ChartKind::Tangent : ChartKind::HalfAngle;

  chart_num_.resize(n);
  chart_den_.resize(n);
  flip_.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const TrigPoly num = functions_[i].numerator();
    const TrigPoly den = functions_[i].denominator_trig();
    if (kind_ == ChartKind::Tangent) {
      chart_num_[i] = tan_substitute(num, deg_num[i]);
      chart_den_[i] = tan_substitute(den, deg_den[i]);
      flip_[i] = ((deg_num[i] + deg_den[i]) % 2 == 0) ? 1 : -1;
    } else {
      chart_num_[i] = half_angle_substitute(num);
      chart_den_[i] = half_angle_substitute(den);
    }
  }

  std::vector<RationalPoly> all;
  all.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    all.push_back(chart_num_[i]);
    all.push_back(chart_den_[i]);
  }
  const auto cells = poly::decompose_real_line(all);

  bool any_flip = false;
  for (int f : flip_) any_flip |= f < 0;
  const int sheets = (kind_ == ChartKind::Tangent && any_flip) ? 2 : 1;

  for (int sheet = 0; sheet < sheets; ++sheet) {
    for (const auto& c : cells) {
      ChartRegion r;
      r.where = ChartRegion::Where::Line;
      r.cell = c;
      r.sheet = sheet;
      r.signs.resize(n);
      r.defined.resize(n);
      double x = cell_coordinate(c);
      r.theta = kind_ == ChartKind::Tangent ? std::atan(x) + (sheet ? std::numbers::pi : 0.0) : 2.0 * std::atan(x);
      for (std::size_t i = 0; i < n; ++i) {
        int sn = c.signs[2 * i];
        int sd = c.signs[2 * i + 1];
        r.defined[i] = sd != 0;
        r.signs[i] = sn * sd * (sheet ? flip_[i] : 1);
      }
      regions_.push_back(std::move(r));
    }
  }

  auto push_point = [&](std::string label, double theta, auto&& num_value, auto&& den_value) {
    ChartRegion r;
    r.where = ChartRegion::Where::ExtraPoint;
    r.label = std::move(label);
    r.theta = theta;
    r.signs.resize(n);
    r.defined.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      int sd = sgn_of(den_value(i));
      r.defined[i] = sd != 0;
      r.signs[i] = sgn_of(num_value(i)) * sd;
    }
    regions_.push_back(std::move(r));
  };

  if (kind_ == ChartKind::Tangent) {
    // theta = pi/2: only the pure sin^d term survives.
    push_point(
        "theta=pi/2", std::numbers::pi / 2,
        [&](std::size_t i) { return chart_num_[i].coeff(static_cast<std::size_t>(deg_num[i])); },
        [&](std::size_t i) { return chart_den_[i].coeff(static_cast<std::size_t>(deg_den[i])); });
    if (any_flip) {
      push_point(
          "theta=-pi/2", -std::numbers::pi / 2,
          [&](std::size_t i) {
            Rational v = chart_num_[i].coeff(static_cast<std::size_t>(deg_num[i]));
            return deg_num[i] % 2 ? Rational(-v) : v;
          },
          [&](std::size_t i) {
            Rational v = chart_den_[i].coeff(static_cast<std::size_t>(deg_den[i]));
            return deg_den[i] % 2 ? Rational(-v) : v;
          });
    }
  } else {
    push_point(
        "theta=pi", std::numbers::pi,
        [&](std::size_t i) { return functions_[i].numerator().evaluate_at(Rational(-1), Rational(0)); },
        [&](std::size_t i) { return functions_[i].denominator().evaluate(Rational(-1)); });
  }
}

SignOnSet SignChart::sign_of(std::size_t i) const {
  bool pos = false, zero = false, neg = false;
  for (const auto& r : regions_) {
    if (!r.defined[i]) continue;
    pos |= r.signs[i] > 0;
    zero |= r.signs[i] == 0;
    neg |= r.signs[i] < 0;
  }
  return poly::classify_signs(pos, zero, neg);
}

poly::Witness SignChart::chart_witness(const ChartRegion& r) const {
  if (r.where == ChartRegion::Where::ExtraPoint) return poly::from_double(r.theta);
  if (r.cell.kind == poly::Cell::Kind::Open) return r.cell.sample;
  if (r.cell.root.exact) return *r.cell.root.exact;
  return r.cell.root;
}

std::string SignChart::describe(const ChartRegion& r) const {
  std::ostringstream os;
  if (r.where == ChartRegion::Where::ExtraPoint) {
    os << r.label;
    return os.str();
  }
  os << (kind_ == ChartKind::Tangent ? "t=" : "u=") << poly::to_string(chart_witness(r));
  if (r.sheet == 1) os << " (shifted by pi)";
  os << " theta~" << r.theta;
  return os.str();
}

}  // namespace abel_cycles::trig
