#include "abel_cycles/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace abel_cycles::oracle {

IntegrationResult integrate(const Field& field, double x0, double t0, double t1, const IntegratorConfig& cfg) {
  LaneResult r;
  integrate_batch_scalar(field, &x0, 1, t0, t1, cfg, &r);
  return {r.x, r.z, r.escape};
}

namespace {

unsigned worker_count(std::size_t work) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ABEL_CYCLES_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  // Tiny sweeps are not worth a thread each.
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(n, work / 16)));
}

DisplacementSample to_sample(double x0, const LaneResult& r) {
  DisplacementSample s;
  s.x0 = x0;
  s.reason = r.escape;
  s.escaped = r.escape != Escape::None;
  if (!s.escaped) {
    s.d = r.x - x0;
    s.dprime = std::expm1(r.z);
  }
  return s;
}

}  // namespace

std::vector<DisplacementSample> displacement_map(const Field& field, const std::vector<double>& grid,
                                                 const IntegratorConfig& cfg, BatchKernel kernel) {
  if (kernel == nullptr) kernel = select_kernel();
  const std::size_t n = grid.size();
  std::vector<LaneResult> lanes(n);
  const double T = field.period();

  const unsigned workers = worker_count(n);
  // Chunks are whole multiples of four so lockstep groups are never split.
  std::size_t chunk = (n + workers - 1) / workers;
  chunk = (chunk + 3) / 4 * 4;
  std::vector<std::thread> pool;
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    const std::size_t len = std::min(chunk, n - begin);
    auto job = [&, begin, len] { kernel(field, grid.data() + begin, len, 0.0, T, cfg, lanes.data() + begin); };
    if (workers == 1) job();
    else pool.emplace_back(job);
  }
  for (auto& t : pool) t.join();

  std::vector<DisplacementSample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = to_sample(grid[i], lanes[i]);
    // x = 0 is a solution; report it exactly rather than via the integrator.
    if (grid[i] == 0.0 && !out[i].escaped) out[i].d = 0.0;
  }
  return out;
}

std::vector<double> graded_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (1.0 - std::cos(std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n))) / 2.0;
    g[i] = lo + (hi - lo) * u;
  }
  return g;
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::Unstable: return "unstable";
    case Stability::NonHyperbolic: return "non-hyperbolic?";
  }
  return "?";
}

namespace {

int sign(double v) { return (v > 0) - (v < 0); }

// Shrinks [lo, hi] with d(lo) d(hi) < 0 down to the requested width. Returns
// false when an interior evaluation escapes.
bool refine(const Field& field, const OracleOptions& opt, Cycle& c) {
  const double T = field.period();
  int s_lo = sign(c.d_lo);
  std::optional<double> exact;
  while (!exact && c.x_hi - c.x_lo > opt.refine_width) {
    const double mid = 0.5 * (c.x_lo + c.x_hi);
    if (mid <= c.x_lo || mid >= c.x_hi) break;
    const auto r = integrate(field, mid, 0.0, T, opt.cfg);
    if (r.escaped()) return false;
    const double d = r.x - mid;
    // An exact zero (an equilibrium on a dyadic point, say) ends the search
    // but keeps the strict bracket around it.
    if (d == 0.0) exact = mid;
    else if (sign(d) == s_lo) {
      c.x_lo = mid;
      c.d_lo = d;
    } else {
      c.x_hi = mid;
      c.d_hi = d;
    }
  }
  c.x_star = exact.value_or(0.5 * (c.x_lo + c.x_hi));
  const auto r = integrate(field, c.x_star, 0.0, T, opt.cfg);
  if (r.escaped()) return false;
  c.dprime = std::expm1(r.z);
  if (std::abs(c.dprime) < opt.nonhyperbolic) c.stability = Stability::NonHyperbolic;
  else c.stability = c.dprime < 0 ? Stability::Stable : Stability::Unstable;
  return true;
}

}  // namespace

CycleReport scan_components(const Field& field, const std::vector<Component>& components, const OracleOptions& opt) {
  CycleReport rep;
  rep.components = components;
  rep.kernel = opt.kernel == &integrate_batch_scalar ? "scalar" : selected_kernel_name();
  for (const auto& comp : components) {
    const auto grid = graded_grid(comp.lo, comp.hi, opt.grid);
    auto samples = displacement_map(field, grid, opt.cfg, opt.kernel);
    // Pairs of consecutive finite samples; an escape breaks the chain.
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
      const auto& a = samples[i];
      const auto& b = samples[i + 1];
      if (a.escaped || b.escaped) continue;
      const int sa = sign(a.d), sb = sign(b.d);
      if (sa * sb >= 0) {
        // A sample landing exactly on a zero is bracketed by its neighbours.
        if (sb == 0 && sa != 0 && i + 2 < samples.size() && !samples[i + 2].escaped &&
            sign(samples[i + 2].d) == -sa) {
          Cycle c{a.x0, samples[i + 2].x0, b.x0, a.d, samples[i + 2].d, 0.0, Stability::NonHyperbolic, comp.label};
          if (refine(field, opt, c)) rep.cycles.push_back(c);
          else rep.notes.push_back("bracket near " + std::to_string(b.x0) + " escaped during refinement");
        }
        continue;
      }
      Cycle c{a.x0, b.x0, 0.0, a.d, b.d, 0.0, Stability::NonHyperbolic, comp.label};
      if (refine(field, opt, c)) rep.cycles.push_back(c);
      else rep.notes.push_back("bracket [" + std::to_string(a.x0) + ", " + std::to_string(b.x0) +
                               "] escaped during refinement");
    }
    for (const auto& s : samples) rep.escaped_samples += s.escaped;
    if (comp.heuristic_cutoff)
      rep.notes.push_back("component " + comp.label + " is unbounded; scanned up to the cutoff " +
                          std::to_string(opt.cutoff) + " (heuristic)");
    rep.samples.insert(rep.samples.end(), samples.begin(), samples.end());
  }
  return rep;
}

abel::FactoredAbel negative_component_transform(const abel::FactoredAbel& f) {
  if (trig::definite_sign_on_period(f.a1) != poly::SignOnSet::StrictlyNegative)
    throw std::invalid_argument("negative_component_transform needs a1 < 0 on the whole period");
  abel::FactoredAbel g;
  g.a1 = trig::TrigPoly::constant(1);
  g.a2 = f.a2 / trig::TrigRational(f.a1);
  g.b2 = f.b2;
  g.period = f.period;
  return g;
}

CycleReport count_cycles_in_V(const abel::FactoredAbel& f, const OracleOptions& opt) {
  const auto region = abel::classify_region(f);
  const double a1_at_0 = f.a1.evaluate_at(1, 0).get_d();
  std::vector<Component> comps;
  CycleReport rep;
  switch (region.kind) {
    case abel::RegionV::Kind::A1Positive:
      comps.push_back({"0 < x < 1/a1(0)", 0.0, 1.0 / a1_at_0, false});
      rep = scan_components(Field(f), comps, opt);
      break;
    case abel::RegionV::Kind::A1SignChanging:
      if (a1_at_0 > 0) comps.push_back({"0 < x < 1/a1(0)", 0.0, 1.0 / a1_at_0, false});
      else comps.push_back({"x > 0", 0.0, opt.cutoff, true});
      rep = scan_components(Field(f), comps, opt);
      break;
    case abel::RegionV::Kind::A1Negative: {
      comps.push_back({"y < 0 (x > 0)", -opt.cutoff, 0.0, true});
      comps.push_back({"y > 1 (x < 1/a1)", 1.0, 1.0 + opt.cutoff, true});
      rep = scan_components(Field(negative_component_transform(f)), comps, opt);
      rep.coordinate = "y = a1 x";
      break;
    }
  }
  rep.region = abel::to_string(region.kind);
  return rep;
}

double verify_invariance(const abel::FactoredAbel& f, Curve curve, double t0, double t1,
                         const IntegratorConfig& cfg, int checkpoints) {
  const Field field(f);
  auto deviation = [&](double t, double u) {
    if (curve == Curve::Zero) return std::abs(u);
    return std::abs(f.a1.evaluate(t) * u - 1.0);
  };
  double u = curve == Curve::Zero ? 0.0 : 1.0 / f.a1.evaluate(t0);
  double worst = deviation(t0, u);
  const double dt = (t1 - t0) / checkpoints;
  for (int k = 0; k < checkpoints; ++k) {
    const double a = t0 + k * dt, b = (k + 1 == checkpoints) ? t1 : a + dt;
    const auto r = integrate(field, u, a, b, cfg);
    if (r.escaped()) return std::numeric_limits<double>::infinity();
    u = r.x;
    worst = std::max(worst, deviation(b, u));
  }
  return worst;
}

void write_samples_csv(std::ostream& os, const std::vector<DisplacementSample>& samples) {
  os << "x0,d,dprime,escaped\n";
  os.precision(17);
  for (const auto& s : samples) os << s.x0 << ',' << s.d << ',' << s.dprime << ',' << (s.escaped ? 1 : 0) << '\n';
}

}  // namespace abel_cycles::oracle
