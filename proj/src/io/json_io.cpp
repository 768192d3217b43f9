#include "abel_cycles/io/json_io.hpp"

#include <cmath>

namespace abel_cycles::io {

using poly::Rational;

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return poly::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const poly::ParseError& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

json to_json(const Rational& r) { return poly::to_string(r); }

json to_json(const poly::RationalPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

poly::RationalPoly rational_poly_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("polynomial must be an array of coefficients, lowest degree first");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return poly::RationalPoly(std::move(coeffs));
}

namespace {

template <class Map>
json terms_to_json(const Map& terms) {
  json out = json::array();
  for (const auto& [ij, c] : terms) out.push_back({{"i", ij.first}, {"j", ij.second}, {"c", to_json(c)}});
  return out;
}

template <class Map>
Map terms_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("term list must be an array of {i, j, c}");
  Map terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("c"))
      throw SchemaError("term must have keys i, j, c: " + t.dump());
    const auto i = t["i"], jj = t["j"];
    // A parsed 0 is unsigned, a constructed 0 is signed; accept both.
    auto power_ok = [](const json& v) { return v.is_number_integer() && v.template get<long long>() >= 0; };
    if (!power_ok(i) || !power_ok(jj)) throw SchemaError("term powers must be non-negative integers");
    terms[{i.get<unsigned>(), jj.get<unsigned>()}] += rational_from_json(t["c"]);
  }
  return terms;
}

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw SchemaError(std::string("missing key \"") + key + "\"");
  return j[key];
}

}  // namespace

json to_json(const trig::TrigPoly& p) { return terms_to_json(p.terms()); }

trig::TrigPoly trig_poly_from_json(const json& j) { return trig::TrigPoly::from_terms(terms_from_json<trig::TermMap>(j)); }

json to_json(const trig::TrigRational& f) {
  if (f.is_polynomial()) return to_json(f.numerator());
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator_trig())}};
}

trig::TrigRational trig_rational_from_json(const json& j) {
  if (j.is_array()) return trig::TrigRational(trig_poly_from_json(j));
  if (j.is_object()) {
    try {
      return trig::TrigRational::quotient(trig_poly_from_json(require(j, "num")), trig_poly_from_json(require(j, "den")));
    } catch (const std::domain_error& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("trig function must be a term list or {num, den}");
}

json to_json(const planar::Bivariate& p) { return terms_to_json(p.terms()); }

planar::Bivariate bivariate_from_json(const json& j) {
  return planar::Bivariate(terms_from_json<planar::Bivariate::Terms>(j));
}

json to_json(const abel::AbelEquation& eq) {
  return {{"c1", to_json(eq.c1)}, {"c2", to_json(eq.c2)}, {"c3", to_json(eq.c3)}, {"period", trig::to_string(eq.period)}};
}

json to_json(const abel::FactoredAbel& f) {
  return {{"a1", to_json(f.a1)}, {"a2", to_json(f.a2)}, {"b2", to_json(f.b2)}, {"period", trig::to_string(f.period)}};
}

json to_json(const abel::HLNormalizedAbel& h) {
  return {{"A1", to_json(h.a1)}, {"B1", to_json(h.b1)}, {"A2", to_json(h.a2)}, {"B2", to_json(h.b2)},
          {"period", trig::to_string(h.period)}};
}

Pipeline parse_pipeline(const std::string& name) {
  if (name == "auto") return Pipeline::Auto;
  if (name == "abel") return Pipeline::Abel;
  if (name == "rigid") return Pipeline::Rigid;
  if (name == "homogeneous") return Pipeline::Homogeneous;
  throw SchemaError("unknown pipeline " + name);
}

std::string pipeline_name(const Input& in) {
  switch (in.index()) {
    case 0: return "abel";
    case 1: return "abel (factored)";
    case 2: return "rigid";
    default: return "homogeneous";
  }
}

Input parse_input(const json& j, Pipeline forced) {
  if (!j.is_object() || j.empty()) throw SchemaError("input must be a non-empty JSON object");
  const bool abel_like = j.contains("abel") || j.contains("factored");
  const bool rigid = j.contains("xdot") || j.contains("ydot");
  const bool homogeneous = j.contains("P") || j.contains("Q");
  if (abel_like + rigid + homogeneous != 1) throw SchemaError("input matches none or several of the known schemas");

  auto check = [&](Pipeline want) {
    if (forced != Pipeline::Auto && forced != want) throw SchemaError("--pipeline disagrees with the input schema");
  };
  try {
    if (j.contains("factored")) {
      check(Pipeline::Abel);
      const auto& f = j["factored"];
      return FactoredInput{abel::make_factored(trig_poly_from_json(require(f, "a1")),
                                               trig_rational_from_json(require(f, "a2")),
                                               trig_rational_from_json(require(f, "b2")))};
    }
    if (j.contains("abel")) {
      check(Pipeline::Abel);
      const auto& e = j["abel"];
      return AbelInput{abel::make_equation(trig_rational_from_json(require(e, "c1")),
                                           trig_rational_from_json(require(e, "c2")),
                                           trig_rational_from_json(require(e, "c3"))),
                       trig_poly_from_json(require(j, "a1"))};
    }
    if (rigid) {
      check(Pipeline::Rigid);
      const json& curve = j.contains("a1") ? j["a1"] : require(j, "invariant_curve");
      return RigidInput{{bivariate_from_json(require(j, "xdot")), bivariate_from_json(require(j, "ydot"))},
                        trig_poly_from_json(curve)};
    }
    check(Pipeline::Homogeneous);
    const auto& n = require(j, "n");
    if (!n.is_number_unsigned()) throw SchemaError("n must be a positive integer");
    return HomogeneousInput{planar::make_homogeneous(rational_from_json(require(j, "a")), n.get<unsigned>(),
                                                     bivariate_from_json(require(j, "P")),
                                                     bivariate_from_json(require(j, "Q")))};
  } catch (const SchemaError&) {
    throw;
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

namespace {

json location_json(const criteria::Location& loc) {
  json out = {{"chart", loc.chart}, {"sheet", loc.sheet}, {"theta", loc.theta}};
  if (loc.point) {
    if (const auto* q = std::get_if<Rational>(&*loc.point)) {
      out["point"] = to_json(*q);
    } else {
      const auto& iv = std::get<poly::RootInterval>(*loc.point);
      if (iv.exact) out["point"] = to_json(*iv.exact);
      else out["interval"] = {to_json(iv.lo), to_json(iv.hi)};
    }
  }
  if (!loc.label.empty()) out["label"] = loc.label;
  return out;
}

json witness_json(const criteria::WitnessEntry& w) {
  json out = {{"condition", w.condition}};
  out.update(location_json(w.where));
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const criteria::CriterionVerdict& v) {
  json out = {{"criterion", v.criterion},
              {"outcome", criteria::to_string(v.outcome)},
              {"bound", criteria::to_string(v.bound)},
              {"branch", criteria::to_string(v.branch)},
              {"eta", v.eta ? to_json(*v.eta) : json(nullptr)}};
  out["witnesses"] = json::array();
  for (const auto& w : v.witnesses) out["witnesses"].push_back(witness_json(w));
  out["strictness_evidence"] = json::array();
  for (const auto& s : v.strictness)
    out["strictness_evidence"].push_back({{"condition", s.condition},
                                          {"chart", s.chart},
                                          {"sheet", s.sheet},
                                          {"interval", {to_json(s.lo), to_json(s.hi)}},
                                          {"theta", {s.theta_lo, s.theta_hi}}});
  out["notes"] = v.notes;
  return out;
}

json to_json(const criteria::NegativeChecksReport& r) {
  json out = {{"all_confirmed", r.all_confirmed()}};
  out["checks"] = json::array();
  for (const auto& c : r.checks) {
    json w = json::array();
    for (const auto& e : c.witnesses) w.push_back(witness_json(e));
    out["checks"].push_back({{"id", c.id}, {"confirmed", c.confirmed}, {"detail", c.detail}, {"witnesses", w}});
  }
  if (r.p1) out["p1"] = to_json(*r.p1);
  if (r.p2) out["p2"] = to_json(*r.p2);
  if (r.root_window) out["root_window"] = {to_json(r.root_window->first), to_json(r.root_window->second)};
  return out;
}

json to_json(const oracle::CycleReport& r, bool with_samples) {
  json out = {{"coordinate", r.coordinate}, {"region", r.region}, {"kernel", r.kernel}};
  out["components"] = json::array();
  for (const auto& c : r.components)
    out["components"].push_back({{"label", c.label}, {"lo", c.lo}, {"hi", c.hi}, {"heuristic_cutoff", c.heuristic_cutoff}});
  out["cycle_count"] = r.cycles.size();
  out["cycles"] = json::array();
  for (const auto& c : r.cycles)
    out["cycles"].push_back({{"x_lo", c.x_lo},
                             {"x_hi", c.x_hi},
                             {"x_star", c.x_star},
                             {"dprime", finite_or_null(c.dprime)},
                             {"stability", oracle::to_string(c.stability)},
                             {"component", c.component}});
  out["escaped_samples"] = r.escaped_samples;
  out["notes"] = r.notes;
  if (with_samples) {
    out["samples"] = json::array();
    for (const auto& s : r.samples)
      out["samples"].push_back({{"x0", s.x0},
                                {"d", finite_or_null(s.d)},
                                {"dprime", finite_or_null(s.dprime)},
                                {"escaped", s.escaped},
                                {"reason", oracle::to_string(s.reason)}});
  }
  return out;
}

}  // namespace abel_cycles::io
