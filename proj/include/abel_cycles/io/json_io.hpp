#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "abel_cycles/criteria/criteria.hpp"
#include "abel_cycles/oracle/oracle.hpp"
#include "abel_cycles/planar/planar.hpp"

namespace abel_cycles::io {

using json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals are "num/den" strings; plain integers are accepted on input.
poly::Rational rational_from_json(const json& j);
json to_json(const poly::Rational& r);

json to_json(const poly::RationalPoly& p);
poly::RationalPoly rational_poly_from_json(const json& j);

/// [{"i": cos power, "j": sin power, "c": "num/den"}, ...]
json to_json(const trig::TrigPoly& p);
trig::TrigPoly trig_poly_from_json(const json& j);

/// A term list, or {"num": terms, "den": terms}.
json to_json(const trig::TrigRational& f);
trig::TrigRational trig_rational_from_json(const json& j);

/// [{"i": x power, "j": y power, "c": "num/den"}, ...]
json to_json(const planar::Bivariate& p);
planar::Bivariate bivariate_from_json(const json& j);

json to_json(const abel::AbelEquation& eq);
json to_json(const abel::FactoredAbel& f);
json to_json(const abel::HLNormalizedAbel& h);

/// {"abel": {"c1", "c2", "c3"}, "a1": terms}
struct AbelInput {
  abel::AbelEquation equation;
  trig::TrigPoly a1;
};
/// {"factored": {"a1", "a2", "b2"}}
struct FactoredInput {
  abel::FactoredAbel factored;
};
/// {"xdot": terms, "ydot": terms, "a1" | "invariant_curve": trig terms}
struct RigidInput {
  planar::PlanarPolySystem system;
  trig::TrigPoly a1;
};
/// {"a": "num/den", "n": int, "P": terms, "Q": terms}
struct HomogeneousInput {
  planar::HomogeneousSystem system;
};

using Input = std::variant<AbelInput, FactoredInput, RigidInput, HomogeneousInput>;

enum class Pipeline { Auto, Abel, Rigid, Homogeneous };
Pipeline parse_pipeline(const std::string& name);
std::string pipeline_name(const Input& in);

/// Picks the schema from the keys present; `forced` must agree with them.
Input parse_input(const json& j, Pipeline forced = Pipeline::Auto);

json to_json(const criteria::CriterionVerdict& v);
json to_json(const criteria::NegativeChecksReport& r);
json to_json(const oracle::CycleReport& r, bool with_samples = false);

}  // namespace abel_cycles::io
