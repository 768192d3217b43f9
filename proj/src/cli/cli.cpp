#include "abel_cycles/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "abel_cycles/repro/worked_examples.hpp"

namespace abel_cycles::cli {

namespace {

using io::json;
using poly::Rational;

struct RunConfig {
  std::string input;
  std::string pipeline = "auto";
  std::vector<std::string> criteria;
  std::string eta;
  bool with_oracle = false;
  std::size_t grid = 400;
  double rtol = 1e-10;
  double atol = 1e-12;
  std::string out;
  std::string csv;
  unsigned long seed = 0;
  std::string example;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (buf.str().find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError(path + " is empty");
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write " + path);
  os << text;
}

oracle::OracleOptions oracle_options(const RunConfig& cfg) {
  oracle::OracleOptions opt;
  opt.grid = cfg.grid;
  opt.cfg.rtol = cfg.rtol;
  opt.cfg.atol = cfg.atol;
  return opt;
}

/// The factored equation an input reduces to, plus what was done on the way.
struct Reduced {
  abel::FactoredAbel factored;
  std::optional<planar::HomogeneousSystem> homogeneous;
  std::optional<planar::CherkasTransform> cherkas;
  std::string route;
};

Reduced reduce(const io::Input& input) {
  Reduced r;
  r.route = io::pipeline_name(input);
  std::visit(
      [&](const auto& in) {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, io::FactoredInput>) {
          r.factored = in.factored;
        } else if constexpr (std::is_same_v<T, io::AbelInput>) {
          r.factored = abel::factor_through_invariant(in.equation, in.a1);
        } else if constexpr (std::is_same_v<T, io::RigidInput>) {
          const auto rigid = planar::detect_rigid(in.system);
          r.factored = abel::factor_through_invariant(planar::rigid_to_abel(rigid), in.a1);
          r.route += " (k = " + std::to_string(rigid.k) + ")";
        } else {
          r.homogeneous = in.system;
          r.cherkas = planar::cherkas_transform(in.system);
          r.factored = r.cherkas->abel;
        }
      },
      input);
  return r;
}

Reduced load(const RunConfig& cfg) {
  const json j = read_input(cfg.input);
  return reduce(io::parse_input(j, io::parse_pipeline(cfg.pipeline)));
}

const std::set<std::string> kCriteria = {"theorem1", "theorem2", "prop_a2", "hl5_prop10", "corollary1", "corollary2",
                                         "hl5_negatives"};

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const Reduced r = load(cfg);
  std::vector<std::string> wanted = cfg.criteria;
  if (wanted.empty()) {
    wanted = {"theorem1", "theorem2", "prop_a2"};
    if (r.homogeneous) wanted.insert(wanted.end(), {"corollary1", "corollary2", "hl5_negatives"});
    else wanted.push_back("hl5_prop10");
  }
  for (const auto& w : wanted)
    if (!kCriteria.count(w)) throw UsageError("unknown criterion " + w);
  std::optional<Rational> eta;
  if (!cfg.eta.empty()) eta = poly::parse_rational(cfg.eta);

  json bundle = {{"route", r.route}, {"factored", io::to_json(r.factored)}, {"seed", cfg.seed}};
  bundle["verdicts"] = json::array();
  std::vector<criteria::CriterionVerdict> verdicts;
  for (const auto& w : wanted) {
    if (w == "hl5_negatives") {
      if (!r.homogeneous) throw UsageError("hl5_negatives needs a homogeneous system");
      bundle["hl5_negative_checks"] = io::to_json(criteria::hl5_negative_checks(*r.homogeneous));
      continue;
    }
    criteria::CriterionVerdict v;
    if (w == "theorem1") v = eta ? criteria::check_theorem1(r.factored, *eta) : criteria::check_theorem1_sweep(r.factored);
    else if (w == "theorem2") v = eta ? criteria::check_theorem2(r.factored, *eta) : criteria::check_theorem2_sweep(r.factored);
    else if (w == "prop_a2") v = criteria::check_prop_definite_a2(r.factored);
    else if (w == "hl5_prop10") {
      std::vector<Rational> grid = {-1, 0, 1};
      if (eta) grid.push_back(*eta);
      v = criteria::check_hl5_prop10(abel::hl_normalize(r.factored, trig::TrigPoly::constant(1)), grid);
    } else {
      if (!r.homogeneous) throw UsageError(w + " needs a homogeneous system");
      v = w == "corollary1" ? criteria::check_corollary1(*r.homogeneous) : criteria::check_corollary2(*r.homogeneous);
    }
    bundle["verdicts"].push_back(io::to_json(v));
    verdicts.push_back(std::move(v));
  }
  if (cfg.with_oracle) bundle["oracle"] = io::to_json(oracle::count_cycles_in_V(r.factored, oracle_options(cfg)));

  const std::string text = bundle.dump(2) + "\n";
  out << text;
  if (!cfg.out.empty()) write_file(cfg.out, text);

  const bool any_holds = std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.holds(); });
  const bool all_fail = !verdicts.empty() && std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) {
    return v.outcome == criteria::Outcome::Fails;
  });
  return any_holds ? kHolds : (all_fail ? kFails : kUsage);
}

int cmd_transform(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Reduced r;
  try {
    r = load(cfg);
  } catch (const abel::NotInvariant& e) {
    err << e.what() << "\nresidual: " << e.residual().to_string() << "\n";
    return kUsage;
  }
  json j = {{"route", r.route}, {"factored", io::to_json(r.factored)}, {"equation", io::to_json(r.factored.reconstruct())}};
  if (r.cherkas) {
    j["default_eta"] = io::to_json(r.cherkas->default_eta);
    j["domain_guard"] = r.cherkas->domain_guard;
  }
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!cfg.out.empty()) write_file(cfg.out, text);
  return kHolds;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const Reduced r = load(cfg);
  const auto report = oracle::count_cycles_in_V(r.factored, oracle_options(cfg));
  const std::string text = io::to_json(report).dump(2) + "\n";
  out << text;
  std::string csv = cfg.csv;
  if (!cfg.out.empty()) {
    write_file(cfg.out, text);
    if (csv.empty()) csv = std::filesystem::path(cfg.out).replace_extension(".csv").string();
  }
  if (!csv.empty()) {
    std::ofstream os(csv);
    if (!os) throw UsageError("cannot write " + csv);
    oracle::write_samples_csv(os, report.samples);
  }
  return kHolds;
}

int cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto rep = repro::reproduce(cfg.example, oracle_options(cfg));
  if (!rep) {
    err << "unknown example '" << cfg.example << "' (expected example1 or example2)\n";
    return kUsage;
  }
  rep->print_table(out);
  if (!cfg.out.empty()) {
    json j = {{"example", rep->example}, {"all_pass", rep->all_pass()}, {"details", rep->details}};
    j["assertions"] = json::array();
    for (const auto& a : rep->rows)
      j["assertions"].push_back({{"id", a.id}, {"expected", a.expected}, {"observed", a.observed}, {"pass", a.pass}});
    write_file(cfg.out, j.dump(2) + "\n");
  }
  if (!rep->all_pass()) {
    err << "mismatches:\n";
    for (const auto& a : rep->rows)
      if (!a.pass) err << "  " << a.id << ": expected " << a.expected << ", got " << a.observed << "\n";
    return kFails;
  }
  return kHolds;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--input", cfg.input, "JSON input file");
  sub->add_option("--pipeline", cfg.pipeline, "auto|abel|rigid|homogeneous")
      ->check(CLI::IsMember({"auto", "abel", "rigid", "homogeneous"}));
  sub->add_option("--out", cfg.out, "also write the JSON output here");
  sub->add_option("--seed", cfg.seed, "seed recorded with the run");
}

void add_oracle_flags(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--grid", cfg.grid, "initial conditions per component")->check(CLI::Range(4, 1000000));
  sub->add_option("--rtol", cfg.rtol, "relative tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--atol", cfg.atol, "absolute tolerance")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Limit-cycle criteria for Abel equations with two invariant curves"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* check = app.add_subcommand("check", "run the criteria and print a verdict bundle");
  add_common(check, cfg);
  add_oracle_flags(check, cfg);
  check->add_option("--criteria", cfg.criteria, "comma separated subset of " + [] {
    std::string s;
    for (const auto& c : kCriteria) s += (s.empty() ? "" : ",") + c;
    return s;
  }())->delimiter(',');
  check->add_option("--eta", cfg.eta, "fixed eta instead of the candidate sweep");
  check->add_flag("--oracle", cfg.with_oracle, "cross-check with the displacement-map oracle");

  auto* transform = app.add_subcommand("transform", "print the equation in factored form");
  add_common(transform, cfg);

  auto* orc = app.add_subcommand("oracle", "count cycles in V numerically");
  add_common(orc, cfg);
  add_oracle_flags(orc, cfg);
  orc->add_option("--csv", cfg.csv, "per-sample CSV (default: next to --out)");

  auto* reproduce = app.add_subcommand("reproduce", "re-derive a worked example and check every published value");
  reproduce->add_option("example", cfg.example, "example1 or example2")->required();
  reproduce->add_option("--out", cfg.out, "JSON report");
  add_oracle_flags(reproduce, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, out);
    if (transform->parsed()) return cmd_transform(cfg, out, err);
    if (orc->parsed()) return cmd_oracle(cfg, out);
    return cmd_reproduce(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace abel_cycles::cli
