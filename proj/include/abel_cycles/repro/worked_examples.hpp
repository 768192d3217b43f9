#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "abel_cycles/io/json_io.hpp"

namespace abel_cycles::repro {

/// Rigid system x' = -y + x p, y' = x + y p with
/// p = 1 - x^4y^2/2 + x^3y^3 - 5x^2y^4/2 + xy^5 - 2x^6y^6 + 3x^5y^7 - x^4y^8.
planar::RigidSystem example1_rigid();
/// cos^3 sin^3, the invariant curve a1 rho - 1 = 0 after rho = r^6.
trig::TrigPoly example1_a1();
/// The Abel data printed for the rigid example.
abel::FactoredAbel example1_expected_factored();

/// x' = a x - y + P3, y' = x + a y + Q3 with the published coefficient list.
planar::HomogeneousSystem example2_system();

/// The same data in the CLI input schemas.
io::json example1_input();
io::json example2_input();

struct Assertion {
  std::string id;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ReproReport {
  std::string example;
  std::vector<Assertion> rows;
  io::json details;

  bool all_pass() const;
  void print_table(std::ostream& os) const;
};

ReproReport reproduce_example1(const oracle::OracleOptions& opt = {});
ReproReport reproduce_example2(const oracle::OracleOptions& opt = {});
/// nullopt for an unknown id.
std::optional<ReproReport> reproduce(const std::string& id, const oracle::OracleOptions& opt = {});

}  // namespace abel_cycles::repro
