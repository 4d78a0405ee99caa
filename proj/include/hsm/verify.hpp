#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsm/hsla.hpp"

namespace hsm {

struct Check {
  int criterion = 0;  // 0 for informational lines
  std::string suite;
  std::string name;
  bool pass = true;
  double metric = 0;  // worst residual / mismatch count, suite-specific
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  std::optional<int> samples;  // overrides the per-criterion sample counts
  double tol = 1e-9;
};

// Suites: rank, membership, bracket-triple, albert, cayley, hsla, boundary, cones, siegel,
// cominuscule, jts-axioms, printed-convention (informational), all.
std::vector<std::string> suite_names();
std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& opt);
// Itemized Hermitian-SLA axiom battery for one algebra.
std::vector<Check> sla_axiom_checks(const SlaDescriptor& L, double tol = 1e-9);
bool all_pass(const std::vector<Check>& checks);

}  // namespace hsm
