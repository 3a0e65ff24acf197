#pragma once

// Self-verification suites surfaced by the CLI `verify` command: oracle
// equivalence on a coordinate sweep, symmetry invariance, chamber-complex
// structure, and group orders. Each suite reports one line; failures carry
// a minimal counterexample.

#include <string>
#include <vector>

#include "core/types.hpp"

namespace su3 {

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::string detail;  // summary or counterexample
};

struct VerifyOptions {
  i64 sweep = 6;  // coordinate bound for the lattice sweep
  // Fault injection for exercising the failure path: verifies against a
  // deliberately corrupted ray table.
  bool corrupt_rays = false;
};

std::vector<SuiteResult> run_verify(const VerifyOptions& opts);

// All lattice points with coordinates in [0, bound].
std::vector<TripleLabel> lattice_sweep(i64 bound);

}  // namespace su3
