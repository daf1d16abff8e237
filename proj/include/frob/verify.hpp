#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frob/closed_forms.hpp"
#include "frob/grid.hpp"
#include "frob/oracle.hpp"

namespace frob {

struct VerifyOptions {
  unsigned threads = 1;
  unsigned max_mu = 3;
  bool ct = true;      // fx_family + stats_via_ct + equivalence check
  bool oracle = false;
  bool fx_appendix_guards = true;
  OracleLimits limits = OracleLimits::from_env();
};

enum class Outcome { Skipped, Pass, Mismatch, Error };

struct InstanceResult {
  FamilySpec spec;
  Outcome outcome = Outcome::Skipped;
  std::string detail;  // guard failure, mismatch lines or error text
  bool ct_checked = false;
  bool oracle_checked = false;
};

struct VerifyReport {
  std::size_t points = 0;     // grid points visited
  std::size_t instances = 0;  // points satisfying the guards
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t ct_checked = 0;
  std::size_t oracle_checked = 0;
  std::vector<InstanceResult> failures;  // in grid order

  bool ok() const { return failed == 0; }
};

// Grid points for a family; absent h and d default to 1, other missing
// parameters are an error.
std::vector<FamilySpec> family_grid(FamilyTag tag, const std::vector<GridAxis>& axes);

// closed form vs residue table (vs CT pipeline, vs oracle) on one instance.
InstanceResult verify_instance(const FamilySpec& spec, const VerifyOptions& opts);

VerifyReport verify_family(FamilyTag tag, const std::vector<GridAxis>& axes, const VerifyOptions& opts);
VerifyReport verify_specs(const std::vector<FamilySpec>& specs, const VerifyOptions& opts);

std::string describe_failure(const InstanceResult& r);

}  // namespace frob
