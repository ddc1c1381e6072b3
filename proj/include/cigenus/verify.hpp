#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cigenus {

struct VerifyOptions {
  int max_n = 6;           // largest ambient projective dimension for surface grids
  long long max_degree = 4;  // largest generator/surface degree in grids
  long long max_level = 20;  // largest graded level in Hilbert grids
};

/// One named check. Asserted checks fail the run; audits record how the
/// written-down formulas compare against the oracles and never fail it.
struct VerifyCheck {
  std::string name;
  bool is_audit = false;
  bool passed = true;
  std::vector<std::string> lines;
};

/// suite is one of: hilbert, identities, consistency, optimizer, all.
std::vector<VerifyCheck> run_verify_suite(const std::string& suite, const VerifyOptions& options);

void print_verify_checks(const std::vector<VerifyCheck>& checks, std::ostream& out);

/// True when any asserted (non-audit) check failed.
bool verify_has_failure(const std::vector<VerifyCheck>& checks);

}  // namespace cigenus
