#pragma once

#include <string>
#include <vector>

#include "cuntz/report.hpp"

namespace cuntz {

/// The published rank-2 table, transcribed cell by cell in table order.
const std::vector<TableRow>& reference_table();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Regenerates the table and compares it with reference_table(), checks the
/// three worked Xi examples and the composition identities.
std::vector<CheckResult> run_reference_checks(const ClassifyOptions& options = {}, int jobs = 1);

}  // namespace cuntz
