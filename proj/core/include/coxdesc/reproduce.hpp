#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coxdesc/check.hpp"
#include "coxdesc/enumeration.hpp"

namespace coxdesc {

/// Result of one reproduction suite: every statement checked plus free-form
/// lines worth printing (decompositions, matrices, witnesses).
struct SuiteReport {
  std::string target;
  std::vector<CheckResult> checks;
  std::vector<std::string> details;

  bool ok() const { return all_ok(checks); }
  std::size_t passed() const;
};

/// table1, example_rank2, example_b3, classical_products, base_changes,
/// prop42, main_theorem.
const std::vector<std::string>& reproduce_targets();

/// Runs one suite; throws InvalidArgument for an unknown target.
SuiteReport reproduce(std::string_view target, const EnumerationLimits& limits = {});

}  // namespace coxdesc
