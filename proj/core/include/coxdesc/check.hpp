#pragma once

#include <string>
#include <vector>

namespace coxdesc {

/// Outcome of one verified statement. `anchor` names the statement,
/// `expected` and `actual` are filled in on failure (and often on success).
struct CheckResult {
  std::string anchor;
  bool ok = false;
  std::string expected;
  std::string actual;
};

inline bool all_ok(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

}  // namespace coxdesc
