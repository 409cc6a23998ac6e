#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mdiag/random_expr.hpp"

namespace mdiag {

enum class CheckStatus { Pass, Fail, Skipped };

const char* status_name(CheckStatus status);

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  /// Nonzero residue or tensor component; always set on failure.
  std::string witness;
  double seconds = 0;
  std::vector<std::pair<std::string, std::string>> parameters;
};

struct CheckConfig {
  std::uint64_t seed = kDefaultSeed;
  /// Random cases per property family.
  int cases = 500;
  /// Random involution models for the double-cover oracle.
  int random_models = 20;
};

struct CheckInfo {
  std::string name;
  std::string summary;
  std::function<CheckReport(const CheckConfig&)> run;
};

/// Top-level checks in report order.
const std::vector<CheckInfo>& check_registry();

/// Registry names plus the per-model sub-checks "ogrady-threshold:<model>".
std::vector<std::string> check_names();

/// Runs one registered check, or "ogrady-threshold:<builtin model or file>".
/// Throws UnknownCheckError. Library errors raised inside a check turn into a
/// failing report.
CheckReport run_check(const std::string& name, const CheckConfig& config = {});

/// Expands "all" to the registry. Reports come back in the order of `names`
/// whether or not they ran concurrently.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, const CheckConfig& config = {},
                                    bool parallel = false);

}  // namespace mdiag
