#pragma once

#include <string>
#include <vector>

#include "mdiag/checks.hpp"

namespace mdiag {

enum class ReportFormat { Human, Json };

/// Json output leaves out timings so identical runs give identical bytes.
std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format);

/// 0 when nothing failed, 1 otherwise.
int exit_status(const std::vector<CheckReport>& reports);

}  // namespace mdiag
