#include "mdiag/report.hpp"

#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace mdiag {

std::string emit_report(const std::vector<CheckReport>& reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json doc;
    doc["checks"] = nlohmann::ordered_json::array();
    int counts[3] = {0, 0, 0};
    for (const auto& r : reports) {
      nlohmann::ordered_json c;
      c["name"] = r.name;
      c["status"] = status_name(r.status);
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.parameters) params[k] = v;
      c["parameters"] = params;
      if (!r.witness.empty()) c["witness"] = r.witness;
      doc["checks"].push_back(c);
      ++counts[static_cast<int>(r.status)];
    }
    doc["summary"] = {{"total", reports.size()}, {"passed", counts[0]}, {"failed", counts[1]}, {"skipped", counts[2]}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  int failed = 0;
  for (const auto& r : reports) {
    std::string tag = r.status == CheckStatus::Pass ? "PASS" : r.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    out << tag << "  " << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::right
        << std::fixed << std::setprecision(3) << r.seconds << " s\n";
    if (!r.witness.empty()) out << "      " << r.witness << "\n";
    failed += r.status == CheckStatus::Fail;
  }
  out << reports.size() << " checks, " << failed << " failed\n";
  return out.str();
}

int exit_status(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == CheckStatus::Fail; })
             ? 1
             : 0;
}

}  // namespace mdiag
