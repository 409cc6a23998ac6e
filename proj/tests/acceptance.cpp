// One line per acceptance criterion: status, check, wall time against its limit.
#include <cstdio>
#include <string>
#include <vector>

#include "mdiag/checks.hpp"

using namespace mdiag;

namespace {

struct Criterion {
  int number;
  std::string check;
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "gamma-pushforward", 5},        {2, "gamma1-factorization", 1}, {3, "bv-gamma3", 1},
      {4, "yin-normal-form", 60},         {5, "kimura-vanishing", 10},    {6, "ogrady-thresholds", 120},
      {7, "double-cover-identities", 10}, {8, "double-cover-replay", 30}, {9, "sigma-claims", 30},
      {10, "binomial-lemma", 1},          {11, "core-properties", 60},
  };
  CheckConfig config;
  int failed = 0;
  for (const auto& c : criteria) {
    const CheckReport r = run_check(c.check, config);
    const bool in_time = r.seconds < c.limit_seconds;
    const bool ok = r.status == CheckStatus::Pass && in_time;
    failed += !ok;
    std::printf("%s  %2d  %-24s %8.3f s  (limit %g s)%s\n", ok ? "PASS" : "FAIL", c.number, c.check.c_str(), r.seconds,
                c.limit_seconds, in_time ? "" : "  over time limit");
    if (!r.witness.empty()) std::printf("          %s\n", r.witness.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
