// Acceptance run: one PASS/FAIL line per criterion, backed by the checks of the
// full verification report.

#include <cstdio>
#include <string>
#include <vector>

#include "cubmono/report.hpp"
#include "cubmono/verify.hpp"

using namespace cubmono;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
  double budget_ms;
  /// Budget applies to each check separately instead of to their sum.
  bool per_check = false;
};

const std::vector<Criterion> kCriteria = {
    {1, "W(E6) generation", {"weyl.order", "weyl.invariants", "weyl.census"}, 30000},
    {2, "line geometry at lambda = 0", {"pipeline.lines"}, 2000},
    {3,
     "deck class",
     {"pipeline.omega.invariants", "pipeline.omega.centralizer", "pipeline.omega.matches-fixture"},
     60000},
    {4,
     "fixture suite",
     {"fixtures.load", "fixtures.invariants", "fixtures.omega.invariants", "fixtures.omega.centralizer",
      "fixtures.heisenberg", "fixtures.g.order24", "fixtures.relations", "fixtures.h-cap-g", "fixtures.i.order",
      "fixtures.h-normal", "fixtures.i.centralizer", "fixtures.isomorphism"},
     60000},
    {5,
     "monodromy permutations",
     {"pipeline.monodromy.gamma-minus", "pipeline.monodromy.gamma-plus", "pipeline.monodromy.stability"},
     5000,
     true},
    {6,
     "end-to-end theorem",
     {"pipeline.heisenberg-lift", "pipeline.heisenberg", "pipeline.monodromy.commutes", "pipeline.g.order24",
      "pipeline.relations.variant", "pipeline.relations", "pipeline.h-cap-g", "pipeline.i.order", "pipeline.h-normal",
      "pipeline.i.centralizer", "pipeline.isomorphism", "model.order", "model.census"},
     120000},
    {7,
     "property suites",
     {"weyl.invariants", "fixtures.i.order", "pipeline.i.order", "pipeline.perm-homomorphism", "model.phi-action",
      "model.associativity", "pipeline.monodromy.constant", "pipeline.monodromy.stability"},
     120000},
};

}  // namespace

int main() {
  const auto report = run_verification();
  int failed = 0;
  for (const auto& c : kCriteria) {
    double ms = 0;
    std::string problem;
    for (const auto& id : c.checks) {
      const auto* chk = report.find(id);
      if (!chk) {
        problem = id + " missing";
        break;
      }
      if (chk->status != CheckStatus::Pass) {
        problem = id + " " + to_string(chk->status) + ": " + chk->observed.dump();
        break;
      }
      if (c.per_check && chk->runtime_ms > c.budget_ms) problem = id + " over the runtime budget";
      ms += chk->runtime_ms;
    }
    if (problem.empty() && !c.per_check && ms > c.budget_ms) problem = "over the runtime budget";
    const bool ok = problem.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%zu checks, %.1f ms)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(),
                c.checks.size(), ms, ok ? "" : " - ", problem.c_str());
  }
  if (!report.passed()) std::printf("\n%s", report.to_text().c_str());
  return failed == 0 ? 0 : 1;
}
