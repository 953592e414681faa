#pragma once

// The verification suite: fixture checks on the printed maps, checks on the
// abstract semidirect model, and the end-to-end pipeline from geometry to the
// monodromy group.

#include <string>

#include "cubmono/monodromy.hpp"
#include "cubmono/numeric.hpp"
#include "cubmono/report.hpp"

namespace cubmono {

enum class Scope { Fixtures, Pipeline, All };

/// Parses "fixtures", "pipeline" or "all". Throws InvalidInput.
Scope scope_from_string(const std::string& s);
std::string to_string(Scope s);

struct VerifyOptions {
  Scope scope = Scope::All;
  TrackingConfig tracking{};
  /// Incidence tolerance for the line geometry.
  double tol = 1e-8;
  Precision precision = Precision::Double;
  /// Retry the pipeline in extended precision on numerical ambiguity.
  bool escalate = true;
  /// Directory containing fixtures/; empty selects the configured default.
  std::string data_dir;
};

/// Runs the checks of the selected scope. Failures are recorded in the report
/// rather than thrown. If the pipeline stays numerically ambiguous at every
/// precision tried, the report carries a failed check and the ambiguity flag.
VerificationReport run_verification(const VerifyOptions& opts = {});

}  // namespace cubmono
