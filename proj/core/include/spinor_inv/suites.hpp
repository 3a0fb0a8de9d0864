#pragma once

/// \file
/// Property suites shared by the `check` command and the acceptance binary.
/// Every check carries its measured value, its tolerance and the origin of
/// the expected value.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinv {

/// Printed: the expectation is a transcribed closed-form value or identity.
/// Reconciled: a corrected variant of a printed claim. Derived: an
/// independently computed and frozen value or a structural property.
enum class CheckOrigin { Printed, Reconciled, Derived };

std::string_view check_origin_name(CheckOrigin o);

struct CheckResult {
  std::string suite;
  std::string name;  // slash-separated, e.g. "2p/epr2/I1"
  CheckOrigin origin = CheckOrigin::Derived;
  bool passed = false;
  double value = 0.0;      // measured residual, magnitude or count
  double tolerance = 0.0;  // 0 for exact and verdict checks
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Replaces the tolerance of every residual check. Exact checks (ranks,
  /// verdicts, counts) are unaffected.
  std::optional<double> tol;
};

/// "algebra", "invariance", "examples", "reductions", "dependencies",
/// "dynamics".
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

/// Runs every suite in suite_names() order.
std::vector<SuiteReport> run_all_suites(const SuiteOptions& opts = {});

}  // namespace spinv
