#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fhle/parallel.hpp"

namespace fhle {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool passed() const;
};

enum class Suite { Constants, Kernels, Extension, Energy, Estimates, All };

std::optional<Suite> parse_suite(std::string_view name);

struct VerifyOptions {
  // Multiplies every tolerance; values below 1 tighten the suite.
  double tolerance_scale = 1.0;
  Execution exec = Execution::Parallel;
};

SuiteReport verify_constants(const VerifyOptions& opt = {});
SuiteReport verify_kernels(const VerifyOptions& opt = {});
SuiteReport verify_extension(const VerifyOptions& opt = {});
SuiteReport verify_energy(const VerifyOptions& opt = {});
SuiteReport verify_estimates(const VerifyOptions& opt = {});

std::vector<SuiteReport> run_suite(Suite suite, const VerifyOptions& opt = {});

// "name PASS (measured=..., expected=..., tol=...)" lines plus a suite summary.
std::string format_report(const SuiteReport& report);

}  // namespace fhle
