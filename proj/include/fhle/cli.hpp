#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fhle/params.hpp"

namespace fhle::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kIoFailure = 3 };

enum class SweepAxis { P, N, S, A };
enum class Spacing { Linear, Geometric };

struct SweepConfig {
  SweepAxis axis = SweepAxis::P;
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;
  Spacing spacing = Spacing::Linear;
  int n = 3;  // the three parameters not on the axis
  double s = 0.5;
  double a = 0.0;
  double p = 2.0;
  std::string output_path = "-";

  void validate() const;
  std::vector<double> nodes() const;
  ProblemParams at(double axis_value) const;
};

struct SweepRow {
  double axis_value = 0.0;
  double p_sobolev = 0.0;
  double margin = 0.0;
  std::string verdict;
  double lambda_alpha = 0.0;
  double amplitude = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepConfig& cfg);
std::string sweep_csv(const std::vector<SweepRow>& rows);

// Entry point of the fhle binary. Writes results to out and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fhle::cli
