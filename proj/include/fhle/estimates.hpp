#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fhle/parallel.hpp"
#include "fhle/params.hpp"

namespace fhle {

enum class PhiModel { One, SmoothBump };

// η(x) = (1+|x|^2)^{-m/2}, η_R(x) = η(x/R) φ(x). The bump is 1 on |x| <= inner·R,
// 0 on |x| >= outer·R, with a quintic smootherstep (C^2) in between.
struct CutoffSpec {
  double m = 1.0;
  double R = 1.0;
  PhiModel phi = PhiModel::One;
  double inner = 1.0;
  double outer = 2.0;

  // NonIntegrable when m <= n/2; InvalidParameter for R < 1 or inner >= outer.
  void validate(int n) const;
  double eta(double radius) const;    // η(|x|)
  double eta_R(double radius) const;  // η(|x|/R) φ(|x|)
  double phi_value(double radius) const;
};

struct RhoOptions {
  double rel_tol = 1e-10;
};

// ρ(x) = ∫ (η(x)-η(y))^2 |x-y|^{-n-2s} dy at |x| = x_radius, 0 < s < 1.
double rho_eval(const CutoffSpec& spec, double x_radius, int n, double s, const RhoOptions& opt = {});
// Same integral with η_R in place of η.
double rho_r_eval(const CutoffSpec& spec, double x_radius, int n, double s, const RhoOptions& opt = {});

// JSON-friendly record of a scaling or bound check. For slope checks max_ratio
// is the spread max/min of value·R^{-slope_expected}; for bound checks it is
// the measured constant.
struct ScalingReport {
  std::string check;
  ProblemParams params;
  double slope_expected = 0.0;
  double slope_measured = 0.0;
  double max_ratio = 0.0;
  std::vector<double> radii;
  std::vector<double> values;
};

// Least-squares slope of log(values) against log(radii).
double loglog_slope(const std::vector<double>& radii, const std::vector<double>& values);

// ∫_{B_R ∩ ∂R^{n+1}_+} |x|^a u_s^{p+1} for the singular solution, in closed form.
double singular_power_integral(const ProblemParams& params, double R);
ScalingReport singular_scaling_check(const ProblemParams& params, const std::vector<double>& radii);

// ∫ u_s^2 ρ_R dx by quadrature against rho_r_eval; m must satisfy
// n/2 < m < n/2 + s(p+1)/2.
ScalingReport finalu2_scaling_check(const ProblemParams& params, const CutoffSpec& spec,
                                    const std::vector<double>& radii, Execution exec = Execution::Parallel);

// ∫_{B_R ∩ R^{n+1}_+} y^w u_e^2 for a model field homogeneous of degree
// -(2s+a)/(p-1); w = 1-2s for s < 1 and 3-2s for 1 < s < 2. The model's
// homogeneity is checked at sample points.
ScalingReport weighted_trace_scaling_check(const ProblemParams& params, const std::vector<double>& radii,
                                           const std::function<double(double, double)>& model);

// max/min of ρ(x)(1+|x|^2)^{n/2+s} over the given radii.
ScalingReport rho_ratio_check(const CutoffSpec& spec, int n, double s, const std::vector<double>& radii,
                              Execution exec = Execution::Parallel);
// Measured C in ρ_R(x) <= C(η(x/R)^2|x|^{-n-2s} + R^{-2s}ρ(x/R)).
ScalingReport rho_r_bound_check(const CutoffSpec& spec, int n, double s, const std::vector<double>& radii,
                                Execution exec = Execution::Parallel);
// Max relative deviation of ρ_R(x) from R^{-2s}ρ(x/R) with φ ≡ 1.
ScalingReport rho_r_scaling_check(const CutoffSpec& spec, int n, double s, const std::vector<double>& radii,
                                  Execution exec = Execution::Parallel);

}  // namespace fhle
