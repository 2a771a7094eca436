#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fhle/parallel.hpp"
#include "fhle/params.hpp"

namespace fhle {

// Parameters of the folded spherical kernel
//   K_α(c) = ∫_0^1 (t^{n-1-α} + t^{2s-1+α}) / (t^2 + 1 - 2tc)^{(n+2s)/2} dt.
struct KernelSpec {
  double alpha = 0.0;
  int n = 1;
  double s = 0.5;
  double cutoff_delta = 1e-6;
};

double kernel_K(const KernelSpec& spec, double c);

// Same kernel with the angle cosine given through its complement 1 - c, which
// keeps full relative precision near the diagonal. No cutoff check.
double kernel_K_complement(const KernelSpec& spec, double one_minus_c);

struct KernelQuadrature {
  double rel_tol = 1e-10;
  Execution exec = Execution::Parallel;
};

// The unnormalized folded constant
//   A(γ) = ∫_{S^{n-1}} ∫_0^1 [(1-t^{-γ}) t^{n-1} + (1-t^{γ}) t^{2s-1}] / (t^2+1-2tc)^{(n+2s)/2} dt dσ,
// defined for 0 < γ < n-2s. Multiplying by C(n,s) gives λ((n-2s)/2 - γ).
double folded_constant(int n, double s, double gamma, const KernelQuadrature& q = {});

// A_{n,s,a}: the folded constant at γ = (2s+a)/(p-1); requires p > p_S.
double a_constant(const ProblemParams& params, const KernelQuadrature& q = {});

// Integral form of the Hardy constant: the folded constant at γ = (n-2s)/2.
double hardy_integral(int n, double s, const KernelQuadrature& q = {});

// hardy_integral(n,s) / hardy_gamma(n,s), memoized per (n, s).
double normalization_ratio(int n, double s);

// A zonal function on S^{n-1}, stored at Gauss-Jacobi nodes in the polar
// cosine. Weights include |S^{n-2}| and sum to |S^{n-1}|. For n = 1 the
// sphere is the two points {-1, +1}.
struct SphericalProfile {
  int n = 1;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> values;

  static SphericalProfile sample(int n, int count, const std::function<double(double)>& psi);
  static SphericalProfile constant(int n, int count, double value);

  // Barycentric interpolation of the stored values.
  double operator()(double c) const;
  double total_weight() const;
};

struct ResidualOptions {
  double cutoff_delta = 1e-6;
  double kernel_step = 1.0 / 32.0;  // tanh-sinh step for the σ integral
  int azimuth_nodes = 16;
  std::optional<double> a_constant;  // reuse a precomputed A_{n,s,a}
  Execution exec = Execution::Parallel;
};

// max_i |ψ_i A + ∫ K_β(<θ_i,σ>)(ψ_i - ψ(σ)) dσ - |ψ_i|^{p-1} ψ_i|, with the
// σ integral truncated at 1 - <θ,σ> >= cutoff_delta.
double homogeneous_residual(const SphericalProfile& profile, const ProblemParams& params,
                            const ResidualOptions& opt = {});

}  // namespace fhle
