#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fhle/parallel.hpp"
#include "fhle/params.hpp"

namespace fhle {

enum class Verdict { Subcritical, Critical, SupercriticalTheoremApplies, SupercriticalTheoremSilent, Invalid };

std::string_view to_string(Verdict v);

struct ClassificationOutcome {
  Verdict verdict = Verdict::Invalid;
  double margin = 0.0;  // NaN unless the verdict is supercritical
  double p_sobolev = 0.0;
  std::string reason;  // set when verdict == Invalid
};

struct RootBracket {
  double lo = 0.0;
  double hi = 0.0;
  double root = 0.0;
  double residual = 0.0;
};

// |p - p_S| <= kCriticalTolerance * max(1, p_S) is treated as p = p_S.
inline constexpr double kCriticalTolerance = 1e-12;

bool is_critical(double p, double p_sobolev);

// LHS - RHS of the stability condition
//   p Γ(n/2 - β/2) Γ(s + β/2) / (Γ(β/2) Γ((n-2s)/2 - β/2)) > Γ((n+2s)/4)^2 / Γ((n-2s)/4)^2,
// with β = (2s+a)/(p-1), evaluated directly from the Gamma pattern.
double stability_margin(const ProblemParams& params);

// The same quantity routed through the multiplier: (p λ(α) - Λ_{n,s}) / 2^{2s}.
double stability_margin_via_lambda(const ProblemParams& params);

// A = λ(α)^{1/(p-1)}, the amplitude of u_s(x) = A |x|^{-(2s+a)/(p-1)}.
double singular_amplitude(const ProblemParams& params);

struct JlOptions {
  int nodes = 512;
  double tolerance = 1e-10;
  Execution exec = Execution::Parallel;
};

// Every sign change of the margin on a geometric scan of (p_S(1+1e-9), p_max],
// each refined by bisection. Ordered by increasing p.
std::vector<RootBracket> jl_brackets(int n, double s, double a, double p_max, const JlOptions& opt = {});

// The smallest root of the margin, or nothing when the margin keeps its sign.
std::optional<RootBracket> jl_threshold(int n, double s, double a, double p_max, const JlOptions& opt = {});

// Never throws: invalid tuples come back as Verdict::Invalid with a reason.
ClassificationOutcome classify(int n, double s, double a, double p);
inline ClassificationOutcome classify(const ProblemParams& p) { return classify(p.n, p.s, p.a, p.p); }

}  // namespace fhle
