#include "fhle/exponents.hpp"

#include <cmath>
#include <limits>

#include "fhle/specfun.hpp"

namespace fhle {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Subcritical: return "Subcritical";
    case Verdict::Critical: return "Critical";
    case Verdict::SupercriticalTheoremApplies: return "SupercriticalTheoremApplies";
    case Verdict::SupercriticalTheoremSilent: return "SupercriticalTheoremSilent";
    case Verdict::Invalid: return "Invalid";
  }
  return "Invalid";
}

bool is_critical(double p, double p_sobolev) {
  if (!std::isfinite(p_sobolev)) return false;
  return std::abs(p - p_sobolev) <= kCriticalTolerance * std::max(1.0, p_sobolev);
}

namespace {

void require_supercritical(const ProblemParams& params) {
  const double ps = sobolev_exponent(params.n, params.s, params.a);
  if (!std::isfinite(ps)) fail(ErrorKind::NotSupercritical, "n <= 2s: every p is subcritical");
  if (!(params.p > ps) || is_critical(params.p, ps))
    fail(ErrorKind::NotSupercritical, "p=" + std::to_string(params.p) + " does not exceed p_S=" + std::to_string(ps));
}

}  // namespace

double stability_margin(const ProblemParams& params) {
  require_supercritical(params);
  const double n = params.n, s = params.s;
  const double hb = (s + 0.5 * params.a) / (params.p - 1.0);  // β/2
  const double lhs_num[] = {0.5 * n - hb, s + hb};
  const double lhs_den[] = {hb, 0.5 * (n - 2.0 * s) - hb};
  const double rhs_num[] = {(n + 2.0 * s) / 4.0, (n + 2.0 * s) / 4.0};
  const double rhs_den[] = {(n - 2.0 * s) / 4.0, (n - 2.0 * s) / 4.0};
  const double lhs = std::exp(std::log(params.p) + log_gamma_ratio(lhs_num, lhs_den));
  const double rhs = std::exp(log_gamma_ratio(rhs_num, rhs_den));
  return lhs - rhs;
}

double stability_margin_via_lambda(const ProblemParams& params) {
  require_supercritical(params);
  const double scale = std::exp(-2.0 * params.s * std::log(2.0));
  return (params.p * lambda_alpha(params, params.alpha()) - hardy_gamma(params.n, params.s)) * scale;
}

double singular_amplitude(const ProblemParams& params) {
  require_supercritical(params);
  const double lam = lambda_alpha(params, params.alpha());
  return std::exp(std::log(lam) / (params.p - 1.0));
}

std::vector<RootBracket> jl_brackets(int n, double s, double a, double p_max, const JlOptions& opt) {
  ProblemParams::validate(n, s, a, 2.0);
  if (!(n > 2.0 * s)) fail(ErrorKind::DimensionTooSmall, "jl_threshold requires n > 2s");
  if (opt.nodes < 2) fail(ErrorKind::InvalidParameter, "jl scan needs at least two nodes");
  const double ps = sobolev_exponent(n, s, a);
  const double lo = ps * (1.0 + 1e-9);
  if (!(p_max > lo)) fail(ErrorKind::InvalidParameter, "p_max must exceed p_S");

  auto margin = [&](double p) { return stability_margin(ProblemParams::make(n, s, a, p)); };

  const std::size_t count = static_cast<std::size_t>(opt.nodes);
  std::vector<double> ps_grid(count), values(count);
  const double log_ratio = std::log(p_max / lo);
  for (std::size_t k = 0; k < count; ++k)
    ps_grid[k] = (k + 1 == count) ? p_max : lo * std::exp(log_ratio * static_cast<double>(k) / (count - 1));
  parallel_for(count, [&](std::size_t k) { values[k] = margin(ps_grid[k]); }, opt.exec);

  std::vector<std::size_t> changes;
  for (std::size_t k = 0; k + 1 < count; ++k)
    if ((values[k] > 0.0) != (values[k + 1] > 0.0)) changes.push_back(k);

  std::vector<RootBracket> out(changes.size());
  parallel_for(changes.size(), [&](std::size_t i) {
    const std::size_t k = changes[i];
    double a_lo = ps_grid[k], a_hi = ps_grid[k + 1];
    const bool lo_positive = values[k] > 0.0;
    while (a_hi - a_lo > opt.tolerance) {
      const double mid = 0.5 * (a_lo + a_hi);
      if (mid <= a_lo || mid >= a_hi) break;
      if ((margin(mid) > 0.0) == lo_positive) a_lo = mid; else a_hi = mid;
    }
    RootBracket b;
    b.lo = ps_grid[k];
    b.hi = ps_grid[k + 1];
    b.root = 0.5 * (a_lo + a_hi);
    b.residual = margin(b.root);
    out[i] = b;
  }, opt.exec);
  return out;
}

std::optional<RootBracket> jl_threshold(int n, double s, double a, double p_max, const JlOptions& opt) {
  auto all = jl_brackets(n, s, a, p_max, opt);
  if (all.empty()) return std::nullopt;
  return all.front();
}

ClassificationOutcome classify(int n, double s, double a, double p) {
  ClassificationOutcome out;
  out.margin = std::numeric_limits<double>::quiet_NaN();
  out.p_sobolev = std::numeric_limits<double>::quiet_NaN();
  try {
    const ProblemParams params = ProblemParams::make(n, s, a, p);
    out.p_sobolev = sobolev_exponent(n, s, a);
    if (is_critical(p, out.p_sobolev)) {
      out.verdict = Verdict::Critical;
    } else if (p < out.p_sobolev) {
      out.verdict = Verdict::Subcritical;
    } else {
      out.margin = stability_margin(params);
      out.verdict = out.margin > 0.0 ? Verdict::SupercriticalTheoremApplies : Verdict::SupercriticalTheoremSilent;
    }
  } catch (const Error& e) {
    out.verdict = Verdict::Invalid;
    out.reason = e.what();
  }
  return out;
}

}  // namespace fhle
