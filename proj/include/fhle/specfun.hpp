#pragma once

#include <limits>

#include "fhle/params.hpp"

namespace fhle {

// ln Γ(x) for x > 0. Relative error below 1e-13 away from the zeros at 1 and 2,
// absolute error below 1e-16 near them.
double log_gamma(double x);

// Sum of signed log-Gamma terms, exponentiated once: Π Γ(num_i) / Π Γ(den_j).
// Every argument must be strictly positive.
template <std::size_t N, std::size_t M>
double log_gamma_ratio(const double (&num)[N], const double (&den)[M]);

// κ_s = Γ(1-s) / (2^{2s-1} Γ(s)), 0 < s < 1.
double kappa_s(double s);

// The multiplier λ(α) = 2^{2s} Γ((n+2s+2α)/4) Γ((n+2s-2α)/4) / (Γ((n-2s-2α)/4) Γ((n-2s+2α)/4)).
double lambda_alpha(int n, double s, double alpha);
inline double lambda_alpha(const ProblemParams& p, double alpha) { return lambda_alpha(p.n, p.s, alpha); }

// Λ_{n,s} = 2^{2s} Γ((n+2s)/4)^2 / Γ((n-2s)/4)^2, n > 2s.
double hardy_gamma(int n, double s);

// p_S(n, a); +infinity when n <= 2s. IEEE infinity compares above every finite p.
double sobolev_exponent(int n, double s, double a);
inline constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

// |S^{n-1}| = 2 π^{n/2} / Γ(n/2), the surface measure of the unit sphere in R^n
// (|S^0| = 2 counts two points).
double sphere_area(int n);

// Normalization of the singular-integral form of (-Δ)^s:
// C(n,s) = s 4^s Γ(n/2+s) / (π^{n/2} Γ(1-s)), 0 < s < 1.
double fractional_laplacian_constant(int n, double s);

// p_{n,s} = Γ((n+2s)/2) / (π^{n/2} Γ(s)), closed form of the Poisson normalization.
double poisson_constant_closed_form(int n, double s);

namespace detail {
void require_positive_gamma_argument(double x, const char* where);
}

template <std::size_t N, std::size_t M>
double log_gamma_ratio(const double (&num)[N], const double (&den)[M]) {
  double acc = 0.0;
  for (double x : num) {
    detail::require_positive_gamma_argument(x, "numerator");
    acc += log_gamma(x);
  }
  for (double x : den) {
    detail::require_positive_gamma_argument(x, "denominator");
    acc -= log_gamma(x);
  }
  return acc;
}

}  // namespace fhle
