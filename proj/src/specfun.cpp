#include "fhle/specfun.hpp"

#include <cmath>
#include <string>

namespace fhle {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// ζ(k) - 1 for k = 2..40.
constexpr double kZetaMinusOne[] = {
    6.44934066848226406066e-01, 2.02056903159594292152e-01, 8.23232337111381856642e-02,
    3.69277551433699266492e-02, 1.73430619844491401560e-02, 8.34927738192282713203e-03,
    4.07735619794433960111e-03, 2.00839282608221425530e-03, 9.94575127818085255593e-04,
    4.94188604119464528625e-04, 2.46086553308048319906e-04, 1.22713347578489145439e-04,
    6.12481350587048276653e-05, 3.05882363070204932689e-05, 1.52822594086518709648e-05,
    7.63719763789976256827e-06, 3.81729326499984021842e-06, 1.90821271655393897155e-06,
    9.53962033872796212006e-07, 4.76932986787806446824e-07, 2.38450502727733004353e-07,
    1.19219925965311063718e-07, 5.96081890512594800969e-08, 2.98035035146522792822e-08,
    1.49015548283650426809e-08, 7.45071178983543006094e-09, 3.72533402478845728320e-09,
    1.86265972351304914216e-09, 9.31327432419668165620e-10, 4.65662906503378365753e-10,
    2.32831183367650533586e-10, 1.16415501727005193112e-10, 5.82077208790270145017e-11,
    2.91038504449710000529e-11, 1.45519218910419848941e-11, 7.27595983505748179627e-12,
    3.63797954737865086266e-12, 1.81898965030706607072e-12, 9.09494784026388840724e-13,
};

// S(z) = Σ_{k≥2} (-1)^k (ζ(k)-1) z^k / k, so that
//   ln Γ(2+z) = (1-γ) z + S(z),  ln Γ(1+z) = (1-γ) z - log1p(z) + S(z).
// Terms fall like (z/2)^k; |z| ≤ 1/2 needs fewer than 30 of them.
double zeta_series(double z) {
  double sum = 0.0;
  double zk = z;
  constexpr int count = static_cast<int>(sizeof(kZetaMinusOne) / sizeof(double));
  double terms[count];
  for (int i = 0; i < count; ++i) {
    zk *= z;
    const int k = i + 2;
    terms[i] = ((k % 2 == 0) ? 1.0 : -1.0) * kZetaMinusOne[i] * zk / k;
  }
  for (int i = count - 1; i >= 0; --i) sum += terms[i];
  return sum;
}

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[] = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

double lanczos_log_gamma(double x) {
  const double xm1 = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 15; ++i) series += kLanczos[i] / (xm1 + i);
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (xm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) fail(ErrorKind::NonPositiveArgument, "log_gamma requires x > 0, got " + std::to_string(x));
  if (std::isinf(x)) return x;
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x <= 1.5) {
    const double z = x - 1.0;
    return (1.0 - kEulerGamma) * z - std::log1p(z) + zeta_series(z);
  }
  if (x <= 2.5) {
    const double z = x - 2.0;
    return (1.0 - kEulerGamma) * z + zeta_series(z);
  }
  return lanczos_log_gamma(x);
}

namespace detail {
void require_positive_gamma_argument(double x, const char* where) {
  if (!(x > 0.0))
    fail(ErrorKind::PoleOrNegativeArgument,
         std::string("Gamma argument in ") + where + " is not positive: " + std::to_string(x));
}
}  // namespace detail

double kappa_s(double s) {
  if (!(s > 0.0 && s < 1.0)) fail(ErrorKind::OutOfRange, "kappa_s requires 0 < s < 1");
  return std::exp(log_gamma(1.0 - s) - log_gamma(s) - (2.0 * s - 1.0) * std::log(2.0));
}

double lambda_alpha(int n, double s, double alpha) {
  const double num[] = {(n + 2.0 * s + 2.0 * alpha) / 4.0, (n + 2.0 * s - 2.0 * alpha) / 4.0};
  const double den[] = {(n - 2.0 * s - 2.0 * alpha) / 4.0, (n - 2.0 * s + 2.0 * alpha) / 4.0};
  return std::exp(2.0 * s * std::log(2.0) + log_gamma_ratio(num, den));
}

double hardy_gamma(int n, double s) {
  validate_order(n, s);
  if (!(n > 2.0 * s)) fail(ErrorKind::DimensionTooSmall, "hardy_gamma requires n > 2s");
  const double num[] = {(n + 2.0 * s) / 4.0, (n + 2.0 * s) / 4.0};
  const double den[] = {(n - 2.0 * s) / 4.0, (n - 2.0 * s) / 4.0};
  return std::exp(2.0 * s * std::log(2.0) + log_gamma_ratio(num, den));
}

double sobolev_exponent(int n, double s, double a) {
  ProblemParams::validate(n, s, a, 2.0);
  if (n <= 2.0 * s) return kInfiniteExponent;
  return (n + 2.0 * s + 2.0 * a) / (n - 2.0 * s);
}

double sphere_area(int n) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "sphere_area requires n >= 1");
  if (n == 1) return 2.0;
  return 2.0 * std::exp(0.5 * n * std::log(M_PI) - log_gamma(0.5 * n));
}

double fractional_laplacian_constant(int n, double s) {
  if (!(s > 0.0 && s < 1.0)) fail(ErrorKind::UnsupportedOrder, "C(n,s) requires 0 < s < 1");
  return s * std::exp(s * std::log(4.0) + log_gamma(0.5 * n + s) - 0.5 * n * std::log(M_PI) -
                      log_gamma(1.0 - s));
}

double poisson_constant_closed_form(int n, double s) {
  return std::exp(log_gamma(0.5 * n + s) - 0.5 * n * std::log(M_PI) - log_gamma(s));
}

}  // namespace fhle
