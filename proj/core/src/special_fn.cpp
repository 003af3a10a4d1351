#include "regshannon/special_fn.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "regshannon/errors.hpp"
#include "regshannon/quadrature.hpp"

namespace regshannon {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw DomainError(std::string(name) + ": argument is not finite");
}

void require_nonnegative(double x, const char* name) {
  require_finite(x, name);
  if (x < 0.0) throw DomainError(std::string(name) + ": argument must be >= 0");
}

constexpr double kBesselSeriesLimit = 15.0;

// sum_{k>=k0} (x^2/4)^k / (k! (k+nu)!) for nu in {0, 1}. All terms positive.
double modified_bessel_series(double x, int nu, int first_term) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double k_fact = 1.0;
  for (int k = 1; k <= nu; ++k) k_fact *= k;  // (0 + nu)!
  term = 1.0 / k_fact;
  double sum = first_term == 0 ? term : 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
    if (k >= first_term) sum += term;
    if (term < kEps * 0.25 * sum) break;
  }
  return sum;
}

// Hankel expansion of exp(-x) I_nu(x) sqrt(2 pi x) for large x.
double modified_bessel_asymptotic_scaled(double x, int nu) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * -(mu - odd * odd) / (8.0 * k * x);
    if (std::fabs(next) >= std::fabs(term)) break;  // asymptotic series turned
    term = next;
    sum += term;
    if (std::fabs(term) < kEps * 0.1 * std::fabs(sum)) break;
  }
  return sum / std::sqrt(2.0 * kPi * x);
}

}  // namespace

double sin_pi(double t) {
  require_finite(t, "sin_pi");
  const double n = std::nearbyint(t);
  const double r = t - n;  // exact, |r| <= 1/2
  if (r == 0.0) return 0.0;
  const double s = std::sin(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double sinc(double t) {
  require_finite(t, "sinc");
  if (t == 0.0) return 1.0;
  return sin_pi(t) / (kPi * t);
}

double bessel_i0(double x) {
  require_nonnegative(x, "bessel_i0");
  if (x <= kBesselSeriesLimit) return modified_bessel_series(x, 0, 0);
  return std::exp(x) * modified_bessel_asymptotic_scaled(x, 0);
}

double bessel_i0_scaled(double x) {
  require_nonnegative(x, "bessel_i0_scaled");
  if (x <= kBesselSeriesLimit) return std::exp(-x) * modified_bessel_series(x, 0, 0);
  return modified_bessel_asymptotic_scaled(x, 0);
}

double bessel_i0m1(double x) {
  require_nonnegative(x, "bessel_i0m1");
  if (x <= kBesselSeriesLimit) return modified_bessel_series(x, 0, 1);
  return bessel_i0(x) - 1.0;
}

double bessel_i1(double x) {
  require_nonnegative(x, "bessel_i1");
  if (x <= kBesselSeriesLimit) return 0.5 * x * modified_bessel_series(x, 1, 0);
  return std::exp(x) * modified_bessel_asymptotic_scaled(x, 1);
}

double bessel_i1_scaled(double x) {
  require_nonnegative(x, "bessel_i1_scaled");
  if (x <= kBesselSeriesLimit) return std::exp(-x) * 0.5 * x * modified_bessel_series(x, 1, 0);
  return modified_bessel_asymptotic_scaled(x, 1);
}

double bessel_j1(double x) {
  require_nonnegative(x, "bessel_j1");
  if (x <= 12.0) {
    // Alternating series; the largest term near x = 12 is ~1e4, so the sum
    // is carried in long double.
    const long double q = -0.25L * static_cast<long double>(x) * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 200; ++k) {
      term *= q / (static_cast<long double>(k) * (k + 1));
      sum += term;
      if (std::fabs(term) < 1e-21L) break;
    }
    return static_cast<double>(0.5L * x * sum);
  }
  if (x < 17.0) {
    // J1(x) = (1/2pi) int_0^{2pi} cos(s - x sin s) ds; the trapezoidal rule
    // on a periodic analytic integrand has aliasing error ~J_N(x).
    constexpr int kNodes = 96;
    double sum = 0.0;
    for (int j = 0; j < kNodes; ++j) {
      const double s = 2.0 * kPi * j / kNodes;
      sum += std::cos(s - x * std::sin(s));
    }
    return sum / kNodes;
  }
  // Hankel: J1 = sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - 3pi/4.
  const double mu = 4.0;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 80; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (8.0 * k * x);
    if (std::fabs(next) > std::fabs(last)) break;
    term = next;
    last = std::fabs(term);
    // a_k / x^k contributes to Q for odd k, to P for even k, with signs
    // (-1)^{k/2} resp. (-1)^{(k-1)/2}.
    const int r = k % 4;
    if (r == 1) q += term;
    else if (r == 2) p -= term;
    else if (r == 3) q -= term;
    else p += term;
    if (last < 1e-17) break;
  }
  const double chi = x - 0.75 * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double struve_l0(double x) {
  require_nonnegative(x, "struve_l0");
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 1000; ++k) {
    const double odd = 2.0 * k + 1.0;
    term *= x2 / (odd * odd);
    sum += term;
    if (term < 1e-16 * sum) break;
  }
  return 2.0 * x / kPi * sum;
}

double bessel_i0_minus_struve_l0(double x) {
  require_nonnegative(x, "bessel_i0_minus_struve_l0");
  QuadratureOptions opts;
  opts.abs_tol = 1e-300;
  opts.rel_tol = 1e-15;
  const auto r = integrate([x](double s) { return std::exp(-x * std::cos(s)); }, 0.0, 0.5 * kPi,
                           opts);
  return 2.0 / kPi * r.value;
}

double sine_integral(double x) {
  require_nonnegative(x, "sine_integral");
  if (x <= 6.0) {
    const long double x2 = static_cast<long double>(x) * x;
    long double term = x;  // x^{2k+1} / (2k+1)!
    long double sum = term;
    for (int k = 1; k < 100; ++k) {
      term *= -x2 / ((2.0L * k) * (2.0L * k + 1.0L));
      const long double contrib = term / (2.0L * k + 1.0L);
      sum += contrib;
      if (std::fabs(contrib) < 1e-21L) break;
    }
    return static_cast<double>(sum);
  }
  // Continued fraction for E1(ix) (modified Lentz); Si = pi/2 + Im(h).
  using cd = std::complex<double>;
  constexpr double kTiny = 1e-300;
  cd b(1.0, x);
  cd c(1.0 / kTiny, 0.0);
  cd d = 1.0 / b;
  cd h = d;
  for (int i = 2; i < 1000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cd del = c * d;
    h *= del;
    if (std::fabs(del.real() - 1.0) + std::fabs(del.imag()) < 1e-16) break;
  }
  h *= cd(std::cos(x), -std::sin(x));
  return 0.5 * kPi + h.imag();
}

}  // namespace regshannon
