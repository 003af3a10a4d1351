#include "regshannon/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "regshannon/compensated_sum.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/quadrature.hpp"

namespace regshannon {
namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * kPi);
constexpr int kOmegaGrid = 2048;
constexpr double kOmegaTol = 1e-6;

QuadratureOptions tight() {
  QuadratureOptions o;
  o.abs_tol = 1e-17;
  o.rel_tol = 1e-13;
  return o;
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < kPi)) throw DomainError("bandwidth delta must lie in (0, pi)");
}

// int_a^b phi_hat
double ft_integral(const WindowSpec& spec, double a, double b) {
  return integrate([&](double tau) { return window_ft(spec, tau); }, a, b, tight()).value;
}

template <class F>
double golden_max(F f, double lo, double hi, double tol) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + g * (hi - lo); f2 = f(x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - g * (hi - lo); f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

std::string_view method_name(BoundMethod method) {
  return method == BoundMethod::Numeric ? "numeric" : "closed_form";
}

double delta_function(const WindowSpec& spec, double omega) {
  // phi_hat is even: int_{w-pi}^{w+pi} = int_0^{pi+|w|} + int_0^{pi-|w|}
  const double w = std::fabs(omega);
  if (w > kPi) throw DomainError("delta_function: |omega| must be <= pi");
  CompensatedSum s;
  s += ft_integral(spec, 0.0, kPi - w);
  s += ft_integral(spec, 0.0, kPi + w);
  return 1.0 - kInvSqrt2Pi * s.value();
}

double e1_numeric(const WindowSpec& spec, double delta) {
  check_delta(delta);
  const int n = kOmegaGrid;
  const double h = delta / n;
  // cumulative integrals on tau_j = pi - delta + j h, j = 0..2n
  std::vector<double> cum(2 * n + 1);
  const double base = ft_integral(spec, 0.0, kPi - delta);
  CompensatedSum run;
  cum[0] = 0.0;
  for (int j = 1; j <= 2 * n; ++j) {
    run += ft_integral(spec, kPi - delta + (j - 1) * h, kPi - delta + j * h);
    cum[j] = run.value();
  }
  auto grid_value = [&](int i) {
    CompensatedSum s;
    s += 2.0 * base;
    s += cum[n + i];
    s += cum[n - i];
    return std::fabs(1.0 - kInvSqrt2Pi * s.value());
  };
  int best = 0;
  double best_val = grid_value(0);
  for (int i = 1; i <= n; ++i) {
    const double v = grid_value(i);
    if (v > best_val) { best_val = v; best = i; }
  }
  const double lo = std::max(0.0, (best - 1) * h);
  const double hi = std::min(delta, (best + 1) * h);
  const double refined =
      golden_max([&](double w) { return std::fabs(delta_function(spec, w)); }, lo, hi, kOmegaTol);
  return std::max(best_val, refined);
}

double e2_numeric(const WindowSpec& spec) {
  const int m = spec.m();
  switch (spec.family()) {
    case WindowFamily::Sinh:
    case WindowFamily::CKB: return 0.0;
    case WindowFamily::Gauss:
    case WindowFamily::ModGauss: break;
  }
  const double phi_m = eval_window(spec, m);
  // envelope exp(-t^2 / sigma^2) falls by 1e-18 at t_end
  const double t_end = std::sqrt(double(m) * m + spec.sigma2() * std::log(1e18));
  QuadratureOptions o;
  o.abs_tol = 1e-300;
  o.rel_tol = 1e-12;
  const double tail = integrate(
      [&](double t) {
        const double p = eval_window(spec, t);
        return p * p;
      },
      m, t_end, o).value;
  return std::sqrt(2.0) / (kPi * m) * std::sqrt(phi_m * phi_m + tail);
}

std::string bound_hypothesis_violation(WindowFamily family, int m, double delta, double lambda) {
  if (m < 2) return "m must be >= 2";
  if (!(delta > 0.0 && delta < kPi)) return "delta must lie in (0, pi)";
  if (family == WindowFamily::ModGauss && !(lambda >= 0.0 && lambda < kPi - delta)) {
    return "modgauss bound needs 0 <= lambda < pi - delta";
  }
  if (family == WindowFamily::CKB && delta > (m - 1) * kPi / m * (1.0 + 1e-15)) {
    return "ckb bound needs delta <= (m-1) pi / m";
  }
  return {};
}

double bound_closed_form(WindowFamily family, int m, double delta, double lambda) {
  if (auto why = bound_hypothesis_violation(family, m, delta, lambda); !why.empty()) {
    throw PreconditionError("bound_closed_form: " + why);
  }
  const double gap = kPi - delta;
  switch (family) {
    case WindowFamily::Gauss:
      return 2.0 * std::sqrt(2.0) / std::sqrt(kPi * m * gap) * std::exp(-0.5 * m * gap);
    case WindowFamily::ModGauss: {
      const double g = gap - lambda;
      return 2.0 * std::sqrt(2.0) / std::sqrt(kPi * m * g) * std::exp(-0.5 * m * g);
    }
    case WindowFamily::Sinh: return std::exp(-m * gap);
    case WindowFamily::CKB: {
      const double x = m * gap;
      return (7.0 / 8.0 * x + 7.0 / kPi * x * x) * std::exp(-x);
    }
  }
  throw PreconditionError("bound_closed_form: unknown family");
}

BoundBreakdown numeric_bound(const WindowSpec& spec, double delta, double l2_norm) {
  BoundBreakdown b;
  b.e1 = e1_numeric(spec, delta);
  b.e2 = e2_numeric(spec);
  b.total = (b.e1 + b.e2) * l2_norm;
  b.method = BoundMethod::Numeric;
  return b;
}

BoundBreakdown closed_form_bound(WindowFamily family, int m, double delta, double lambda,
                                 double l2_norm) {
  // closed forms only give the total, so e1/e2 stay 0 here
  BoundBreakdown b;
  b.total = bound_closed_form(family, m, delta, lambda) * l2_norm;
  b.method = BoundMethod::ClosedForm;
  return b;
}

}  // namespace regshannon
