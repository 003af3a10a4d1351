#include "regshannon/windows.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "regshannon/errors.hpp"
#include "regshannon/special_fn.hpp"

namespace regshannon {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBranchWidth = 1e-8;

void check_m(int m) {
  if (m < 2) throw PreconditionError("window: truncation parameter m must be >= 2");
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < kPi)) {
    throw PreconditionError("window: bandwidth delta must lie in (0, pi)");
  }
}

// sqrt(1 - x^2) with the factorisation that keeps precision near |x| = 1.
double root_one_minus_sq(double x) { return std::sqrt((1.0 - x) * (1.0 + x)); }

// exp(-beta) (I0(x) - 1) for 0 <= x <= beta, no overflow, no cancellation.
double scaled_i0m1(double x, double beta) {
  if (x <= 15.0) return bessel_i0m1(x) * std::exp(-beta);
  return bessel_i0_scaled(x) * std::exp(x - beta) - std::exp(-beta);
}

// Entire-function tails of the FT branches. Both branches of each transform
// are the same power series in u = nu^2 - 1:
//   sinh: (beta/2) sum_k (-beta^2 u / 4)^k / (k! (k+1)!)
//   ckb:  sum_k (-beta^2 u)^k / (2k+1)!  (sinh/sin part only)
double sinh_branch_taylor(double beta, double u) {
  const double z = -0.25 * beta * beta * u;
  // k = 0..3: 1, z/2, z^2/12, z^3/144
  return 0.5 * beta * (1.0 + z * (0.5 + z * (1.0 / 12.0 + z / 144.0)));
}

double ckb_branch_taylor(double beta, double u) {
  const double z = -beta * beta * u;
  // k = 0..3: 1, z/6, z^2/120, z^3/5040
  return 1.0 + z * (1.0 / 6.0 + z * (1.0 / 120.0 + z / 5040.0));
}

// sin(x)/x with the removable point.
double sin_over(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

std::string_view family_name(WindowFamily family) {
  switch (family) {
    case WindowFamily::Gauss: return "gauss";
    case WindowFamily::ModGauss: return "modgauss";
    case WindowFamily::Sinh: return "sinh";
    case WindowFamily::CKB: return "ckb";
  }
  return "unknown";
}

WindowFamily parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "gauss" || lower == "gaussian") return WindowFamily::Gauss;
  if (lower == "modgauss" || lower == "mgauss" || lower == "mod_gauss") return WindowFamily::ModGauss;
  if (lower == "sinh") return WindowFamily::Sinh;
  if (lower == "ckb" || lower == "kb") return WindowFamily::CKB;
  throw PreconditionError("unknown window family '" + std::string(name) + "'");
}

WindowSpec WindowSpec::gauss(int m, double sigma2) {
  check_m(m);
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw PreconditionError("gauss: sigma^2 must be > 0");
  WindowSpec s;
  s.family_ = WindowFamily::Gauss;
  s.m_ = m;
  s.sigma2_ = sigma2;
  s.scale_a_ = -0.5 / sigma2;       // exponent factor
  s.scale_b_ = std::sqrt(sigma2);   // sigma
  return s;
}

WindowSpec WindowSpec::mod_gauss(int m, double sigma2, double lambda) {
  check_m(m);
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw PreconditionError("modgauss: sigma^2 must be > 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw PreconditionError("modgauss: lambda must be >= 0");
  WindowSpec s;
  s.family_ = WindowFamily::ModGauss;
  s.m_ = m;
  s.sigma2_ = sigma2;
  s.lambda_ = lambda;
  s.scale_a_ = -0.5 / sigma2;
  s.scale_b_ = std::sqrt(sigma2);
  return s;
}

WindowSpec WindowSpec::sinh(int m, double beta) {
  check_m(m);
  if (!(beta > 0.0) || !std::isfinite(beta)) throw PreconditionError("sinh: beta must be > 0");
  WindowSpec s;
  s.family_ = WindowFamily::Sinh;
  s.m_ = m;
  s.beta_ = beta;
  s.scale_a_ = -std::expm1(-2.0 * beta);  // 1 - exp(-2 beta)
  // m sqrt(pi) / (sqrt 2 sinh beta) = scale_b exp(-beta)
  s.scale_b_ = m * std::sqrt(kPi / 2.0) * 2.0 / s.scale_a_;
  return s;
}

WindowSpec WindowSpec::ckb(int m, double beta) {
  check_m(m);
  if (!(beta > 0.0) || !std::isfinite(beta)) throw PreconditionError("ckb: beta must be > 0");
  WindowSpec s;
  s.family_ = WindowFamily::CKB;
  s.m_ = m;
  s.beta_ = beta;
  s.scale_a_ = scaled_i0m1(beta, beta);  // exp(-beta) (I0(beta) - 1)
  s.scale_b_ = m * std::sqrt(2.0 / kPi);
  return s;
}

std::string WindowSpec::describe() const {
  std::ostringstream out;
  out.precision(6);
  out << family_name(family_) << "{m=" << m_;
  switch (family_) {
    case WindowFamily::Gauss: out << ", sigma2=" << sigma2_; break;
    case WindowFamily::ModGauss: out << ", sigma2=" << sigma2_ << ", lambda=" << lambda_; break;
    case WindowFamily::Sinh:
    case WindowFamily::CKB: out << ", beta=" << beta_; break;
  }
  out << "}";
  return out.str();
}

double eval_window(const WindowSpec& spec, double t) {
  if (!std::isfinite(t)) throw DomainError("eval_window: t is not finite");
  switch (spec.family()) {
    case WindowFamily::Gauss: return std::exp(spec.scale_a() * t * t);
    case WindowFamily::ModGauss:
      return std::exp(spec.scale_a() * t * t) * std::cos(spec.lambda() * t);
    case WindowFamily::Sinh: {
      const double x = std::fabs(t) / spec.m();
      if (x >= 1.0) return 0.0;
      const double beta = spec.beta();
      const double s = root_one_minus_sq(x);
      // sinh(beta s) / sinh(beta) = exp(beta (s-1)) (1 - exp(-2 beta s)) / (1 - exp(-2 beta))
      return std::exp(beta * (s - 1.0)) * -std::expm1(-2.0 * beta * s) / spec.scale_a();
    }
    case WindowFamily::CKB: {
      const double x = std::fabs(t) / spec.m();
      if (x >= 1.0) return 0.0;
      const double beta = spec.beta();
      return scaled_i0m1(beta * root_one_minus_sq(x), beta) / spec.scale_a();
    }
  }
  return 0.0;
}

double window_ft(const WindowSpec& spec, double tau) {
  if (!std::isfinite(tau)) throw DomainError("window_ft: tau is not finite");
  switch (spec.family()) {
    case WindowFamily::Gauss: {
      const double sigma = spec.scale_b();
      return sigma * std::exp(-0.5 * tau * tau * spec.sigma2());
    }
    case WindowFamily::ModGauss: {
      const double sigma = spec.scale_b();
      const double l = spec.lambda();
      return 0.5 * sigma *
             (std::exp(-0.5 * spec.sigma2() * (tau + l) * (tau + l)) +
              std::exp(-0.5 * spec.sigma2() * (tau - l) * (tau - l)));
    }
    case WindowFamily::Sinh: {
      const double beta = spec.beta();
      const double nu = std::fabs(spec.m() * tau / beta);
      const double u = (nu - 1.0) * (nu + 1.0);
      const double c = spec.scale_b();
      if (std::fabs(u) < kBranchWidth) return c * std::exp(-beta) * sinh_branch_taylor(beta, u);
      if (u < 0.0) {
        const double s = std::sqrt(-u);
        return c * std::exp(beta * (s - 1.0)) * bessel_i1_scaled(beta * s) / s;
      }
      const double s = std::sqrt(u);
      return c * std::exp(-beta) * bessel_j1(beta * s) / s;
    }
    case WindowFamily::CKB: {
      const double beta = spec.beta();
      const double nu = std::fabs(spec.m() * tau / beta);
      const double u = (nu - 1.0) * (nu + 1.0);
      const double c = spec.scale_b() / spec.scale_a();  // carries exp(+beta)
      const double e = std::exp(-beta);
      const double osc = sin_over(beta * nu) * e;
      if (std::fabs(u) < kBranchWidth) return c * (ckb_branch_taylor(beta, u) * e - osc);
      if (u < 0.0) {
        const double x = beta * std::sqrt(-u);
        const double hyp = x < 1.0 ? std::sinh(x) / x * e
                                   : std::exp(x - beta) * -std::expm1(-2.0 * x) / (2.0 * x);
        return c * (hyp - osc);
      }
      return c * (sin_over(beta * std::sqrt(u)) * e - osc);
    }
  }
  return 0.0;
}

WindowSpec optimal_spec(WindowFamily family, int m, double delta, double lambda) {
  check_m(m);
  check_delta(delta);
  switch (family) {
    case WindowFamily::Gauss: return WindowSpec::gauss(m, m / (kPi - delta));
    case WindowFamily::ModGauss:
      if (!(lambda >= 0.0 && lambda < kPi - delta)) {
        throw PreconditionError("modgauss: hypothesis 0 <= lambda < pi - delta violated");
      }
      return WindowSpec::mod_gauss(m, m / (kPi - lambda - delta), lambda);
    case WindowFamily::Sinh: return WindowSpec::sinh(m, m * (kPi - delta));
    case WindowFamily::CKB:
      if (delta > (m - 1) * kPi / m * (1.0 + 1e-15)) {
        throw PreconditionError("ckb: hypothesis delta <= (m-1) pi / m violated");
      }
      return WindowSpec::ckb(m, m * (kPi - delta));
  }
  throw PreconditionError("optimal_spec: unknown family");
}

WindowSpec alpha_spec(WindowFamily family, int m, double delta, double alpha, double lambda) {
  check_m(m);
  check_delta(delta);
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw PreconditionError("alpha must be > 0");
  switch (family) {
    case WindowFamily::Gauss: return WindowSpec::gauss(m, alpha * alpha * m / (kPi - delta));
    case WindowFamily::ModGauss:
      if (!(lambda >= 0.0 && lambda < kPi - delta)) {
        throw PreconditionError("modgauss: hypothesis 0 <= lambda < pi - delta violated");
      }
      return WindowSpec::mod_gauss(m, alpha * alpha * m / (kPi - lambda - delta), lambda);
    case WindowFamily::Sinh: return WindowSpec::sinh(m, alpha * m * (kPi - delta));
    case WindowFamily::CKB:
      if (alpha < 1.0 / kPi) throw PreconditionError("ckb: hypothesis alpha >= 1/pi violated");
      return WindowSpec::ckb(m, alpha * m * (kPi - delta));
  }
  throw PreconditionError("alpha_spec: unknown family");
}

}  // namespace regshannon
