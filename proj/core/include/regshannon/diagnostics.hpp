#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regshannon/windows.hpp"

namespace regshannon {

/// nu_1(omega) = (m / beta) (omega + pi)
double nu1(double omega, int m, double beta);

/// (beta / (m sqrt(2 pi))) phi_hat(beta nu / m), the integrand of the split
/// after the substitution tau = beta nu / m.
double split_kernel(const WindowSpec& spec, double nu);

/// Delta(omega) = Delta_1 - Delta_2(omega) with
///   Delta_1          = 1 - 2 int_0^{1/alpha} kernel
///   Delta_2(omega)   = (int_{1/alpha}^{nu_1(omega)} + int_{1/alpha}^{nu_1(-omega)}) kernel
/// and 1/alpha = m (pi - delta) / beta.
struct DeltaSplit {
  double delta1 = 0.0;    // signed Delta_1
  double d1 = 0.0;        // |Delta_1|
  double d2 = 0.0;        // max over [-delta, delta] of |Delta_2|
  double omega_d2 = 0.0;  // where d2 is attained (>= 0)
  double e1 = 0.0;        // max over [-delta, delta] of |Delta_1 - Delta_2|
};

double split_delta1(const WindowSpec& spec, double delta);
double split_delta2(const WindowSpec& spec, double delta, double omega);

/// Split for any Sinh or CKB spec; alpha is implied by beta.
DeltaSplit delta_split(const WindowSpec& spec, double delta);

DeltaSplit delta_sinh_split(int m, double delta, double alpha);
/// Requires alpha >= 1/pi and delta <= (m-1) pi / m.
DeltaSplit delta_ckb_split(int m, double delta, double alpha);

/// 2 exp(-beta) / (1 + exp(-beta)): Delta_1 for sinh at alpha = 1.
double sinh_delta1_closed(double beta);
/// (I0 - L0 - 1 + (2/pi) Si)(beta) / (I0(beta) - 1): Delta_1 for ckb at alpha = 1.
double ckb_delta1_closed(double beta);
/// I0(beta) - L0(beta) - 1 + (2/pi) Si(beta)
double ckb_delta1_numerator(double beta);

/// Negated least-squares slope of ln(series) against m. Needs >= 4 points
/// and strictly positive values (DomainError otherwise).
double decay_slope(std::span<const int> m_values, std::span<const double> series);

struct DiagnosticSeries {
  WindowFamily family = WindowFamily::Sinh;
  double alpha = 1.0;
  double delta = 0.0;
  std::vector<int> m_values;
  std::vector<double> d1;
  std::vector<double> d2;
  std::optional<double> slope_d1;
  std::optional<double> slope_d2;
  std::vector<std::string> notes;  // points that were skipped and why
};

/// Values below this are left out of slope fits.
inline constexpr double kSlopeFloor = 1e-15;

/// Evaluates the split for every m (parallel over m) and fits the slopes.
/// Points whose parameters violate the family's hypotheses are recorded in
/// notes and skipped.
DiagnosticSeries build_series(WindowFamily family, double alpha, double delta,
                              std::span<const int> m_values, unsigned threads = 0);

/// Fit over the points with value > kSlopeFloor; nullopt when fewer than 4
/// such points remain.
std::optional<double> fitted_slope(std::span<const int> m_values, std::span<const double> series);

void write_series_csv(std::ostream& out, std::span<const DiagnosticSeries> series);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string_view status_name(CheckStatus s);

struct IdentityCheck {
  std::string name;
  std::string params;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  CheckStatus status = CheckStatus::Pass;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  std::size_t count(CheckStatus s) const;
  bool all_pass() const { return count(CheckStatus::Fail) == 0 && count(CheckStatus::Inconclusive) == 0; }
};

std::vector<double> default_identity_betas();
std::vector<double> default_identity_widths();

/// Numerical checks of the integral identities and inequalities the error
/// analysis relies on. Every check is quadrature based; a quadrature failure
/// marks the point inconclusive.
IdentityReport verify_identities(std::span<const double> beta_grid, std::span<const double> w_grid);

/// int_0^inf J1(beta x) / sqrt(1 + x^2) dx by half-period summation with
/// repeated averaging of the partial sums.
double hankel_tail_integral(double beta);

/// int_1^W J1(beta sqrt(nu^2 - 1)) / sqrt(nu^2 - 1) dnu
double j1_branch_integral(double beta, double w);

}  // namespace regshannon
