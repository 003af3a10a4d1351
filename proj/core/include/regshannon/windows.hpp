#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace regshannon {

enum class WindowFamily { Gauss, ModGauss, Sinh, CKB };

std::string_view family_name(WindowFamily family);

/// Accepts "gauss", "modgauss", "sinh", "ckb" (case-insensitive).
WindowFamily parse_family(std::string_view name);

/// Immutable window description: family, truncation parameter m and the
/// family's shape parameter(s).
///
/// Gauss uses sigma2, ModGauss uses sigma2 and lambda, Sinh and CKB use beta.
/// Fields a family does not use read as zero. Construction validates the
/// parameters and precomputes the normalisation constants, so a spec can be
/// shared freely between threads.
class WindowSpec {
 public:
  static WindowSpec gauss(int m, double sigma2);
  static WindowSpec mod_gauss(int m, double sigma2, double lambda);
  static WindowSpec sinh(int m, double beta);
  static WindowSpec ckb(int m, double beta);

  WindowFamily family() const noexcept { return family_; }
  int m() const noexcept { return m_; }
  double sigma2() const noexcept { return sigma2_; }
  double lambda() const noexcept { return lambda_; }
  double beta() const noexcept { return beta_; }

  /// Human-readable summary, e.g. "sinh{m=5, beta=7.85398}".
  std::string describe() const;

  // Cached constants (see windows.cpp for their meaning).
  double scale_a() const noexcept { return scale_a_; }
  double scale_b() const noexcept { return scale_b_; }

 private:
  WindowSpec() = default;

  WindowFamily family_ = WindowFamily::Gauss;
  int m_ = 2;
  double sigma2_ = 0.0;
  double lambda_ = 0.0;
  double beta_ = 0.0;
  double scale_a_ = 0.0;
  double scale_b_ = 0.0;
};

/// Time-domain window phi(t). Sinh and CKB are exactly zero for |t| >= m.
/// ModGauss is returned as written and goes negative where cos(lambda t) < 0.
double eval_window(const WindowSpec& spec, double t);

/// Fourier transform (1/sqrt(2 pi)) int phi(t) exp(-i tau t) dt in closed
/// form. For Sinh and CKB the two branches |nu| < 1 and |nu| > 1
/// (nu = m tau / beta) are joined by a Taylor expansion in nu^2 - 1 near the
/// branch point.
double window_ft(const WindowSpec& spec, double tau);

/// Optimal parameters:
///   Gauss     sigma^2 = m / (pi - delta)
///   ModGauss  sigma^2 = m / (pi - lambda - delta), 0 <= lambda < pi - delta
///   Sinh      beta = m (pi - delta)
///   CKB       beta = m (pi - delta), delta <= (m - 1) pi / m
/// Throws PreconditionError naming the violated hypothesis.
WindowSpec optimal_spec(WindowFamily family, int m, double delta, double lambda = 0.0);

/// Scaled parameters around the optimum: beta = alpha m (pi - delta) for
/// Sinh/CKB (CKB requires alpha >= 1/pi), sigma = alpha sigma_opt for Gauss
/// and ModGauss. alpha = 1 reproduces optimal_spec except that the CKB
/// bandwidth hypothesis is not enforced here.
WindowSpec alpha_spec(WindowFamily family, int m, double delta, double alpha, double lambda = 0.0);

}  // namespace regshannon
