#pragma once

#include <cstddef>
#include <functional>

namespace regshannon {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // >= 0
  std::size_t subdivisions = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-12;
  /// Relative target, applied against |value|. The effective target is
  /// max(abs_tol, rel_tol * |value|, roundoff floor).
  double rel_tol = 0.0;
  std::size_t max_subdivisions = 10000;
};

/// Integrand callback. Must be reentrant: quadrature is called concurrently
/// from the sweep drivers.
using Integrand = std::function<double(double)>;

/// Integrand written as g(nu, sqrt(1 - nu^2)); the root is supplied by the
/// caller so that it stays accurate near nu = 1.
using RootIntegrand = std::function<double(double nu, double root)>;

/// Globally adaptive Gauss-Kronrod 7/15 quadrature on [a, b]. The interval
/// with the largest |K15 - G7| is bisected until the summed estimate meets
/// the target. Throws ConvergenceError (carrying the best estimate) when the
/// subdivision budget runs out.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts);
QuadratureResult integrate(const Integrand& f, double a, double b, double tol = 1e-12);

/// int_a^b g(nu) / sqrt(1 - nu^2) dnu for [a, b] inside [-1, 1]; b = 1 is
/// allowed. The singular factor is removed by nu = sin(theta) before the
/// integral is handed to integrate(). Pass the numerator g only.
QuadratureResult integrate_sqrt_singular(const Integrand& g, double a, double b,
                                         const QuadratureOptions& opts);
QuadratureResult integrate_sqrt_singular(const Integrand& g, double a, double b,
                                         double tol = 1e-12);

/// Same substitution, with g(nu, sqrt(1 - nu^2)) receiving cos(theta) as the
/// root.
QuadratureResult integrate_sqrt_singular(const RootIntegrand& g, double a, double b,
                                         const QuadratureOptions& opts);

}  // namespace regshannon
