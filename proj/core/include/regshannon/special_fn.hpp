#pragma once

// Scalar special functions used by the window transforms, the error bounds
// and the diagnostics. All functions are pure and reentrant; arguments
// outside the documented domain raise DomainError instead of being clamped.

namespace regshannon {

/// sin(pi t) with exact zeros at the integers (argument reduction to
/// |r| <= 1/2 before calling sin).
double sin_pi(double t);

/// Normalized cardinal sine sin(pi t)/(pi t), sinc(0) = 1, exact 0 at nonzero
/// integers.
double sinc(double t);

/// Modified Bessel function I0 for x >= 0. Power series below x = 15, Hankel
/// large-argument expansion above.
double bessel_i0(double x);

/// exp(-x) I0(x), finite for every x >= 0.
double bessel_i0_scaled(double x);

/// I0(x) - 1 without cancellation for small x.
double bessel_i0m1(double x);

/// Modified Bessel function I1 for x >= 0.
double bessel_i1(double x);

/// exp(-x) I1(x).
double bessel_i1_scaled(double x);

/// Bessel function of the first kind J1 for x >= 0; absolute error below
/// 1e-12 on [0, 500].
///
/// Three regimes: the power series (extended precision accumulation) for
/// x <= 12, the trapezoidal rule on Bessel's periodic integral for
/// 12 < x < 17 (exponentially convergent) and Hankel's asymptotic expansion
/// from x = 17 on.
double bessel_j1(double x);

/// Modified Struve function L0 via (2x/pi) sum x^{2k} / ((2k+1)!!)^2.
double struve_l0(double x);

/// I0(x) - L0(x) computed from (2/pi) int_0^{pi/2} exp(-x cos s) ds, so it
/// stays accurate where both functions are astronomically large.
double bessel_i0_minus_struve_l0(double x);

/// Sine integral Si(x) = int_0^x sin(v)/v dv for x >= 0.
double sine_integral(double x);

}  // namespace regshannon
