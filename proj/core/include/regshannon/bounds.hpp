#pragma once

#include <string_view>

#include "regshannon/windows.hpp"

namespace regshannon {

enum class BoundMethod { Numeric, ClosedForm };

std::string_view method_name(BoundMethod method);

struct BoundBreakdown {
  double e1 = 0.0;
  double e2 = 0.0;
  double total = 0.0;  // (e1 + e2) * l2_norm
  BoundMethod method = BoundMethod::Numeric;
};

/// 1 - (1/sqrt(2 pi)) int_{omega - pi}^{omega + pi} phi_hat(tau) dtau.
double delta_function(const WindowSpec& spec, double omega);

/// max over omega in [-delta, delta] of |delta_function|: 2048-point grid on
/// [0, delta] (the function is even) and golden-section refinement to 1e-6
/// around the best node.
double e1_numeric(const WindowSpec& spec, double delta);

/// (sqrt 2 / (pi m)) sqrt(phi(m)^2 + int_m^inf phi^2). Exactly 0 for the
/// compactly supported windows. The Gaussian tail is cut where phi^2 drops
/// below 1e-18 of its value at m.
double e2_numeric(const WindowSpec& spec);

/// Closed-form error constant per unit L2 norm:
///   Gauss     2 sqrt 2 / sqrt(pi m (pi - delta)) exp(-m (pi - delta) / 2)
///   ModGauss  same with pi - lambda - delta
///   Sinh      exp(-m (pi - delta))
///   CKB       (7/8 m (pi - delta) + 7/pi m^2 (pi - delta)^2) exp(-m (pi - delta))
/// Throws PreconditionError when the family's hypotheses do not hold.
double bound_closed_form(WindowFamily family, int m, double delta, double lambda = 0.0);

/// Empty string when bound_closed_form is applicable, otherwise the reason.
std::string bound_hypothesis_violation(WindowFamily family, int m, double delta, double lambda = 0.0);

BoundBreakdown numeric_bound(const WindowSpec& spec, double delta, double l2_norm = 1.0);
BoundBreakdown closed_form_bound(WindowFamily family, int m, double delta, double lambda = 0.0,
                                 double l2_norm = 1.0);

}  // namespace regshannon
