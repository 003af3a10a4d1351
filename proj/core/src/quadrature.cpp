#include "regshannon/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "regshannon/errors.hpp"

namespace regshannon {
namespace {

// Kronrod 15-point abscissae; odd indices are the embedded Gauss 7 nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double a;
  double b;
  double value;
  double error;
  double abs_value;  // integral of |f|, for the roundoff floor
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(kronrod);

  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }

  Segment s{a, b, kronrod * half, std::fabs((kronrod - gauss) * half), abs_sum * std::fabs(half)};
  if (!std::isfinite(s.value)) {
    std::ostringstream msg;
    msg << "integrand is not finite on [" << a << ", " << b << "]";
    throw DomainError(msg.str());
  }
  return s;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (!(opts.abs_tol > 0.0) && !(opts.rel_tol > 0.0)) {
    throw DomainError("integrate: tolerance must be positive");
  }
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Segment> heap;
  heap.push(gauss_kronrod(f, a, b));
  std::size_t subdivisions = 1;

  auto totals = [&heap]() {
    // Re-sum from scratch to avoid drift from incremental updates.
    auto copy = heap;
    double value = 0.0, error = 0.0, abs_value = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      abs_value += copy.top().abs_value;
      copy.pop();
    }
    return std::array<double, 3>{value, error, abs_value};
  };

  double value = heap.top().value;
  double error = heap.top().error;
  double abs_value = heap.top().abs_value;

  auto target = [&opts](double v, double av) {
    return std::max({opts.abs_tol, opts.rel_tol * std::fabs(v), 50.0 * kEps * av});
  };

  while (error > target(value, abs_value)) {
    if (subdivisions >= opts.max_subdivisions) {
      const auto t = totals();
      if (t[1] <= target(t[0], t[2])) return {t[0], t[1], subdivisions};
      std::ostringstream msg;
      msg << "integrate: no convergence on [" << a << ", " << b << "] after " << subdivisions
          << " subdivisions (estimate " << t[0] << ", error " << t[1] << ")";
      throw ConvergenceError(msg.str(), t[0], t[1]);
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval cannot be split further in double precision; accept it.
      const auto t = totals();
      return {t[0], t[1], subdivisions};
    }
    heap.pop();
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    abs_value += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
    if (subdivisions % 64 == 0) {
      const auto t = totals();
      value = t[0];
      error = t[1];
      abs_value = t[2];
    }
  }

  const auto t = totals();
  return {t[0], t[1], subdivisions};
}

QuadratureResult integrate(const Integrand& f, double a, double b, double tol) {
  QuadratureOptions opts;
  opts.abs_tol = tol;
  return integrate(f, a, b, opts);
}

QuadratureResult integrate_sqrt_singular(const RootIntegrand& g, double a, double b,
                                         const QuadratureOptions& opts) {
  if (!(a >= -1.0 && b <= 1.0)) {
    throw DomainError("integrate_sqrt_singular: interval must lie in [-1, 1]");
  }
  const double theta_a = std::asin(a);
  const double theta_b = std::asin(b);
  return integrate([&g](double theta) { return g(std::sin(theta), std::cos(theta)); }, theta_a,
                   theta_b, opts);
}

QuadratureResult integrate_sqrt_singular(const Integrand& g, double a, double b,
                                         const QuadratureOptions& opts) {
  return integrate_sqrt_singular(RootIntegrand([&g](double nu, double) { return g(nu); }), a, b,
                                 opts);
}

QuadratureResult integrate_sqrt_singular(const Integrand& g, double a, double b, double tol) {
  QuadratureOptions opts;
  opts.abs_tol = tol;
  return integrate_sqrt_singular(g, a, b, opts);
}

}  // namespace regshannon
