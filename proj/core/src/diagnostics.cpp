#include "regshannon/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "regshannon/compensated_sum.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/quadrature.hpp"
#include "regshannon/reconstruction.hpp"
#include "regshannon/special_fn.hpp"

namespace regshannon {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kHalfGrid = 256;  // 513 points on [-delta, delta]
constexpr double kOmegaTol = 1e-7;

QuadratureOptions tight() {
  QuadratureOptions o;
  o.abs_tol = 1e-17;
  o.rel_tol = 1e-13;
  return o;
}

double kernel_integral(const WindowSpec& spec, double a, double b) {
  if (a == b) return 0.0;
  if (a > b) return -kernel_integral(spec, b, a);
  return integrate([&](double nu) { return split_kernel(spec, nu); }, a, b, tight()).value;
}

void require_compact(const WindowSpec& spec) {
  if (spec.family() != WindowFamily::Sinh && spec.family() != WindowFamily::CKB) {
    throw PreconditionError("split: only sinh and ckb windows have a shape parameter beta");
  }
}

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < kPi)) throw DomainError("bandwidth delta must lie in (0, pi)");
}

template <class F>
std::pair<double, double> golden_max(F f, double lo, double hi, double tol) {
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
  return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

std::string fmt(const char* format, double a, double b = 0.0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

}  // namespace

double nu1(double omega, int m, double beta) {
  if (!(beta > 0.0)) throw DomainError("nu1: beta must be > 0");
  return m / beta * (omega + kPi);
}

double split_kernel(const WindowSpec& spec, double nu) {
  const double scale = spec.beta() / spec.m();
  return scale / std::sqrt(2.0 * kPi) * window_ft(spec, scale * nu);
}

double split_delta1(const WindowSpec& spec, double delta) {
  require_compact(spec);
  check_delta(delta);
  const double inv_alpha = spec.m() * (kPi - delta) / spec.beta();
  return 1.0 - 2.0 * kernel_integral(spec, 0.0, inv_alpha);
}

double split_delta2(const WindowSpec& spec, double delta, double omega) {
  require_compact(spec);
  check_delta(delta);
  const double inv_alpha = spec.m() * (kPi - delta) / spec.beta();
  CompensatedSum s;
  s += kernel_integral(spec, inv_alpha, nu1(omega, spec.m(), spec.beta()));
  s += kernel_integral(spec, inv_alpha, nu1(-omega, spec.m(), spec.beta()));
  return s.value();
}

DeltaSplit delta_split(const WindowSpec& spec, double delta) {
  require_compact(spec);
  check_delta(delta);
  const int m = spec.m();
  const double beta = spec.beta();
  DeltaSplit out;
  out.delta1 = split_delta1(spec, delta);
  out.d1 = std::fabs(out.delta1);

  // nu_1(-delta) = 1/alpha, so the nodes nu_1(+-omega_i) of a uniform omega
  // grid form one uniform nu grid starting at 1/alpha
  const int n = kHalfGrid;
  const double h = delta / n;
  const double nu0 = m * (kPi - delta) / beta;
  const double dnu = m * h / beta;
  std::vector<double> cum(2 * n + 1, 0.0);
  CompensatedSum run;
  for (int j = 1; j <= 2 * n; ++j) {
    run += kernel_integral(spec, nu0 + (j - 1) * dnu, nu0 + j * dnu);
    cum[j] = run.value();
  }

  int best2 = 0, best1 = 0;
  double val2 = -1.0, val1 = -1.0;
  for (int i = 0; i <= n; ++i) {
    const double d2 = cum[n + i] + cum[n - i];
    if (std::fabs(d2) > val2) { val2 = std::fabs(d2); best2 = i; }
    const double e = std::fabs(out.delta1 - d2);
    if (e > val1) { val1 = e; best1 = i; }
  }
  out.d2 = val2;
  out.omega_d2 = best2 * h;
  out.e1 = val1;

  auto abs_d2 = [&](double w) { return std::fabs(split_delta2(spec, delta, w)); };
  auto abs_e = [&](double w) { return std::fabs(out.delta1 - split_delta2(spec, delta, w)); };

  // branch switch of the case analysis at omega_1 = beta/m - pi
  const double omega1 = std::fabs(beta / m - kPi);
  if (omega1 > 0.0 && omega1 < delta) {
    if (const double v = abs_d2(omega1); v > out.d2) { out.d2 = v; out.omega_d2 = omega1; }
    out.e1 = std::max(out.e1, abs_e(omega1));
  }
  {
    const auto [w, v] = golden_max(abs_d2, std::max(0.0, (best2 - 1) * h), std::min(delta, (best2 + 1) * h), kOmegaTol);
    if (v > out.d2) { out.d2 = v; out.omega_d2 = w; }
  }
  {
    const auto [w, v] = golden_max(abs_e, std::max(0.0, (best1 - 1) * h), std::min(delta, (best1 + 1) * h), kOmegaTol);
    out.e1 = std::max(out.e1, v);
  }
  return out;
}

DeltaSplit delta_sinh_split(int m, double delta, double alpha) {
  return delta_split(alpha_spec(WindowFamily::Sinh, m, delta, alpha), delta);
}

DeltaSplit delta_ckb_split(int m, double delta, double alpha) {
  check_delta(delta);
  if (m >= 2 && delta > (m - 1) * kPi / m * (1.0 + 1e-15)) {
    throw PreconditionError("ckb split: hypothesis delta <= (m-1) pi / m violated");
  }
  return delta_split(alpha_spec(WindowFamily::CKB, m, delta, alpha), delta);
}

double sinh_delta1_closed(double beta) {
  const double e = std::exp(-beta);
  return 2.0 * e / (1.0 + e);
}

double ckb_delta1_numerator(double beta) {
  return bessel_i0_minus_struve_l0(beta) - 1.0 + 2.0 / kPi * sine_integral(beta);
}

double ckb_delta1_closed(double beta) { return ckb_delta1_numerator(beta) / bessel_i0m1(beta); }

double decay_slope(std::span<const int> m_values, std::span<const double> series) {
  if (m_values.size() != series.size()) throw PreconditionError("decay_slope: length mismatch");
  if (series.size() < 4) throw PreconditionError("decay_slope: needs at least 4 points");
  const double n = static_cast<double>(series.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!(series[i] > 0.0)) throw DomainError("decay_slope: series must be strictly positive");
    mx += m_values[i];
    my += std::log(series[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const double dx = m_values[i] - mx;
    sxy += dx * (std::log(series[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0.0) throw DomainError("decay_slope: m values must not all coincide");
  return -sxy / sxx;
}

std::optional<double> fitted_slope(std::span<const int> m_values, std::span<const double> series) {
  std::vector<int> ms;
  std::vector<double> vs;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series[i] > kSlopeFloor) {
      ms.push_back(m_values[i]);
      vs.push_back(series[i]);
    }
  }
  if (vs.size() < 4) return std::nullopt;
  return decay_slope(ms, vs);
}

DiagnosticSeries build_series(WindowFamily family, double alpha, double delta,
                              std::span<const int> m_values, unsigned threads) {
  if (family != WindowFamily::Sinh && family != WindowFamily::CKB) {
    throw PreconditionError("diagnostics: family must be sinh or ckb");
  }
  DiagnosticSeries s;
  s.family = family;
  s.alpha = alpha;
  s.delta = delta;

  struct Point { bool ok = false; DeltaSplit split; std::string note; };
  std::vector<Point> pts(m_values.size());
  parallel_for(m_values.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      try {
        pts[i].split = family == WindowFamily::Sinh ? delta_sinh_split(m_values[i], delta, alpha)
                                                    : delta_ckb_split(m_values[i], delta, alpha);
        pts[i].ok = true;
      } catch (const std::exception& ex) {
        pts[i].note = "m=" + std::to_string(m_values[i]) + ": " + ex.what();
      }
    }
  });
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i].ok) {
      s.notes.push_back(pts[i].note);
      continue;
    }
    s.m_values.push_back(m_values[i]);
    s.d1.push_back(pts[i].split.d1);
    s.d2.push_back(pts[i].split.d2);
  }
  s.slope_d1 = fitted_slope(s.m_values, s.d1);
  s.slope_d2 = fitted_slope(s.m_values, s.d2);
  return s;
}

void write_series_csv(std::ostream& out, std::span<const DiagnosticSeries> series) {
  out << "# schema=1\n";
  out << "family,alpha,delta,m,d1,d2\n";
  char buf[256];
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.m_values.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%d,%.17g,%.17g\n",
                    std::string(family_name(s.family)).c_str(), s.alpha, s.delta, s.m_values[i],
                    s.d1[i], s.d2[i]);
      out << buf;
    }
  }
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t IdentityReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const IdentityCheck& c) { return c.status == s; }));
}

std::vector<double> default_identity_betas() { return {1.0, 2.0, 5.0, 10.0, 20.0}; }
std::vector<double> default_identity_widths() { return {1.1, 1.5, 3.0, 10.0, 100.0}; }

double j1_branch_integral(double beta, double w) {
  if (!(w >= 1.0)) throw DomainError("j1_branch_integral: W must be >= 1");
  QuadratureOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-12;
  return integrate(
      [beta](double nu) {
        const double s = std::sqrt((nu - 1.0) * (nu + 1.0));
        return s == 0.0 ? 0.5 * beta : bessel_j1(beta * s) / s;
      },
      1.0, w, o).value;
}

double hankel_tail_integral(double beta) {
  if (!(beta > 0.0)) throw DomainError("hankel_tail_integral: beta must be > 0");
  auto f = [beta](double x) { return bessel_j1(beta * x) / std::sqrt(1.0 + x * x); };
  QuadratureOptions o;
  o.abs_tol = 1e-15;
  o.rel_tol = 1e-13;
  // J1(beta x) ~ cos(beta x - 3 pi / 4): cut near its zeros so the pieces alternate
  constexpr int kHead = 8, kPieces = 160, kLevels = 40;
  auto node = [beta](int k) { return (1.25 * kPi + k * kPi) / beta; };
  CompensatedSum head;
  head += integrate(f, 0.0, node(kHead), o).value;
  std::vector<double> partial;
  partial.reserve(kPieces);
  CompensatedSum run = head;
  for (int k = kHead; k < kHead + kPieces; ++k) {
    run += integrate(f, node(k), node(k + 1), o).value;
    partial.push_back(run.value());
  }
  // repeated averaging on the last partial sums
  std::vector<double> level(partial.end() - kLevels - 1, partial.end());
  while (level.size() > 1) {
    for (std::size_t i = 0; i + 1 < level.size(); ++i) level[i] = 0.5 * (level[i] + level[i + 1]);
    level.pop_back();
  }
  return level.front();
}

IdentityReport verify_identities(std::span<const double> beta_grid, std::span<const double> w_grid) {
  if (beta_grid.empty() || w_grid.empty()) throw PreconditionError("verify_identities: empty grid");
  for (double b : beta_grid) {
    if (!(b > 0.0)) throw PreconditionError("verify_identities: betas must be > 0");
  }
  for (double w : w_grid) {
    if (!(w > 1.0)) throw PreconditionError("verify_identities: widths must be > 1");
  }
  IdentityReport rep;
  auto guarded = [&](const std::string& name, const std::string& params, auto&& body) {
    IdentityCheck c;
    c.name = name;
    c.params = params;
    try {
      body(c);
    } catch (const ConvergenceError&) {
      c.status = CheckStatus::Inconclusive;
    }
    rep.checks.push_back(std::move(c));
  };

  // int_0^1 I1(beta sqrt(1-nu^2)) / sqrt(1-nu^2) = (2/beta) sinh^2(beta/2)
  for (double beta : beta_grid) {
    guarded("int_I1", fmt("beta=%g", beta), [&](IdentityCheck& c) {
      QuadratureOptions o;
      o.abs_tol = 1e-300;
      o.rel_tol = 1e-14;
      c.lhs = integrate_sqrt_singular([beta](double, double root) { return bessel_i1(beta * root); }, 0.0, 1.0, o).value;
      const double sh = std::sinh(0.5 * beta);
      c.rhs = 2.0 / beta * sh * sh;
      c.residual = std::fabs(c.lhs - c.rhs) / std::fabs(c.rhs);
      c.status = c.residual < 1e-9 ? CheckStatus::Pass : CheckStatus::Fail;
    });
  }

  // 0 < int_1^W J1(beta sqrt(nu^2-1)) / sqrt(nu^2-1) <= 3 (1 - e^-beta) / (2 beta)
  for (double beta : beta_grid) {
    for (double w : w_grid) {
      guarded("int_J1_upto_W", fmt("beta=%g W=%g", beta, w), [&](IdentityCheck& c) {
        c.lhs = j1_branch_integral(beta, w);
        c.rhs = 3.0 * -std::expm1(-beta) / (2.0 * beta);
        c.residual = c.rhs - c.lhs;
        c.status = (c.lhs > 0.0 && c.lhs <= c.rhs) ? CheckStatus::Pass : CheckStatus::Fail;
      });
    }
  }

  // int_1^inf of the same integrand = I_{1/2}(beta/2) K_{1/2}(beta/2) = (1 - e^-beta) / beta
  for (double beta : beta_grid) {
    guarded("int_J1_to_inf", fmt("beta=%g", beta), [&](IdentityCheck& c) {
      c.lhs = hankel_tail_integral(beta);
      c.rhs = -std::expm1(-beta) / beta;
      c.residual = std::fabs(c.lhs - c.rhs) / c.rhs;
      c.status = c.residual < 1e-7 ? CheckStatus::Pass : CheckStatus::Fail;
    });
  }

  // |sin(b sqrt(nu^2-1)) / (b sqrt(nu^2-1)) - sin(b nu) / (b nu)| <= 2 / nu^2 on a 40 x 25 grid
  {
    constexpr int kBetas = 40, kNus = 25;
    double worst = -1.0, worst_lhs = 0.0, worst_rhs = 0.0;
    std::string worst_at;
    for (int i = 0; i < kBetas; ++i) {
      const double beta = 0.5 * std::pow(120.0, double(i) / (kBetas - 1));  // 0.5 .. 60
      for (int j = 0; j < kNus; ++j) {
        const double nu = std::pow(50.0, double(j) / (kNus - 1));  // 1 .. 50
        const double a = beta * std::sqrt((nu - 1.0) * (nu + 1.0));
        const double lhs = std::fabs((a == 0.0 ? 1.0 : std::sin(a) / a) - std::sin(beta * nu) / (beta * nu));
        const double rhs = 2.0 / (nu * nu);
        if (lhs / rhs > worst) {
          worst = lhs / rhs;
          worst_lhs = lhs;
          worst_rhs = rhs;
          worst_at = fmt("beta=%g nu=%g", beta, nu);
        }
      }
    }
    IdentityCheck c{"sinc_difference", "worst of 1000 points at " + worst_at, worst_lhs, worst_rhs,
                    worst_rhs - worst_lhs, worst <= 1.0 ? CheckStatus::Pass : CheckStatus::Fail};
    rep.checks.push_back(std::move(c));
  }

  // 0 <= I0 - L0 - 1 + (2/pi) Si <= 1/2 at beta = m (pi - delta)
  for (double delta : {kPi / 4, kPi / 2, 3 * kPi / 4}) {
    for (int m = 2; m <= 20; ++m) {
      const double beta = m * (kPi - delta);
      guarded("i0_minus_l0_bracket", fmt("m=%g delta=%.6f", m, delta), [&](IdentityCheck& c) {
        c.lhs = ckb_delta1_numerator(beta);
        c.rhs = 0.5;
        c.residual = std::min(c.lhs, 0.5 - c.lhs);
        c.status = (c.lhs >= 0.0 && c.lhs <= 0.5) ? CheckStatus::Pass : CheckStatus::Fail;
      });
    }
  }

  // e^x / (x (I0(x) - 1)) strictly decreasing on [1, 60]
  {
    constexpr int kPts = 1000;
    auto g = [](double x) { return std::exp(x) / (x * bessel_i0m1(x)); };
    double prev = g(1.0), worst_step = -INFINITY;
    std::string at;
    for (int i = 1; i < kPts; ++i) {
      const double x = 1.0 + 59.0 * i / (kPts - 1);
      const double v = g(x);
      if (v - prev > worst_step) {
        worst_step = v - prev;
        at = fmt("x=%g", x);
      }
      prev = v;
    }
    rep.checks.push_back({"exp_over_i0m1_decreasing", "largest step on 1000 points at " + at, worst_step,
                          0.0, -worst_step, worst_step < 0.0 ? CheckStatus::Pass : CheckStatus::Fail});
  }

  // the two constants quoted for the ckb estimates
  {
    const double v = std::exp(kPi) / (kPi * bessel_i0m1(kPi));
    rep.checks.push_back({"const_at_pi", "e^pi / (pi (I0(pi) - 1))", v, 1.644967, std::fabs(v - 1.644967),
                          std::fabs(v - 1.644967) <= 5e-6 ? CheckStatus::Pass : CheckStatus::Fail});
    const double u = std::exp(1.0) / bessel_i0m1(1.0);
    rep.checks.push_back({"const_at_1", "e / (I0(1) - 1)", u, 10.216574, std::fabs(u - 10.216574),
                          std::fabs(u - 10.216574) <= 5e-6 ? CheckStatus::Pass : CheckStatus::Fail});
  }
  return rep;
}

}  // namespace regshannon
