#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "regshannon/diagnostics.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/quadrature.hpp"
#include "regshannon/special_fn.hpp"

using namespace regshannon;

namespace {
constexpr double pi = std::numbers::pi;
const double deltas[] = {pi / 4, pi / 2, 3 * pi / 4};
}  // namespace

TEST_CASE("nu1") {
  for (double delta : deltas) {
    const int m = 7;
    const double beta = m * (pi - delta);
    CHECK(nu1(-delta, m, beta) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(nu1(delta, m, beta) == doctest::Approx((pi + delta) / (pi - delta)).epsilon(1e-15));
    const double alpha = 1.7;
    CHECK(nu1(0.0, m, alpha * beta) == doctest::Approx(pi / (alpha * (pi - delta))).epsilon(1e-15));
  }
  CHECK_THROWS_AS(nu1(0.0, 5, 0.0), DomainError);
}

TEST_CASE("sinh split at alpha = 1") {
  for (double delta : deltas) {
    for (int m = 2; m <= 12; m += 2) {
      const double beta = m * (pi - delta);
      const auto s = delta_sinh_split(m, delta, 1.0);
      const double e = std::exp(-beta);
      CHECK(std::fabs(s.d1 - 2 * e / (1 + e)) < 1e-10);
      CHECK(s.d2 <= 3 * e / (1 + e));
      CHECK(s.d1 >= 0.0);
      CHECK(s.d2 >= 0.0);
    }
  }
}

TEST_CASE("sinh split at alpha = 1/2") {
  const int m = 6;
  const double delta = pi / 2, beta = 3 * pi / 2;
  const auto s = delta_sinh_split(m, delta, 0.5);
  CHECK(s.d1 <= 5 * std::exp(-beta) / (1 + std::exp(-beta)));
}

TEST_CASE("ckb split at alpha = 1") {
  for (double delta : deltas) {
    for (int m = 2; m <= 12; m += 2) {
      if (delta > (m - 1) * pi / m) continue;
      const double beta = m * (pi - delta);
      const auto s = delta_ckb_split(m, delta, 1.0);
      CHECK(std::fabs(s.d1 - ckb_delta1_closed(beta)) < 1e-9);
      CHECK(s.d1 >= 0.0);
      CHECK(s.d1 <= 1 / (2 * (bessel_i0(beta) - 1)));
      CHECK(s.d2 <= 4 * beta / (pi * (bessel_i0(beta) - 1)));
    }
  }
}

TEST_CASE("ckb d2 bound for alpha below one") {
  // for alpha > 1 the range of nu reaches into the sinh branch and the bound fails
  for (double alpha : {1 / pi, 0.5, 0.75, 1.0}) {
    for (int m : {4, 8}) {
      const double beta = alpha * m * (pi - pi / 2);
      CHECK(delta_ckb_split(m, pi / 2, alpha).d2 <= 4 * beta / (pi * (bessel_i0(beta) - 1)));
    }
  }
  CHECK_THROWS_AS(delta_ckb_split(6, pi / 2, 0.25), PreconditionError);
  CHECK_THROWS_AS(delta_ckb_split(2, 0.6 * pi, 1.0), PreconditionError);
}

TEST_CASE("sinh d2 is attained at omega = 0 for large alpha") {
  for (double delta : deltas) {
    const double alpha_min = (pi + delta) / (pi - delta);
    for (double alpha : {alpha_min, alpha_min * 1.3, alpha_min + 2}) {
      const int m = 6;
      const double beta = alpha * m * (pi - delta);
      const auto s = delta_sinh_split(m, delta, alpha);
      // (beta / sinh beta) int_{1/alpha}^{nu1(0)} I1(beta sqrt(1-nu^2)) / sqrt(1-nu^2)
      QuadratureOptions o;
      o.abs_tol = 1e-300;
      o.rel_tol = 1e-14;
      const double a = std::asin(1 / alpha), b = std::asin(std::min(1.0, nu1(0.0, m, beta)));
      const double integral = integrate([&](double th) { return bessel_i1(beta * std::cos(th)); }, a, b, o).value;
      const double expect = beta / std::sinh(beta) * integral;
      CHECK(std::fabs(s.d2 - expect) < 1e-10);
      CHECK(s.omega_d2 < 1e-6);
    }
  }
}

TEST_CASE("split identity Delta = Delta1 - Delta2") {
  const auto spec = alpha_spec(WindowFamily::CKB, 5, pi / 3, 1.4);
  const double d1 = split_delta1(spec, pi / 3);
  for (double w : {0.0, 0.3, pi / 3}) {
    const double d2 = split_delta2(spec, pi / 3, w);
    const double d2m = split_delta2(spec, pi / 3, -w);
    CHECK(d2 == doctest::Approx(d2m).epsilon(1e-13));
    // direct Delta from the transform
    const double tau_hi = pi + w, tau_lo = pi - w;
    const double direct =
        1 - (integrate([&](double t) { return window_ft(spec, t); }, 0.0, tau_hi, 1e-15).value +
             integrate([&](double t) { return window_ft(spec, t); }, 0.0, tau_lo, 1e-15).value) /
                std::sqrt(2 * pi);
    CHECK(std::fabs((d1 - d2) - direct) < 1e-12);
  }
  CHECK_THROWS_AS(split_delta1(WindowSpec::gauss(5, 2.0), pi / 2), PreconditionError);
}

TEST_CASE("decay slope") {
  std::vector<int> ms;
  std::vector<double> exact, flat, closed;
  for (int m = 2; m <= 10; ++m) {
    ms.push_back(m);
    exact.push_back(std::exp(-2.0 * m));
    flat.push_back(0.3);
  }
  CHECK(std::fabs(decay_slope(ms, exact) - 2.0) < 1e-12);
  CHECK(std::fabs(decay_slope(ms, flat)) < 1e-12);
  std::vector<int> m2;
  for (int m = 4; m <= 12; ++m) {
    m2.push_back(m);
    closed.push_back(sinh_delta1_closed(m * pi / 2));
  }
  CHECK(decay_slope(m2, closed) == doctest::Approx(pi / 2).epsilon(0.02));
  std::vector<double> bad = exact;
  bad[3] = 0.0;
  CHECK_THROWS_AS(decay_slope(ms, bad), DomainError);
  CHECK_THROWS_AS(decay_slope(std::vector<int>{1, 2, 3}, std::vector<double>{1, 2, 3}), PreconditionError);
}

TEST_CASE("slope fit drops values under the floor") {
  const std::vector<int> ms{2, 3, 4, 5, 6, 7};
  const std::vector<double> v{1e-2, 1e-4, 1e-6, 1e-8, 1e-16, 1e-17};
  CHECK(fitted_slope(ms, v).value() == doctest::Approx(2 * std::log(10.0)).epsilon(1e-12));
  const std::vector<double> w{1e-2, 1e-4, 1e-16, 1e-17, 1e-18, 1e-19};
  CHECK_FALSE(fitted_slope(ms, w).has_value());
}

TEST_CASE("series and csv") {
  const std::vector<int> ms{2, 3, 4, 5, 6};
  const auto s = build_series(WindowFamily::CKB, 1.0, 3 * pi / 4, ms, 2);
  CHECK(s.m_values == std::vector<int>{4, 5, 6});
  CHECK(s.notes.size() == 2);
  CHECK_FALSE(s.slope_d1.has_value());
  std::ostringstream out;
  write_series_csv(out, std::vector<DiagnosticSeries>{s});
  const std::string text = out.str();
  CHECK(text.rfind("# schema=1\nfamily,alpha,delta,m,d1,d2\nckb,1,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK_THROWS_AS(build_series(WindowFamily::Gauss, 1.0, pi / 2, ms), PreconditionError);
}

TEST_CASE("identity report") {
  const auto rep = verify_identities(default_identity_betas(), default_identity_widths());
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.params);
    CHECK(c.status == CheckStatus::Pass);
  }
  CHECK(rep.all_pass());
  CHECK(rep.count(CheckStatus::Pass) == rep.checks.size());
  CHECK_THROWS_AS(verify_identities(std::vector<double>{}, default_identity_widths()), PreconditionError);
  CHECK_THROWS_AS(verify_identities(default_identity_betas(), std::vector<double>{0.5}), PreconditionError);
}

TEST_CASE("hankel tail and finite branch integral") {
  for (double beta : {0.5, 3.0, 12.0}) {
    CHECK(hankel_tail_integral(beta) == doctest::Approx(-std::expm1(-beta) / beta).epsilon(1e-9));
    CHECK(j1_branch_integral(beta, 1.0) == 0.0);
  }
}
