#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "regshannon/bounds.hpp"
#include "regshannon/diagnostics.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/harness.hpp"

using namespace regshannon;

namespace {
constexpr double pi = std::numbers::pi;
const double deltas[] = {pi / 4, pi / 2, 3 * pi / 4};
}  // namespace

TEST_CASE("e1 against the analytic estimates") {
  const auto s = optimal_spec(WindowFamily::Sinh, 5, pi / 2);
  CHECK(e1_numeric(s, pi / 2) <= std::exp(-5 * pi / 2));
  const auto g = optimal_spec(WindowFamily::Gauss, 5, pi / 2);
  CHECK(e1_numeric(g, pi / 2) <= std::sqrt(2 / pi) * std::exp(-5 * pi / 4) / std::sqrt(5 * (pi - pi / 2)));
}

TEST_CASE("gauss frequency mismatch at omega = 0 is a complementary error integral") {
  for (double delta : deltas) {
    const int m = 5;
    const auto g = optimal_spec(WindowFamily::Gauss, m, delta);
    const double sigma = std::sqrt(g.sigma2());
    const oracle::ld lo = pi * sigma / std::sqrt(2.0);
    const oracle::ld tail = oracle::gauss_legendre([](oracle::ld s) { return std::exp(-s * s); }, lo, lo + 40, 2000);
    const double expect = double(2 * tail / std::sqrt(oracle::kPiL));
    CHECK(std::fabs(delta_function(g, 0.0) - expect) < 1e-10);
  }
}

TEST_CASE("e2") {
  CHECK(e2_numeric(optimal_spec(WindowFamily::Sinh, 5, pi / 2)) == 0.0);
  CHECK(e2_numeric(optimal_spec(WindowFamily::CKB, 5, pi / 2)) == 0.0);
  for (int m : {2, 5, 9}) {
    for (double delta : deltas) {
      const auto g = optimal_spec(WindowFamily::Gauss, m, delta);
      const double s2 = g.sigma2(), sigma = std::sqrt(s2);
      const double estimate = std::sqrt(2.0) / (pi * m) * std::sqrt(1 + s2 / (2 * m)) * std::exp(-m * m / (2 * s2));
      const double e2 = e2_numeric(g);
      CHECK(e2 <= estimate);
      // int_m^inf exp(-t^2/sigma^2) = sigma sqrt(pi)/2 erfc(m/sigma)
      const double phi_m = std::exp(-m * m / (2 * s2));
      const double exact = std::sqrt(2.0) / (pi * m) *
                           std::sqrt(phi_m * phi_m + sigma * std::sqrt(pi) / 2 * std::erfc(m / sigma));
      CHECK(e2 == doctest::Approx(exact).epsilon(1e-10));
    }
  }
}

TEST_CASE("closed forms") {
  CHECK(bound_closed_form(WindowFamily::Sinh, 10, pi / 2) == doctest::Approx(std::exp(-5 * pi)).epsilon(1e-15));
  CHECK(bound_closed_form(WindowFamily::Sinh, 10, pi / 2) == doctest::Approx(1.507e-7).epsilon(1e-3));
  for (int m = 2; m <= 12; ++m) {
    for (double delta : deltas) {
      CHECK(bound_closed_form(WindowFamily::Gauss, m, delta) / bound_closed_form(WindowFamily::ModGauss, m, delta, 0.0) ==
            doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(bound_closed_form(WindowFamily::CKB, 2, 0.6 * pi), PreconditionError);
  CHECK_THROWS_AS(bound_closed_form(WindowFamily::ModGauss, 5, pi / 2, pi / 2), PreconditionError);
  CHECK(bound_hypothesis_violation(WindowFamily::CKB, 3, 3 * pi / 4).find("ckb") != std::string::npos);
  CHECK(bound_hypothesis_violation(WindowFamily::CKB, 4, 3 * pi / 4).empty());
  const double x = 4 * pi / 2;
  CHECK(bound_closed_form(WindowFamily::CKB, 4, pi / 2) ==
        doctest::Approx((7.0 / 8 * x + 7 / pi * x * x) * std::exp(-x)).epsilon(1e-15));
}

TEST_CASE("closed-form ordering sinh < ckb < gauss") {
  for (int m = 4; m <= 20; ++m) {
    const double s = bound_closed_form(WindowFamily::Sinh, m, pi / 2);
    const double c = bound_closed_form(WindowFamily::CKB, m, pi / 2);
    const double g = bound_closed_form(WindowFamily::Gauss, m, pi / 2);
    CHECK(s < c);
    CHECK(s < g);
    // the m^2 prefactor keeps the ckb constant above the gaussian one until m = 9
    if (m >= 9) CHECK(c < g);
    if (m <= 8) CHECK(c > g);
  }
}

TEST_CASE("e1 agrees with the split diagnostics") {
  for (double delta : deltas) {
    for (int m : {3, 6, 9}) {
      const auto s = optimal_spec(WindowFamily::Sinh, m, delta);
      CHECK(std::fabs(e1_numeric(s, delta) - delta_split(s, delta).e1) < 1e-9);
    }
  }
}

TEST_CASE("bound constants dominate the measured error") {
  for (auto fam : {WindowFamily::Gauss, WindowFamily::Sinh, WindowFamily::CKB}) {
    for (double delta : deltas) {
      for (int m : {2, 4, 7, 10}) {
        if (fam == WindowFamily::CKB && delta > (m - 1) * pi / m) continue;
        const auto spec = optimal_spec(fam, m, delta);
        const auto b = numeric_bound(spec, delta);
        CAPTURE(spec.describe());
        CHECK(b.total >= std::max(b.e1, b.e2));
        CHECK(max_reconstruction_error(spec, delta, -1.0, 1.0, 4001) <= b.total);
        if (fam == WindowFamily::Sinh) {
          // |Delta1 - Delta2| <= max(Delta1, Delta2 - Delta1) <= 2 e^-beta / (1 + e^-beta);
          // e^-beta itself is exceeded by up to ~11% on this grid
          const double e = std::exp(-spec.beta());
          CHECK(b.e1 <= 2 * e / (1 + e));
        } else {
          CHECK(b.total <= bound_closed_form(fam, m, delta) * (1 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("closed-form breakdown scales with the norm") {
  const auto b = closed_form_bound(WindowFamily::Sinh, 6, pi / 2, 0.0, 2.5);
  CHECK(b.total == doctest::Approx(2.5 * std::exp(-6 * pi / 2)).epsilon(1e-15));
  CHECK(b.method == BoundMethod::ClosedForm);
  CHECK(method_name(b.method) == "closed_form");
}

TEST_CASE("domain errors") {
  const auto s = optimal_spec(WindowFamily::Sinh, 5, pi / 2);
  CHECK_THROWS_AS(e1_numeric(s, 0.0), DomainError);
  CHECK_THROWS_AS(e1_numeric(s, pi), DomainError);
}
