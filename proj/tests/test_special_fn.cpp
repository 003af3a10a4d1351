#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "regshannon/errors.hpp"
#include "regshannon/special_fn.hpp"

using namespace regshannon;
namespace rs = regshannon;

namespace {
constexpr double pi = std::numbers::pi;

double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }
}  // namespace

TEST_CASE("sin_pi and sinc are exact at the integers") {
  for (int k = -50; k <= 50; ++k) {
    CHECK(sin_pi(k) == 0.0);
    if (k != 0) CHECK(sinc(k) == 0.0);
  }
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(0.5) == doctest::Approx(2.0 / pi).epsilon(1e-15));
  CHECK(sin_pi(0.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(sin_pi(1e6 + 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sinc(-0.3) == sinc(0.3));
}

TEST_CASE("bessel functions against frozen high-precision values") {
  for (const auto& r : oracle::kSpecial) {
    CAPTURE(r.x);
    CHECK(rel(bessel_i0(r.x), r.i0) < 1e-13);
    CHECK(rel(bessel_i1(r.x), r.i1) < 1e-13);
    CHECK(std::fabs(bessel_j1(r.x) - r.j1) < 1e-13);
    CHECK(rel(sine_integral(r.x), r.si) < 1e-14);
    if (r.x <= 60.0) CHECK(rel(struve_l0(r.x), r.l0) < 1e-13);
    CHECK(rel(bessel_i0_minus_struve_l0(r.x), r.i0_minus_l0) < 1e-12);
  }
}

TEST_CASE("bessel functions against independent series and integrals") {
  for (double x = 0.0; x <= 40.0; x += 0.37) {
    CAPTURE(x);
    CHECK(rel(bessel_i0(x), double(oracle::i0_series(x))) < 1e-13);
    CHECK(std::fabs(bessel_i1(x) - double(oracle::i1_series(x))) <= 1e-13 * std::max(1.0, double(oracle::i1_series(x))));
    CHECK(std::fabs(bessel_j1(x) - double(oracle::j1_integral(x))) < 1e-13);
    CHECK(std::fabs(sine_integral(x) - double(oracle::si_integral(x))) < 1e-13);
  }
  for (double x = 0.1; x <= 30.0; x += 0.9) {
    CHECK(rel(struve_l0(x), double(oracle::l0_integral(x))) < 1e-12);
  }
}

TEST_CASE("j1 is continuous across its regime switches") {
  for (double x : {12.0, 17.0}) {
    const double h = 1e-9;
    CHECK(std::fabs(bessel_j1(x - h) - bessel_j1(x + h)) < 1e-9);
    CHECK(std::fabs(bessel_j1(x) - double(oracle::j1_integral(x))) < 1e-13);
  }
  for (double x = 17.0; x <= 500.0; x += 7.3) {
    CHECK(std::fabs(bessel_j1(x) - double(oracle::j1_integral(x))) < 1e-12);
  }
}

TEST_CASE("modified bessel switchover at 15 and scaled forms") {
  CHECK(rel(bessel_i0(15.0 - 1e-12), bessel_i0(15.0 + 1e-12)) < 1e-11);
  CHECK(rel(bessel_i1(15.0 - 1e-12), bessel_i1(15.0 + 1e-12)) < 1e-11);
  for (double x : {0.5, 10.0, 15.5, 100.0, 700.0}) {
    CHECK(rel(bessel_i0_scaled(x), std::exp(-x) * double(oracle::i0_series(x))) < 1e-13);
    CHECK(rel(bessel_i1_scaled(x), std::exp(-x) * double(oracle::i1_series(x))) < 1e-13);
  }
  CHECK(std::isfinite(bessel_i0_scaled(1e6)));
  CHECK(bessel_i0_scaled(1e6) == doctest::Approx(1.0 / std::sqrt(2 * pi * 1e6)).epsilon(1e-6));
}

TEST_CASE("i0 minus one keeps relative accuracy near zero") {
  for (double x : {1e-8, 1e-4, 0.01, 0.3, 2.0, 20.0}) {
    const double ref = double(oracle::i0m1_series(x));
    CHECK(rel(bessel_i0m1(x), ref) < 1e-13);
  }
  CHECK(bessel_i0m1(0.0) == 0.0);
}

TEST_CASE("i0 - l0 stays accurate where both are huge") {
  // I0 - L0 ~ 2 / (pi x) for large x
  for (double x : {100.0, 300.0, 1000.0}) {
    const double v = bessel_i0_minus_struve_l0(x);
    CHECK(v > 0.0);
    CHECK(rel(v, 2.0 / (pi * x)) < 2.0 / (x * x));
  }
  CHECK(bessel_i0_minus_struve_l0(0.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("sine integral limits and switchover") {
  CHECK(sine_integral(0.0) == 0.0);
  CHECK(rel(sine_integral(6.0 - 1e-12), sine_integral(6.0 + 1e-12)) < 1e-12);
  CHECK(sine_integral(1e6) == doctest::Approx(pi / 2).epsilon(1e-6));
  CHECK(sine_integral(pi) == doctest::Approx(1.85193705198247).epsilon(1e-13));
}

TEST_CASE("domain errors are reported, not clamped") {
  CHECK_THROWS_AS(bessel_i0(-1.0), DomainError);
  CHECK_THROWS_AS(bessel_i1(-0.5), DomainError);
  CHECK_THROWS_AS(bessel_j1(-2.0), DomainError);
  CHECK_THROWS_AS(struve_l0(-1.0), DomainError);
  CHECK_THROWS_AS(sine_integral(-1.0), DomainError);
  CHECK_THROWS_AS(bessel_i0(NAN), DomainError);
  CHECK_THROWS_AS(sinc(INFINITY), DomainError);
}
