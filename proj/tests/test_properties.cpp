#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "regshannon/harness.hpp"
#include "regshannon/quadrature.hpp"
#include "regshannon/reconstruction.hpp"
#include "regshannon/special_fn.hpp"
#include "regshannon/windows.hpp"

using namespace regshannon;

namespace {
constexpr double pi = std::numbers::pi;

std::vector<WindowSpec> some_specs(int m, double delta) {
  return {optimal_spec(WindowFamily::Gauss, m, delta), optimal_spec(WindowFamily::ModGauss, m, delta, 0.3),
          optimal_spec(WindowFamily::Sinh, m, delta), alpha_spec(WindowFamily::CKB, m, delta, 1.0)};
}

SampleSet random_samples(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::normal_distribution<double> g;
  SampleSet s;
  s.k_min = lo;
  s.k_max = hi;
  s.delta = pi / 2;
  for (auto k = lo; k <= hi; ++k) s.values.push_back(g(rng));
  return s;
}
}  // namespace

TEST_CASE("reconstruction is linear") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ut(-3.0, 3.0), uc(-2.0, 2.0);
  for (const auto& spec : some_specs(6, pi / 3)) {
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_samples(rng, -12, 12);
      auto y = random_samples(rng, -12, 12);
      const double a = uc(rng), b = uc(rng), t = ut(rng);
      SampleSet z = x;
      for (std::size_t i = 0; i < z.values.size(); ++i) z.values[i] = a * x.values[i] + b * y.values[i];
      const double lhs = reconstruct(z, spec, t);
      const double rhs = a * reconstruct(x, spec, t) + b * reconstruct(y, spec, t);
      CHECK(std::fabs(lhs - rhs) <= 1e-13 * (1 + std::fabs(rhs)));
    }
  }
}

TEST_CASE("reflected samples give a reflected reconstruction") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ut(-4.0, 4.0);
  for (const auto& spec : some_specs(5, pi / 2)) {
    auto x = random_samples(rng, -10, 10);
    SampleSet r = x;
    std::reverse(r.values.begin(), r.values.end());
    for (int trial = 0; trial < 40; ++trial) {
      const double t = ut(rng);
      CHECK(reconstruct(r, spec, -t) == doctest::Approx(reconstruct(x, spec, t)).epsilon(1e-13).scale(1));
    }
  }
}

TEST_CASE("samples outside the window support do not matter") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ut(-2.0, 2.0);
  for (const auto& spec : some_specs(4, pi / 4)) {
    auto x = random_samples(rng, -15, 15);
    for (int trial = 0; trial < 40; ++trial) {
      const double t = ut(rng);
      SampleSet y = x;
      for (auto k = y.k_min; k <= y.k_max; ++k) {
        if (std::fabs(t - double(k)) > 4.0) y.values[static_cast<std::size_t>(k - y.k_min)] *= -7.5;
      }
      CHECK(reconstruct(y, spec, t) == reconstruct(x, spec, t));
    }
  }
}

TEST_CASE("integer points are interpolated") {
  std::mt19937_64 rng(14);
  for (const auto& spec : some_specs(3, 2 * pi / 3)) {
    auto x = random_samples(rng, -8, 8);
    for (int k = -4; k <= 4; ++k) CHECK(reconstruct(x, spec, k) == x.at(k));
  }
}

TEST_CASE("windows are even and peak at zero") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  for (int m : {2, 5, 9}) {
    for (const auto& spec : some_specs(m, pi / 2)) {
      const double peak = eval_window(spec, 0.0);
      for (int i = 0; i < 100; ++i) {
        const double t = m * ut(rng);
        const double v = eval_window(spec, t);
        CHECK(v == eval_window(spec, -t));
        if (spec.family() != WindowFamily::ModGauss) CHECK(v >= 0.0);
        CHECK(v <= peak);
        CHECK(window_ft(spec, 3 * t) == doctest::Approx(window_ft(spec, -3 * t)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("quadrature is additive over subintervals") {
  const auto f = [](double x) { return std::exp(-x) * std::cos(3 * x) + bessel_j1(2 * x); };
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (int i = 0; i < 30; ++i) {
    double a = u(rng), c = u(rng);
    if (a > c) std::swap(a, c);
    const double b = a + (c - a) * 0.37;
    const double whole = integrate(f, a, c).value;
    const double parts = integrate(f, a, b).value + integrate(f, b, c).value;
    CHECK(std::fabs(whole - parts) < 1e-11);
  }
}

TEST_CASE("larger m gives smaller error for the sinh window") {
  for (double d : {pi / 4, pi / 2, 3 * pi / 4}) {
    double prev = INFINITY;
    for (int m = 2; m <= 10; ++m) {
      const double e = max_reconstruction_error(optimal_spec(WindowFamily::Sinh, m, d), d, -1.0, 1.0, 2001);
      CHECK(e < prev);
      prev = e;
    }
  }
}
