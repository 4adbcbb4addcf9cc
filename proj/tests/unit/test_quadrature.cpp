#include <cmath>

#include "covosc/errors.hpp"
#include "covosc/quadrature.hpp"
#include "doctest.h"
#include "oracles.hpp"

using covosc::integrate_1d;
using covosc::integrate_2d;
using covosc::QuadratureSpec;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("gaussian integrals") {
  const QuadratureSpec spec{1e-12, 2000};

  const auto gauss = integrate_1d([](double x) { return std::exp(-x * x); }, spec);
  CHECK(std::abs(gauss.value - std::sqrt(M_PI)) < 1e-12);
  CHECK(gauss.error <= spec.abs_tol);

  const auto second_moment =
      integrate_1d([](double x) { return x * x * std::exp(-x * x); }, spec);
  CHECK(std::abs(second_moment.value - 0.5 * std::sqrt(M_PI)) < 1e-12);
}

TEST_CASE("polynomial moments up to degree 20") {
  // The high moments reach ~1e6, so the 1e-12 target scales with the value.
  for (int j = 0; j <= 10; ++j) {
    const double exact = oracles::gaussian_moment(j);
    const double scale = std::max(1.0, exact);
    const QuadratureSpec spec{1e-13 * scale, 2000};
    const auto result = integrate_1d(
        [j](double x) { return std::pow(x, 2 * j) * std::exp(-x * x); }, spec);
    CHECK(std::abs(result.value - exact) < 1e-12 * scale);
  }
}

TEST_CASE("explicit bounds") {
  const auto cubic = integrate_1d([](double x) { return x * x; }, 0.0, 1.0, {1e-13, 100});
  CHECK(cubic.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("normalized two-variable ground state") {
  const QuadratureSpec spec{1e-10, 2000};
  const auto norm = integrate_2d(
      [](double x1, double x2) { return std::exp(-(x1 * x1 + x2 * x2)) / M_PI; }, spec);
  CHECK(std::abs(norm.value - 1.0) < 1e-10);
  CHECK(norm.error <= spec.abs_tol);
}

TEST_CASE("budget exhaustion raises an accuracy failure with the best estimate") {
  const QuadratureSpec starved{1e-13, 16};
  try {
    integrate_1d([](double x) { return std::cos(40.0 * x); }, starved);
    FAIL("expected AccuracyError");
  } catch (const covosc::AccuracyError& e) {
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_estimate() > starved.abs_tol);
  }
}

TEST_CASE("invalid requests are rejected") {
  CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, {0.0, 100}),
                  covosc::DomainError);
  CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, {1e-10, 0}),
                  covosc::DomainError);
  CHECK_THROWS_AS(integrate_1d([](double) { return 1.0; }, 2.0, -2.0, {}),
                  covosc::DomainError);
}

TEST_SUITE_END();
