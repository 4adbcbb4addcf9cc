#pragma once

#include <functional>

namespace covosc {

/// Accuracy request for the adaptive integrators.
struct QuadratureSpec {
  /// Absolute tolerance on the integral value. Must be positive.
  double abs_tol = 1e-10;
  /// Panel budget; integration fails with AccuracyError once exceeded.
  int max_intervals = 2000;
};

struct IntegralEstimate {
  double value = 0.0;
  /// Certified-by-construction bound; <= spec.abs_tol whenever the call returns.
  double error = 0.0;
};

/// Unbounded integrals are truncated at this half-width. Integrands must
/// decay at least as fast as a Gaussian tail beyond |x| = 8 for the
/// truncation to be below every tolerance this library works at.
inline constexpr double integration_half_width = 12.0;

/// Adaptive Gauss-Kronrod (7/15) integration of f over
/// [-integration_half_width, +integration_half_width].
IntegralEstimate integrate_1d(const std::function<double(double)>& f,
                              const QuadratureSpec& spec = {});

/// Same, over an explicit interval [a, b].
IntegralEstimate integrate_1d(const std::function<double(double)>& f, double a, double b,
                              const QuadratureSpec& spec = {});

/// Iterated 2-d integration (outer axis = second argument). The inner
/// tolerance is derived from spec.abs_tol so the reported error bound still
/// honors it.
IntegralEstimate integrate_2d(const std::function<double(double, double)>& f,
                              const QuadratureSpec& spec = {});

IntegralEstimate integrate_2d(const std::function<double(double, double)>& f, double ax,
                              double bx, double ay, double by,
                              const QuadratureSpec& spec = {});

}  // namespace covosc
