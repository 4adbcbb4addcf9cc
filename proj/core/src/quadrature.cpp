#include "covosc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "covosc/errors.hpp"

namespace covosc {

namespace {

// Gauss-7 / Kronrod-15 abscissae and weights on [-1, 1] (QUADPACK dqk15).
// Odd-indexed abscissae are the embedded Gauss nodes.
constexpr std::array<double, 8> gk_nodes = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993945,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr std::array<double, 8> kronrod_weights = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
constexpr std::array<double, 4> gauss_weights = {
    0.1294849661688697, 0.2797053914892766, 0.3818300505051189, 0.4179591836734694,
};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kronrod_weights[7] * fc;
  double gauss = gauss_weights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double lo = f(center - half * gk_nodes[i]);
    const double hi = f(center + half * gk_nodes[i]);
    kronrod += kronrod_weights[i] * (lo + hi);
    if (i % 2 == 1) {
      gauss += gauss_weights[i / 2] * (lo + hi);
    }
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  // |K15 - G7| overestimates the Kronrod error for smooth integrands, which
  // is the safe direction for a certified bound.
  p.error = std::abs((kronrod - gauss) * half);
  return p;
}

void validate_spec(const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
  if (spec.max_intervals < 1) {
    throw DomainError("quadrature interval budget must be positive");
  }
}

IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, const QuadratureSpec& spec) {
  validate_spec(spec);
  if (!(a < b)) {
    throw DomainError("integration bounds must satisfy a < b");
  }

  constexpr int initial_panels = 8;
  std::vector<Panel> heap;
  heap.reserve(64);
  const double width = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    heap.push_back(evaluate_panel(f, a + i * width, a + (i + 1) * width));
  }
  std::make_heap(heap.begin(), heap.end());

  auto totals = [&heap]() {
    IntegralEstimate t;
    for (const Panel& p : heap) {
      t.value += p.value;
      t.error += p.error;
    }
    return t;
  };

  IntegralEstimate total = totals();
  while (total.error > spec.abs_tol &&
         static_cast<int>(heap.size()) < spec.max_intervals) {
    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.a + worst.b);
    heap.push_back(evaluate_panel(f, worst.a, mid));
    std::push_heap(heap.begin(), heap.end());
    heap.push_back(evaluate_panel(f, mid, worst.b));
    std::push_heap(heap.begin(), heap.end());

    total = totals();
  }

  if (total.error > spec.abs_tol) {
    throw AccuracyError("quadrature did not converge within the interval budget",
                        total.value, total.error);
  }
  return total;
}

}  // namespace

IntegralEstimate integrate_1d(const std::function<double(double)>& f,
                              const QuadratureSpec& spec) {
  return integrate_adaptive(f, -integration_half_width, integration_half_width, spec);
}

IntegralEstimate integrate_1d(const std::function<double(double)>& f, double a, double b,
                              const QuadratureSpec& spec) {
  return integrate_adaptive(f, a, b, spec);
}

IntegralEstimate integrate_2d(const std::function<double(double, double)>& f,
                              const QuadratureSpec& spec) {
  return integrate_2d(f, -integration_half_width, integration_half_width,
                      -integration_half_width, integration_half_width, spec);
}

IntegralEstimate integrate_2d(const std::function<double(double, double)>& f, double ax,
                              double bx, double ay, double by,
                              const QuadratureSpec& spec) {
  validate_spec(spec);
  if (!(ax < bx) || !(ay < by)) {
    throw DomainError("integration bounds must satisfy a < b");
  }

  // Split the tolerance so that outer error + accumulated inner error still
  // bounds the total by spec.abs_tol.
  QuadratureSpec inner = spec;
  inner.abs_tol = std::max(0.4 * spec.abs_tol / (by - ay), 1e-14);
  QuadratureSpec outer = spec;
  outer.abs_tol = 0.5 * spec.abs_tol;

  const auto row = [&f, &inner, ax, bx](double y) {
    return integrate_adaptive([&f, y](double x) { return f(x, y); }, ax, bx, inner).value;
  };
  const IntegralEstimate outer_result = integrate_adaptive(row, ay, by, outer);
  return {outer_result.value, outer_result.error + (by - ay) * inner.abs_tol};
}

}  // namespace covosc
