#include "covosc/hermite.hpp"

#include <cmath>
#include <string>

#include "covosc/errors.hpp"

namespace covosc {

namespace {

constexpr double inv_quartic_root_pi = 0.7511255444649425;  // pi^(-1/4)

void check_order(int k) {
  if (k < 0 || k > hermite_max_order) {
    throw UnsupportedOrderError("hermite order " + std::to_string(k) +
                                " outside supported range [0, " +
                                std::to_string(hermite_max_order) + "]");
  }
}

}  // namespace

double hermite_phi(int k, double x) {
  check_order(k);
  double prev = 0.0;
  double cur = inv_quartic_root_pi * std::exp(-0.5 * x * x);
  for (int n = 1; n <= k; ++n) {
    const double next = x * std::sqrt(2.0 / n) * cur - std::sqrt((n - 1.0) / n) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> hermite_phi_sequence(int k_max, double x) {
  check_order(k_max);
  std::vector<double> phi(static_cast<std::size_t>(k_max) + 1);
  phi[0] = inv_quartic_root_pi * std::exp(-0.5 * x * x);
  if (k_max >= 1) {
    phi[1] = x * std::sqrt(2.0) * phi[0];
  }
  for (int n = 2; n <= k_max; ++n) {
    phi[n] = x * std::sqrt(2.0 / n) * phi[n - 1] - std::sqrt((n - 1.0) / n) * phi[n - 2];
  }
  return phi;
}

}  // namespace covosc
