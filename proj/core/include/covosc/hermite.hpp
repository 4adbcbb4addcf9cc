#pragma once

#include <vector>

namespace covosc {

/// Highest excitation number for which hermite_phi is certified stable
/// (relative error below 1e-10 against the exact value at the origin).
inline constexpr int hermite_max_order = 64;

/// Orthonormal harmonic-oscillator eigenfunction
///   phi_k(x) = (sqrt(pi) 2^k k!)^(-1/2) H_k(x) exp(-x^2/2),
/// evaluated by upward recurrence on the normalized functions so that no
/// intermediate overflows for k up to hermite_max_order.
///
/// Throws UnsupportedOrderError for k < 0 or k > hermite_max_order.
double hermite_phi(int k, double x);

/// phi_0(x) ... phi_k_max(x) in one recurrence sweep.
std::vector<double> hermite_phi_sequence(int k_max, double x);

}  // namespace covosc
