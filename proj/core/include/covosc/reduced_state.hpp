#pragma once

#include <vector>

namespace covosc {

// Everything in this header takes the squeeze parameter in the wave-function
// convention (the exponent of the normal-mode Gaussian scaling). All
// quantities are even in eta.

/// Schmidt data of the squeezed two-variable ground state, truncated at
/// excitation k_max. The coefficients form a geometric sequence
///   c_k = tanh^k(eta/2) / cosh(eta/2),  lambda_k = c_k^2,
/// so the discarded probability has the exact value
///   tail = tanh^(2(k_max+1))(eta/2).
struct SchmidtSpectrum {
  double eta = 0.0;
  int k_max = 0;
  std::vector<double> c;       ///< Schmidt coefficients c_0 ... c_k_max
  std::vector<double> lambda;  ///< occupation probabilities c_k^2
  double tail = 0.0;           ///< 1 - sum(lambda), exact geometric remainder
};

SchmidtSpectrum schmidt_spectrum(double eta, int k_max);

/// Smallest k_max whose certified tail is <= tail_tol; 0 when eta == 0.
/// tail_tol must lie in (0, 1).
int truncation_order(double eta, double tail_tol);

/// Pure-state density matrix of the squeezed ground state,
/// psi(x1,x2) * psi(x1',x2').
double pure_density(double eta, double x1, double x2, double x1_prime, double x2_prime);

/// Reduced density matrix rho(x, x') after tracing out the second variable,
/// evaluable either in closed form,
///   rho(x,x') = (pi cosh eta)^(-1/2)
///               exp{-(x+x')^2/(4 cosh eta) - cosh(eta) (x-x')^2 / 4},
/// or as the spectral sum  sum_k lambda_k phi_k(x) phi_k(x') truncated at
/// k_max. Tr(rho) = 1, rho is symmetric, and the diagonal is positive.
class DensityKernel {
 public:
  static DensityKernel closed_form(double eta);
  /// Throws UnsupportedOrderError when k_max exceeds the Hermite stability range.
  static DensityKernel spectral(double eta, int k_max);

  double operator()(double x, double x_prime) const;

  double eta() const { return eta_; }
  bool is_spectral() const { return k_max_ >= 0; }
  int k_max() const { return k_max_; }

 private:
  DensityKernel(double eta, int k_max);

  double eta_;
  int k_max_;  // -1 selects the closed form
  std::vector<double> lambda_;
};

double reduced_density_closed(double eta, double x, double x_prime);
double reduced_density_spectral(double eta, int k_max, double x, double x_prime);

/// Tr(rho^2) = 1 / cosh(eta); equals 1 iff eta == 0.
double purity(double eta);

/// von Neumann entropy of the reduced state, in units of the Boltzmann
/// constant:
///   S = 2 [cosh^2(eta/2) ln cosh(eta/2) - sinh^2(eta/2) ln sinh(eta/2)],
/// with S(0) = 0 taken by continuity. Grows like eta - 2 ln 2 + 1.
double entropy(double eta);

/// Mean excitation number of the reduced state, sum_k k lambda_k = sinh^2(eta/2).
double mean_excitation(double eta);

struct ThermalPoint {
  double temperature = 0.0;
  double omega = 1.0;
};

/// Effective temperature from inverting tanh(eta/2) = exp(-omega/T) at mode
/// frequency omega (hbar = k_B = 1): T = omega / ln(coth(eta/2)).
/// Requires eta > 0; throws NoTemperatureError otherwise.
ThermalPoint temperature_from_squeeze(double eta, double omega);

/// Total variant: T = 0 exactly at eta == 0, even extension T(|eta|) otherwise.
ThermalPoint temperature_from_squeeze_total(double eta, double omega);

/// Wigner function of the reduced state,
///   W(x, p) = exp{-(x^2 + p^2)/cosh eta} / (pi cosh eta);
/// an isotropic Gaussian that spreads with cosh eta in both directions.
double wigner_reduced(double eta, double x, double p);

}  // namespace covosc
