#pragma once

#include <utility>

namespace covosc {

/// The squeeze parameter appears in two conventions that differ by a factor
/// of two in the exponent: the wave-function form exp(±eta) scaling the
/// normal-mode Gaussians, and the boost form exp(±2 eta) scaling the
/// light-cone coordinates. Conversion is exact: eta_wf = 2 * eta_boost.
enum class SqueezeConvention { wavefunction, boost };

struct SqueezeParameter {
  double value = 0.0;
  SqueezeConvention convention = SqueezeConvention::wavefunction;
};

SqueezeParameter to_wavefunction(SqueezeParameter eta);
SqueezeParameter to_boost(SqueezeParameter eta);

/// Two identical oscillators of mass m and spring constant K, coupled with
/// strength C. Positive definiteness requires |C| < K.
struct OscillatorCoupling {
  double mass = 1.0;
  double spring = 1.0;
  double coupling = 0.0;

  /// Throws DomainError (m or K nonpositive) or SingularCouplingError (|C| >= K).
  void validate() const;
};

/// Frequencies of the +-45 degree normal modes y1 = (x1-x2)/sqrt2,
/// y2 = (x1+x2)/sqrt2. The y1 spring is K - C, the y2 spring is K + C.
struct NormalModeForm {
  double omega1 = 1.0;  // relative mode, sqrt((K-C)/m)
  double omega2 = 1.0;  // center mode,   sqrt((K+C)/m)
};

NormalModeForm normal_modes(const OscillatorCoupling& c);

/// Geometric mean sqrt(omega1*omega2) = (sqrt(K^2-C^2)/m)^(1/2); the single
/// frequency scale of the coupled system, and the one used when a thermal
/// map needs "the" mode frequency.
double mean_mode_frequency(const OscillatorCoupling& c);

/// Squeeze parameter as the coupling-strength measure
/// eta = (1/2) ln((K+C)/(K-C)), in the wave-function convention.
SqueezeParameter eta_paper(const OscillatorCoupling& c);

/// Squeeze parameter for which the squeezed Gaussian is the exact ground
/// state of the coupled Hamiltonian, eta = (1/4) ln((K-C)/(K+C)), in units
/// where lengths carry the scale (m sqrt(K^2-C^2))^(1/4). Satisfies
/// |eta_canonical| = eta_paper/2; its sign records which mode is soft
/// (negative means y1).
SqueezeParameter eta_canonical(const OscillatorCoupling& c);

/// (x1, x2) -> (y1, y2) and back; an exact orthogonal rotation.
std::pair<double, double> to_normal_coordinates(double x1, double x2);
std::pair<double, double> from_normal_coordinates(double y1, double y2);

/// H = (p1^2 + p2^2)/(2m) + (1/2)[K(x1^2 + x2^2) + 2C x1 x2]
double hamiltonian_coupled(double x1, double x2, double p1, double p2,
                           const OscillatorCoupling& c);

/// The same energy in normal coordinates:
/// (py1^2 + py2^2)/(2m) + (m/2)(omega1^2 y1^2 + omega2^2 y2^2).
/// Equals hamiltonian_coupled on rotated phase points exactly.
double hamiltonian_normal(double y1, double y2, double py1, double py2,
                          const NormalModeForm& modes, double mass);

/// Squeezed two-variable ground state
///   psi_eta(x1, x2) = pi^(-1/2) exp{-(e^eta y1^2 + e^-eta y2^2)/2}
/// with eta in the wave-function convention (boost-tagged input is converted).
/// Positive everywhere, symmetric under x1 <-> x2, unit L2 norm for every eta.
double ground_state_psi(SqueezeParameter eta, double x1, double x2);

}  // namespace covosc
