#include "covosc/coupled_oscillator.hpp"

#include <cmath>
#include <numbers>

#include "covosc/errors.hpp"

namespace covosc {

namespace {
constexpr double inv_sqrt_pi = 0.5641895835477563;  // pi^(-1/2)
constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
}  // namespace

SqueezeParameter to_wavefunction(SqueezeParameter eta) {
  if (eta.convention == SqueezeConvention::wavefunction) {
    return eta;
  }
  return {2.0 * eta.value, SqueezeConvention::wavefunction};
}

SqueezeParameter to_boost(SqueezeParameter eta) {
  if (eta.convention == SqueezeConvention::boost) {
    return eta;
  }
  return {0.5 * eta.value, SqueezeConvention::boost};
}

void OscillatorCoupling::validate() const {
  if (!(mass > 0.0) || !(spring > 0.0)) {
    throw DomainError("oscillator coupling requires mass > 0 and spring > 0");
  }
  if (!(std::abs(coupling) < spring)) {
    throw SingularCouplingError("singular coupling: |C| >= K");
  }
}

NormalModeForm normal_modes(const OscillatorCoupling& c) {
  c.validate();
  return {std::sqrt((c.spring - c.coupling) / c.mass),
          std::sqrt((c.spring + c.coupling) / c.mass)};
}

double mean_mode_frequency(const OscillatorCoupling& c) {
  const NormalModeForm modes = normal_modes(c);
  return std::sqrt(modes.omega1 * modes.omega2);
}

SqueezeParameter eta_paper(const OscillatorCoupling& c) {
  c.validate();
  return {0.5 * std::log((c.spring + c.coupling) / (c.spring - c.coupling)),
          SqueezeConvention::wavefunction};
}

SqueezeParameter eta_canonical(const OscillatorCoupling& c) {
  c.validate();
  return {0.25 * std::log((c.spring - c.coupling) / (c.spring + c.coupling)),
          SqueezeConvention::wavefunction};
}

std::pair<double, double> to_normal_coordinates(double x1, double x2) {
  return {(x1 - x2) * inv_sqrt2, (x1 + x2) * inv_sqrt2};
}

std::pair<double, double> from_normal_coordinates(double y1, double y2) {
  return {(y2 + y1) * inv_sqrt2, (y2 - y1) * inv_sqrt2};
}

double hamiltonian_coupled(double x1, double x2, double p1, double p2,
                           const OscillatorCoupling& c) {
  return (p1 * p1 + p2 * p2) / (2.0 * c.mass) +
         0.5 * (c.spring * (x1 * x1 + x2 * x2) + 2.0 * c.coupling * x1 * x2);
}

double hamiltonian_normal(double y1, double y2, double py1, double py2,
                          const NormalModeForm& modes, double mass) {
  return (py1 * py1 + py2 * py2) / (2.0 * mass) +
         0.5 * mass *
             (modes.omega1 * modes.omega1 * y1 * y1 + modes.omega2 * modes.omega2 * y2 * y2);
}

double ground_state_psi(SqueezeParameter eta, double x1, double x2) {
  const double e = to_wavefunction(eta).value;
  const auto [y1, y2] = to_normal_coordinates(x1, x2);
  return inv_sqrt_pi * std::exp(-0.5 * (std::exp(e) * y1 * y1 + std::exp(-e) * y2 * y2));
}

}  // namespace covosc
