#pragma once

#include <array>
#include <functional>

#include "covosc/grid.hpp"

namespace covosc {

// Natural units, c = 1. Only the longitudinal and time-like separations are
// modeled; transverse coordinates do not participate in the boost. Throughout
// this header eta is the boost rapidity (the boost convention of
// SqueezeParameter).

/// Four-vector with components ordered (x, y, z, t).
using FourVector = std::array<double, 4>;

struct SpacetimePoint {
  double z = 0.0;
  double t = 0.0;
};

/// Light-cone coordinates u = (z+t)/sqrt2, v = (z-t)/sqrt2, so that
/// 2uv = z^2 - t^2 and a boost acts diagonally: (u, v) -> (e^eta u, e^-eta v).
struct LightconePoint {
  double u = 0.0;
  double v = 0.0;
};

/// Longitudinal momentum and energy with their light-cone images
/// q_u = (q_0 - q_z)/sqrt2, q_v = (q_0 + q_z)/sqrt2.
struct MomentumPoint {
  double q_z = 0.0;
  double q_0 = 0.0;

  double q_u() const;
  double q_v() const;
  static MomentumPoint from_lightcone(double q_u, double q_v);
};

/// [[cosh eta, sinh eta], [sinh eta, cosh eta]] acting on (z, t).
struct BoostMatrix {
  std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};

  static BoostMatrix from_rapidity(double eta);
  SpacetimePoint apply(const SpacetimePoint& p) const;
  double determinant() const;
};

/// Hadronic center X = (a + b)/2 and constituent separation
/// x = (a - b)/(2 sqrt2). X carries no dynamics here; it is returned for
/// completeness only.
struct TwoBodyCoordinates {
  FourVector center{};
  FourVector relative{};
};
TwoBodyCoordinates relative_coordinates(const FourVector& a, const FourVector& b);

/// Total four-momentum P = p_a + p_b and separation q = sqrt2 (p_a - p_b).
struct TwoBodyMomenta {
  FourVector total{};
  FourVector relative{};
};
TwoBodyMomenta relative_momenta(const FourVector& p_a, const FourVector& p_b);

SpacetimePoint boost(const SpacetimePoint& p, double eta);
LightconePoint to_lightcone(const SpacetimePoint& p);
SpacetimePoint from_lightcone(const LightconePoint& p);

/// Rest-frame ground state pi^(-1/2) exp{-(z^2 + t^2)/2}; circular in the
/// (z, t) plane.
double psi_rest(double z, double t);

/// Boosted (Lorentz-squeezed) ground state
///   psi_eta(z, t) = pi^(-1/2) exp{-(e^(-2 eta) u^2 + e^(2 eta) v^2)/2};
/// unit norm for every eta, elliptic along the light-cone axes.
double psi_boosted(double eta, double z, double t);

/// Momentum-energy wave function
///   phi_eta(q_z, q_0) = pi^(-1/2) exp{-(e^(-2 eta) q_u^2 + e^(2 eta) q_v^2)/2};
/// the exact image of psi_boosted under the default Fourier convention.
double phi_boosted(double eta, double q_z, double q_0);

/// Sup over the grid of |L f| where L = ((z^2 - d^2/dz^2) - (t^2 - d^2/dt^2))/2,
/// second derivatives by central differences with the given step. The grid
/// must stay inside |z|, |t| <= 4 (DomainError otherwise).
double hyperbolic_residual(const std::function<double(double, double)>& f,
                           const GridSpec& grid, double step = 1e-3);

/// hyperbolic_residual applied to psi_boosted(eta); the squeezed ground state
/// is annihilated by L at every rapidity, so this is expected < 1e-4.
double oscillator_residual(double eta, const GridSpec& grid, double step = 1e-3);

}  // namespace covosc
