#include "covosc/covariant_oscillator.hpp"

#include <cmath>
#include <numbers>

#include "covosc/errors.hpp"

namespace covosc {

namespace {
constexpr double inv_sqrt_pi = 0.5641895835477563;
constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
constexpr double residual_window = 4.0;
}  // namespace

double MomentumPoint::q_u() const { return (q_0 - q_z) * inv_sqrt2; }

double MomentumPoint::q_v() const { return (q_0 + q_z) * inv_sqrt2; }

MomentumPoint MomentumPoint::from_lightcone(double q_u, double q_v) {
  return {(q_v - q_u) * inv_sqrt2, (q_v + q_u) * inv_sqrt2};
}

BoostMatrix BoostMatrix::from_rapidity(double eta) {
  const double ch = std::cosh(eta);
  const double sh = std::sinh(eta);
  BoostMatrix b;
  b.m = {{{ch, sh}, {sh, ch}}};
  return b;
}

SpacetimePoint BoostMatrix::apply(const SpacetimePoint& p) const {
  return {m[0][0] * p.z + m[0][1] * p.t, m[1][0] * p.z + m[1][1] * p.t};
}

double BoostMatrix::determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

TwoBodyCoordinates relative_coordinates(const FourVector& a, const FourVector& b) {
  TwoBodyCoordinates out;
  for (int i = 0; i < 4; ++i) {
    out.center[i] = 0.5 * (a[i] + b[i]);
    out.relative[i] = (a[i] - b[i]) / (2.0 * std::numbers::sqrt2);
  }
  return out;
}

TwoBodyMomenta relative_momenta(const FourVector& p_a, const FourVector& p_b) {
  TwoBodyMomenta out;
  for (int i = 0; i < 4; ++i) {
    out.total[i] = p_a[i] + p_b[i];
    out.relative[i] = std::numbers::sqrt2 * (p_a[i] - p_b[i]);
  }
  return out;
}

SpacetimePoint boost(const SpacetimePoint& p, double eta) {
  return BoostMatrix::from_rapidity(eta).apply(p);
}

LightconePoint to_lightcone(const SpacetimePoint& p) {
  return {(p.z + p.t) * inv_sqrt2, (p.z - p.t) * inv_sqrt2};
}

SpacetimePoint from_lightcone(const LightconePoint& p) {
  return {(p.u + p.v) * inv_sqrt2, (p.u - p.v) * inv_sqrt2};
}

double psi_rest(double z, double t) {
  return inv_sqrt_pi * std::exp(-0.5 * (z * z + t * t));
}

double psi_boosted(double eta, double z, double t) {
  const LightconePoint lc = to_lightcone({z, t});
  return inv_sqrt_pi * std::exp(-0.5 * (std::exp(-2.0 * eta) * lc.u * lc.u +
                                        std::exp(2.0 * eta) * lc.v * lc.v));
}

double phi_boosted(double eta, double q_z, double q_0) {
  const MomentumPoint q{q_z, q_0};
  const double qu = q.q_u();
  const double qv = q.q_v();
  return inv_sqrt_pi *
         std::exp(-0.5 * (std::exp(-2.0 * eta) * qu * qu + std::exp(2.0 * eta) * qv * qv));
}

double hyperbolic_residual(const std::function<double(double, double)>& f,
                           const GridSpec& grid, double step) {
  grid.validate();
  if (std::max(std::abs(grid.z_min), std::abs(grid.z_max)) > residual_window ||
      std::max(std::abs(grid.t_min), std::abs(grid.t_max)) > residual_window) {
    throw DomainError("residual grid must stay within |z|, |t| <= 4");
  }
  if (!(step > 0.0)) {
    throw DomainError("finite-difference step must be positive");
  }

  const double inv_h2 = 1.0 / (step * step);
  double sup = 0.0;
  for (int j = 0; j < grid.n_t; ++j) {
    const double t = grid.t(j);
    for (int i = 0; i < grid.n_z; ++i) {
      const double z = grid.z(i);
      const double center = f(z, t);
      const double dzz = (f(z + step, t) - 2.0 * center + f(z - step, t)) * inv_h2;
      const double dtt = (f(z, t + step) - 2.0 * center + f(z, t - step)) * inv_h2;
      const double residual =
          0.5 * ((z * z * center - dzz) - (t * t * center - dtt));
      sup = std::max(sup, std::abs(residual));
    }
  }
  return sup;
}

double oscillator_residual(double eta, const GridSpec& grid, double step) {
  return hyperbolic_residual(
      [eta](double z, double t) { return psi_boosted(eta, z, t); }, grid, step);
}

}  // namespace covosc
