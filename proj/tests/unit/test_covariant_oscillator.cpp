#include <cmath>

#include "covosc/covariant_oscillator.hpp"
#include "covosc/errors.hpp"
#include "covosc/fourier.hpp"
#include "covosc/quadrature.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covosc;

TEST_SUITE_BEGIN("covariant_oscillator");

TEST_CASE("relative coordinates") {
  const FourVector a{0.4, -1.0, 2.2, 0.9};
  const TwoBodyCoordinates same = relative_coordinates(a, a);
  for (int i = 0; i < 4; ++i) {
    CHECK(same.relative[i] == 0.0);
    CHECK(same.center[i] == a[i]);
  }

  const FourVector b{0.4, -1.0, 2.2 - 2.0 * std::sqrt(2.0), 0.9};
  const TwoBodyCoordinates split = relative_coordinates(a, b);
  CHECK(split.relative[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(split.relative[0] == 0.0);

  // Linearity in both arguments.
  oracles::Uniform rng;
  for (int trial = 0; trial < 50; ++trial) {
    FourVector u{}, v{}, w{};
    for (int i = 0; i < 4; ++i) {
      u[i] = rng(-2.0, 2.0);
      v[i] = rng(-2.0, 2.0);
      w[i] = rng(-2.0, 2.0);
    }
    const double alpha = rng(-1.5, 1.5);
    for (int i = 0; i < 4; ++i) {
      const double lhs =
          relative_coordinates({u[0] + alpha * w[0], u[1] + alpha * w[1],
                                u[2] + alpha * w[2], u[3] + alpha * w[3]},
                               v)
              .relative[i];
      const double rhs = relative_coordinates(u, v).relative[i] +
                         alpha * relative_coordinates(w, {0, 0, 0, 0}).relative[i];
      CHECK(std::abs(lhs - rhs) < 1e-13);
    }
  }
}

TEST_CASE("relative momenta") {
  const FourVector p{1.0, 2.0, 3.0, 4.0};
  const TwoBodyMomenta same = relative_momenta(p, p);
  for (int i = 0; i < 4; ++i) {
    CHECK(same.relative[i] == 0.0);
    CHECK(same.total[i] == 2.0 * p[i]);
  }

  const double half_inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const FourVector pa{0.0, 0.0, half_inv_sqrt2, 0.0};
  const FourVector pb{0.0, 0.0, 0.0, 0.0};
  CHECK(relative_momenta(pa, pb).relative[2] == doctest::Approx(1.0).epsilon(1e-15));
  // The total is independent of the relative normalization.
  CHECK(relative_momenta(pa, pb).total[2] == half_inv_sqrt2);
}

TEST_CASE("boost matrix") {
  const BoostMatrix identity = BoostMatrix::from_rapidity(0.0);
  const SpacetimePoint p{1.3, -0.7};
  CHECK(identity.apply(p).z == p.z);
  CHECK(identity.apply(p).t == p.t);

  oracles::Uniform rng;
  for (int i = 0; i < 100; ++i) {
    const double eta_a = rng(-2.0, 2.0);
    const double eta_b = rng(-2.0, 2.0);
    const SpacetimePoint q{rng(-3.0, 3.0), rng(-3.0, 3.0)};

    const BoostMatrix m = BoostMatrix::from_rapidity(eta_a);
    CHECK(std::abs(m.determinant() - 1.0) < 1e-12);

    const SpacetimePoint composed = boost(boost(q, eta_a), eta_b);
    const SpacetimePoint direct = boost(q, eta_a + eta_b);
    CHECK(std::abs(composed.z - direct.z) < 1e-12);
    CHECK(std::abs(composed.t - direct.t) < 1e-12);

    const SpacetimePoint boosted = boost(q, eta_a);
    CHECK(std::abs((boosted.z * boosted.z - boosted.t * boosted.t) -
                   (q.z * q.z - q.t * q.t)) < 1e-12);
  }
}

TEST_CASE("light-cone variables") {
  const LightconePoint on_cone = to_lightcone({1.0, 1.0});
  CHECK(on_cone.u == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(on_cone.v) < 1e-15);

  oracles::Uniform rng;
  for (int i = 0; i < 100; ++i) {
    const SpacetimePoint p{rng(-4.0, 4.0), rng(-4.0, 4.0)};
    const SpacetimePoint back = from_lightcone(to_lightcone(p));
    CHECK(std::abs(back.z - p.z) < 1e-15);
    CHECK(std::abs(back.t - p.t) < 1e-15);

    const LightconePoint lc = to_lightcone(p);
    CHECK(std::abs(2.0 * lc.u * lc.v - (p.z * p.z - p.t * p.t)) < 1e-13);

    // A boost acts diagonally on (u, v).
    const double eta = rng(-2.0, 2.0);
    const LightconePoint boosted_lc = to_lightcone(boost(p, eta));
    CHECK(std::abs(boosted_lc.u - std::exp(eta) * lc.u) < 1e-12);
    CHECK(std::abs(boosted_lc.v - std::exp(-eta) * lc.v) < 1e-12);
  }
}

TEST_CASE("momentum light-cone round trip") {
  oracles::Uniform rng;
  for (int i = 0; i < 100; ++i) {
    const MomentumPoint q{rng(-4.0, 4.0), rng(-4.0, 4.0)};
    const MomentumPoint back = MomentumPoint::from_lightcone(q.q_u(), q.q_v());
    CHECK(std::abs(back.q_z - q.q_z) < 1e-15);
    CHECK(std::abs(back.q_0 - q.q_0) < 1e-15);
  }
}

TEST_CASE("rest-frame wave function") {
  CHECK(psi_rest(0.0, 0.0) == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  // Circular in the (z, t) plane.
  oracles::Uniform rng;
  for (int i = 0; i < 50; ++i) {
    const double z = rng(-3.0, 3.0), t = rng(-3.0, 3.0);
    CHECK(psi_rest(z, t) == psi_rest(t, z));
    // Same function through the light-cone route, up to rounding.
    CHECK(psi_rest(z, t) == doctest::Approx(psi_boosted(0.0, z, t)).epsilon(1e-14));
  }
}

TEST_CASE("boosted wave function: normalization") {
  const auto norm = integrate_2d(
      [](double z, double t) {
        const double psi = psi_boosted(1.0, z, t);
        return psi * psi;
      },
      {1e-10, 4000});
  CHECK(std::abs(norm.value - 1.0) < 1e-10);

  // Larger rapidities via unit-variance light-cone coordinates (unit Jacobian).
  for (const double eta : {-3.0, -1.5, 2.0, 3.0}) {
    const auto scaled = integrate_2d(
        [eta](double su, double sv) {
          const SpacetimePoint p =
              from_lightcone({std::exp(eta) * su, std::exp(-eta) * sv});
          const double psi = psi_boosted(eta, p.z, p.t);
          return psi * psi;
        },
        {1e-10, 4000});
    CHECK(std::abs(scaled.value - 1.0) < 1e-10);
  }
}

TEST_CASE("boosted wave function: squeeze ellipse along the light-cone axes") {
  const double eta = 0.7;
  const auto moment = [eta](const std::function<double(double, double)>& weight) {
    return integrate_2d(
               [&](double z, double t) {
                 const double psi = psi_boosted(eta, z, t);
                 return weight(z, t) * psi * psi;
               },
               {1e-10, 4000})
        .value;
  };

  const double var_z = moment([](double z, double) { return z * z; });
  CHECK(std::abs(var_z - 0.5 * std::cosh(2.0 * eta)) < 1e-8);

  const double var_u = moment([](double z, double t) {
    const double u = to_lightcone({z, t}).u;
    return u * u;
  });
  const double var_v = moment([](double z, double t) {
    const double v = to_lightcone({z, t}).v;
    return v * v;
  });
  const double cov_uv = moment([](double z, double t) {
    const LightconePoint lc = to_lightcone({z, t});
    return lc.u * lc.v;
  });
  CHECK(std::abs(var_u - 0.5 * std::exp(2.0 * eta)) < 1e-8);
  CHECK(std::abs(var_v - 0.5 * std::exp(-2.0 * eta)) < 1e-8);
  CHECK(std::abs(cov_uv) < 1e-8);
}

TEST_CASE("hyperbolic operator annihilates the boosted gaussian") {
  GridSpec grid;
  grid.n_z = grid.n_t = 41;
  for (const double eta : {0.0, 0.5, 1.2, 2.0}) {
    CHECK(oscillator_residual(eta, grid) < 1e-4);
  }

  // Control: a gaussian of the wrong width is far from a solution.
  const double control = hyperbolic_residual(
      [](double z, double t) { return std::exp(-0.6 * (z * z + t * t)); }, grid);
  CHECK(control > 0.1);

  GridSpec outside;
  outside.z_max = 5.0;
  CHECK_THROWS_AS(oscillator_residual(1.0, outside), DomainError);
}

TEST_CASE("momentum-energy wave function") {
  CHECK(phi_boosted(0.0, 0.0, 0.0) == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));

  // Equal to the boosted spatial function with the time argument reflected
  // (the light-cone momentum map swaps the squeezed axes).
  oracles::Uniform rng;
  for (int i = 0; i < 50; ++i) {
    const double a = rng(-3.0, 3.0), b = rng(-3.0, 3.0), eta = rng(-1.5, 1.5);
    CHECK(phi_boosted(eta, a, b) == psi_boosted(eta, a, -b));
  }

  const auto norm = integrate_2d(
      [](double qz, double q0) {
        const double phi = phi_boosted(0.8, qz, q0);
        return phi * phi;
      },
      {1e-10, 4000});
  CHECK(std::abs(norm.value - 1.0) < 1e-10);

  const double var_qz = integrate_2d(
                            [](double qz, double q0) {
                              const double phi = phi_boosted(0.7, qz, q0);
                              return qz * qz * phi * phi;
                            },
                            {1e-10, 4000})
                            .value;
  CHECK(std::abs(var_qz - 0.5 * std::cosh(1.4)) < 1e-8);
}

TEST_CASE("fourier bridge to the momentum-energy wave function") {
  const double eta = 0.8;
  const QuadratureSpec spec{1e-8, 4000};
  const FourierConvention conv;
  const double probes[][2] = {{0.0, 0.0}, {0.5, 0.5}, {-1.0, 0.5}, {1.5, -1.0}, {2.0, 2.0}};
  for (const auto& q : probes) {
    const double transformed = fourier_2d(
        [eta](double z, double t) { return psi_boosted(eta, z, t); }, conv, q[0], q[1], spec);
    CHECK(std::abs(transformed - phi_boosted(eta, q[0], q[1])) < 1e-6);
  }
}

TEST_CASE("the scalar-product kernel gives the reciprocal widths") {
  // With exp(-i(q_z z - q_0 t)) the u integral pairs with q_u instead of q_v,
  // which inverts the squeeze of the transform.
  const double eta = 0.8;
  const QuadratureSpec spec{1e-8, 4000};
  const FourierConvention scalar_kernel{-1, +1};
  const double probes[][2] = {{0.5, 0.5}, {-1.0, 0.5}, {1.5, -1.0}};
  for (const auto& q : probes) {
    const double transformed =
        fourier_2d([eta](double z, double t) { return psi_boosted(eta, z, t); },
                   scalar_kernel, q[0], q[1], spec);
    CHECK(std::abs(transformed - phi_boosted(-eta, q[0], q[1])) < 1e-6);
  }
}

TEST_SUITE_END();
