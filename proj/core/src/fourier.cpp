#include "covosc/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "covosc/errors.hpp"

namespace covosc {

double fourier_2d(const std::function<double(double, double)>& psi,
                  const FourierConvention& convention, double q_z, double q_0,
                  const QuadratureSpec& spec) {
  if (std::abs(convention.sign_z) != 1 || std::abs(convention.sign_t) != 1) {
    throw DomainError("fourier kernel signs must be +1 or -1");
  }
  const double sz = convention.sign_z;
  const double st = convention.sign_t;
  const double norm = 1.0 / (2.0 * std::numbers::pi);

  const double real_part =
      integrate_2d(
          [&](double z, double t) { return psi(z, t) * std::cos(sz * q_z * z + st * q_0 * t); },
          spec)
          .value;
  const double imag_part =
      integrate_2d(
          [&](double z, double t) { return psi(z, t) * std::sin(sz * q_z * z + st * q_0 * t); },
          spec)
          .value;

  if (std::abs(imag_part) * norm > spec.abs_tol) {
    throw ConventionError("fourier transform has imaginary residual " +
                          std::to_string(imag_part * norm) +
                          "; integrand violates the kernel symmetry");
  }
  return real_part * norm;
}

}  // namespace covosc
