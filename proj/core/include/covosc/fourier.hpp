#pragma once

#include <functional>

#include "covosc/quadrature.hpp"

namespace covosc {

/// Sign pair of the plane-wave kernel
///   exp(i (sign_z * q_z * z + sign_t * q_0 * t)) / (2 pi).
/// The default (-1, -1) is the convention under which the boosted space-time
/// Gaussian transforms into the momentum-energy Gaussian with the same
/// light-cone widths.
struct FourierConvention {
  int sign_z = -1;
  int sign_t = -1;
};

/// Two-dimensional Fourier transform of a real square-integrable psi with
/// Gaussian decay, evaluated at a single frequency point.
///
/// The result of a transform of a real, centro-symmetric psi is real; the
/// imaginary part is integrated as well and must fall below spec.abs_tol or
/// a ConventionError is thrown. The checked real value is returned.
double fourier_2d(const std::function<double(double, double)>& psi,
                  const FourierConvention& convention, double q_z, double q_0,
                  const QuadratureSpec& spec = {});

}  // namespace covosc
