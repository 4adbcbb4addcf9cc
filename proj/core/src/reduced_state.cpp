#include "covosc/reduced_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "covosc/coupled_oscillator.hpp"
#include "covosc/errors.hpp"
#include "covosc/hermite.hpp"

namespace covosc {

namespace {
constexpr double pi = std::numbers::pi;
}

SchmidtSpectrum schmidt_spectrum(double eta, int k_max) {
  if (k_max < 0) {
    throw DomainError("schmidt spectrum requires k_max >= 0");
  }
  const double tau = std::tanh(0.5 * eta);
  const double prefactor = 1.0 / std::cosh(0.5 * eta);

  SchmidtSpectrum s;
  s.eta = eta;
  s.k_max = k_max;
  s.c.resize(static_cast<std::size_t>(k_max) + 1);
  s.lambda.resize(s.c.size());
  for (int k = 0; k <= k_max; ++k) {
    // pow keeps every coefficient at a few ulps; an accumulated product
    // would drift linearly in k.
    const double ck = prefactor * std::pow(tau, k);
    s.c[k] = ck;
    s.lambda[k] = ck * ck;
  }
  s.tail = std::pow(tau * tau, k_max + 1);
  return s;
}

int truncation_order(double eta, double tail_tol) {
  if (!(tail_tol > 0.0) || !(tail_tol < 1.0)) {
    throw DomainError("tail tolerance must lie in (0, 1)");
  }
  const double x = 0.5 * std::abs(eta);
  if (x == 0.0) {
    return 0;
  }
  // ln tanh(x) in a form that stays nonzero where tanh(x) rounds to 1.
  const double log_tanh = std::log1p(-2.0 / (std::expm1(2.0 * x) + 2.0));
  const double required = std::log(tail_tol) / (2.0 * log_tanh);  // bound on k_max + 1
  constexpr double max_terms = 1e8;
  if (!(required < max_terms)) {
    throw DomainError("certified truncation needs more than 1e8 terms at this squeeze");
  }
  // Past the guard tanh^2 is strictly below 1, so the literal criterion is safe.
  const double ratio = std::tanh(x) * std::tanh(x);
  const auto tail_ok = [ratio, tail_tol](int k) {
    return std::pow(ratio, k + 1) <= tail_tol;
  };
  int k = std::max(static_cast<int>(std::ceil(required)) - 1, 0);
  while (!tail_ok(k)) {
    ++k;
  }
  while (k > 0 && tail_ok(k - 1)) {
    --k;
  }
  return k;
}

double pure_density(double eta, double x1, double x2, double x1_prime, double x2_prime) {
  const SqueezeParameter p{eta, SqueezeConvention::wavefunction};
  return ground_state_psi(p, x1, x2) * ground_state_psi(p, x1_prime, x2_prime);
}

DensityKernel::DensityKernel(double eta, int k_max) : eta_(eta), k_max_(k_max) {
  if (k_max_ >= 0) {
    lambda_ = schmidt_spectrum(eta_, k_max_).lambda;
  }
}

DensityKernel DensityKernel::closed_form(double eta) { return DensityKernel(eta, -1); }

DensityKernel DensityKernel::spectral(double eta, int k_max) {
  if (k_max < 0) {
    throw DomainError("spectral kernel requires k_max >= 0");
  }
  if (k_max > hermite_max_order) {
    throw UnsupportedOrderError("spectral kernel order " + std::to_string(k_max) +
                                " exceeds the Hermite stability range");
  }
  return DensityKernel(eta, k_max);
}

double DensityKernel::operator()(double x, double x_prime) const {
  if (k_max_ < 0) {
    const double ch = std::cosh(eta_);
    const double sum = x + x_prime;
    const double diff = x - x_prime;
    return std::exp(-sum * sum / (4.0 * ch) - ch * diff * diff / 4.0) / std::sqrt(pi * ch);
  }
  const std::vector<double> phi_x = hermite_phi_sequence(k_max_, x);
  const std::vector<double> phi_xp = hermite_phi_sequence(k_max_, x_prime);
  double sum = 0.0;
  for (int k = k_max_; k >= 0; --k) {  // ascending magnitude
    sum += lambda_[k] * phi_x[k] * phi_xp[k];
  }
  return sum;
}

double reduced_density_closed(double eta, double x, double x_prime) {
  return DensityKernel::closed_form(eta)(x, x_prime);
}

double reduced_density_spectral(double eta, int k_max, double x, double x_prime) {
  return DensityKernel::spectral(eta, k_max)(x, x_prime);
}

double purity(double eta) { return 1.0 / std::cosh(eta); }

double entropy(double eta) {
  const double x = 0.5 * std::abs(eta);
  if (x == 0.0) {
    return 0.0;  // continuity: the sinh^2 ln sinh term vanishes
  }
  // Rearranged with cosh^2 = sinh^2 + 1: the textbook difference of the two
  // cosh^2/sinh^2 products cancels catastrophically once eta > ~15, and
  // sinh^2 alone overflows once eta > ~1420. With q = e^(-2x),
  // sinh^2(x) ln coth(x) = (1-q)^2 atanh(q) / (2q), bounded for all x > 0.
  const double q = std::exp(-2.0 * x);
  if (q == 0.0) {
    return 2.0 * (0.5 + x - std::log(2.0));  // asymptote, exact at this range
  }
  if (q == 1.0) {
    return 0.0;  // x below ~1e-16; the true value is under 1e-31
  }
  const double excitation_term = 0.5 * (1.0 - q) * (1.0 - q) * std::atanh(q) / q;
  const double log_cosh =
      (x < 1.0) ? std::log(std::cosh(x)) : x - std::log(2.0) + std::log1p(q);
  return 2.0 * (excitation_term + log_cosh);
}

double mean_excitation(double eta) {
  const double sh = std::sinh(0.5 * eta);
  return sh * sh;
}

ThermalPoint temperature_from_squeeze(double eta, double omega) {
  if (!(omega > 0.0)) {
    throw DomainError("mode frequency must be positive");
  }
  if (!(eta > 0.0)) {
    throw NoTemperatureError("no temperature: squeeze parameter must be positive");
  }
  // ln coth(eta/2) = log1p(2 / (e^eta - 1)), stable for large eta.
  const double log_coth = std::log1p(2.0 / std::expm1(eta));
  return {omega / log_coth, omega};
}

ThermalPoint temperature_from_squeeze_total(double eta, double omega) {
  if (eta == 0.0) {
    if (!(omega > 0.0)) {
      throw DomainError("mode frequency must be positive");
    }
    return {0.0, omega};
  }
  return temperature_from_squeeze(std::abs(eta), omega);
}

double wigner_reduced(double eta, double x, double p) {
  const double ch = std::cosh(eta);
  return std::exp(-(x * x + p * p) / ch) / (pi * ch);
}

}  // namespace covosc
