#pragma once

namespace covosc {

/// Uniform closed-interval lattice over a rectangle in the (z, t) plane
/// (or whatever pair of axes a consumer samples on).
struct GridSpec {
  double z_min = -4.0;
  double z_max = 4.0;
  double t_min = -4.0;
  double t_max = 4.0;
  int n_z = 81;
  int n_t = 81;

  /// Throws DomainError unless min < max on both axes and n >= 2.
  void validate() const;

  double z(int i) const { return z_min + (z_max - z_min) * i / (n_z - 1); }
  double t(int j) const { return t_min + (t_max - t_min) * j / (n_t - 1); }
};

}  // namespace covosc
