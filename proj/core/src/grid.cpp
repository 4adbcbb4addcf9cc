#include "covosc/grid.hpp"

#include <cmath>

#include "covosc/errors.hpp"

namespace covosc {

void GridSpec::validate() const {
  if (!std::isfinite(z_min) || !std::isfinite(z_max) || !std::isfinite(t_min) ||
      !std::isfinite(t_max)) {
    throw DomainError("grid bounds must be finite");
  }
  if (!(z_min < z_max) || !(t_min < t_max)) {
    throw DomainError("grid requires min < max on each axis");
  }
  if (n_z < 2 || n_t < 2) {
    throw DomainError("grid requires at least 2 points per axis");
  }
}

}  // namespace covosc
