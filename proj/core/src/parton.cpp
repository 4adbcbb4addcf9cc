#include "covosc/parton.hpp"

#include <cmath>

#include "covosc/errors.hpp"
#include "covosc/reduced_state.hpp"

namespace covosc {

double rapidity_from_energy(const BeamSpec& beam) {
  if (!(beam.mass > 0.0)) {
    throw KinematicsError("kinematics: rest mass must be positive");
  }
  if (beam.energy < beam.mass) {
    throw KinematicsError("kinematics: beam energy below rest mass");
  }
  return std::acosh(beam.energy / beam.mass);
}

double period_factor(double eta) { return std::exp(eta); }

double interaction_factor(double eta) { return std::exp(-eta); }

double coherence_ratio(double eta) { return std::exp(-2.0 * eta); }

double boosted_hadron_entropy(double eta) { return entropy(2.0 * eta); }

PartonReport parton_report(const BeamSpec& beam) {
  PartonReport r;
  r.rapidity = rapidity_from_energy(beam);
  r.period_factor = period_factor(r.rapidity);
  r.interaction_factor = interaction_factor(r.rapidity);
  r.coherence_ratio = coherence_ratio(r.rapidity);
  r.entropy = boosted_hadron_entropy(r.rapidity);
  r.purity = purity(2.0 * r.rapidity);
  return r;
}

}  // namespace covosc
