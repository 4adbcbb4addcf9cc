#pragma once

namespace covosc {

/// Beam particle of total energy E and rest mass m, both in GeV.
struct BeamSpec {
  double energy = 0.0;
  double mass = 0.938;  // proton, GeV
};

/// Decoherence bookkeeping for a hadron at rapidity eta: the internal
/// oscillation period dilates by e^eta, the external interaction time
/// contracts by e^-eta, and their ratio e^-2eta controls how incoherent the
/// constituents look. Entropy and purity are those of the reduced state at
/// the matched wave-function squeeze 2*eta.
struct PartonReport {
  double rapidity = 0.0;
  double period_factor = 1.0;
  double interaction_factor = 1.0;
  double coherence_ratio = 1.0;
  double entropy = 0.0;
  double purity = 1.0;
};

/// eta = acosh(E/m). Throws KinematicsError for E < m or m <= 0.
double rapidity_from_energy(const BeamSpec& beam);

double period_factor(double eta);       // e^eta
double interaction_factor(double eta);  // e^-eta
double coherence_ratio(double eta);     // e^-2eta

/// Entropy of a hadron boosted to rapidity eta, via the exponent-matching
/// map to the reduced-state entropy: S(eta) = entropy(2*eta)
/// = 2 [cosh^2(eta) ln cosh(eta) - sinh^2(eta) ln sinh(eta)].
double boosted_hadron_entropy(double eta);

PartonReport parton_report(const BeamSpec& beam);

}  // namespace covosc
