// covosc command-line front end: evaluates the coupled-oscillator /
// squeezed-state library and emits tables or figure-grade grids as CSV/JSON.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "covosc/coupled_oscillator.hpp"
#include "covosc/covariant_oscillator.hpp"
#include "covosc/errors.hpp"
#include "covosc/grid.hpp"
#include "covosc/parton.hpp"
#include "covosc/reduced_state.hpp"
#include "output.hpp"

namespace {

using covosc::cli::Cell;
using covosc::cli::Document;
using covosc::cli::integer_cell;
using covosc::cli::real_cell;
using covosc::cli::text_cell;

struct CommonOptions {
  std::string format = "csv";
  std::string output;
};

void add_common_flags(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--output", common.output, "write to this path instead of stdout");
}

void emit(const Document& doc, const CommonOptions& common) {
  std::ostringstream buffer;
  if (common.format == "json") {
    covosc::cli::write_json(buffer, doc);
  } else {
    covosc::cli::write_csv(buffer, doc);
  }
  if (common.output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(common.output);
    if (!file) {
      throw covosc::DomainError("cannot open output file: " + common.output);
    }
    file << buffer.str();
  }
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw covosc::DomainError("invalid " + what + ": " + text);
  }
  if (pos != text.size()) {
    throw covosc::DomainError("invalid " + what + ": " + text);
  }
  return value;
}

int parse_count(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(text, &pos);
  } catch (const std::exception&) {
    throw covosc::DomainError("invalid " + what + ": " + text);
  }
  if (pos != text.size()) {
    throw covosc::DomainError("invalid " + what + ": " + text);
  }
  return value;
}

// "min:max:count" for both axes, or "min:max:count,min:max:count" for the
// first (inner, z-like) and second (outer, t-like) axis respectively.
covosc::GridSpec parse_grid(const std::string& text) {
  const auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream stream(s);
    while (std::getline(stream, token, sep)) {
      parts.push_back(token);
    }
    return parts;
  };

  const std::vector<std::string> axes = split(text, ',');
  if (axes.empty() || axes.size() > 2) {
    throw covosc::DomainError("invalid grid: expected min:max:count[,min:max:count]");
  }

  covosc::GridSpec grid;
  const auto apply = [&split](const std::string& axis, double& lo, double& hi, int& n) {
    const std::vector<std::string> fields = split(axis, ':');
    if (fields.size() != 3) {
      throw covosc::DomainError("invalid grid axis: " + axis);
    }
    lo = parse_real(fields[0], "grid bound");
    hi = parse_real(fields[1], "grid bound");
    n = parse_count(fields[2], "grid count");
  };
  apply(axes[0], grid.z_min, grid.z_max, grid.n_z);
  if (axes.size() == 2) {
    apply(axes[1], grid.t_min, grid.t_max, grid.n_t);
  } else {
    grid.t_min = grid.z_min;
    grid.t_max = grid.z_max;
    grid.n_t = grid.n_z;
  }
  grid.validate();
  return grid;
}

void run_coupling(const covosc::OscillatorCoupling& coupling, const CommonOptions& common) {
  const covosc::NormalModeForm modes = covosc::normal_modes(coupling);

  Document doc;
  doc.command = "coupling";
  doc.parameters = {{"mass", real_cell(coupling.mass)},
                    {"spring", real_cell(coupling.spring)},
                    {"coupling", real_cell(coupling.coupling)}};
  doc.data.columns = {"mass",    "spring",    "coupling",     "omega_1",
                      "omega_2", "eta_paper", "eta_canonical"};
  doc.data.rows.push_back({real_cell(coupling.mass), real_cell(coupling.spring),
                           real_cell(coupling.coupling), real_cell(modes.omega1),
                           real_cell(modes.omega2),
                           real_cell(covosc::eta_paper(coupling).value),
                           real_cell(covosc::eta_canonical(coupling).value)});
  emit(doc, common);
}

void run_schmidt(double eta, int k_max, bool have_k_max, double tail_tol, double omega,
                 const CommonOptions& common) {
  if (!have_k_max) {
    k_max = covosc::truncation_order(eta, tail_tol);
  }
  const covosc::SchmidtSpectrum spectrum = covosc::schmidt_spectrum(eta, k_max);

  Document doc;
  doc.command = "schmidt";
  doc.parameters = {{"eta", real_cell(eta)}};
  if (have_k_max) {
    doc.parameters.emplace_back("kmax", integer_cell(k_max));
  } else {
    doc.parameters.emplace_back("tail_tol", real_cell(tail_tol));
  }
  doc.parameters.emplace_back("omega", real_cell(omega));

  doc.data.columns = {"k", "c_k", "lambda_k"};
  for (int k = 0; k <= spectrum.k_max; ++k) {
    doc.data.rows.push_back(
        {integer_cell(k), real_cell(spectrum.c[k]), real_cell(spectrum.lambda[k])});
  }

  covosc::cli::Table summary;
  summary.columns = {"purity", "entropy", "mean_excitation", "temperature", "tail_bound"};
  summary.rows.push_back(
      {real_cell(covosc::purity(eta)), real_cell(covosc::entropy(eta)),
       real_cell(covosc::mean_excitation(eta)),
       real_cell(covosc::temperature_from_squeeze_total(eta, omega).temperature),
       real_cell(spectrum.tail)});
  doc.summary = std::move(summary);
  emit(doc, common);
}

void run_boost_grid(double rapidity, const std::string& grid_text, const std::string& space,
                    const CommonOptions& common) {
  const covosc::GridSpec grid = parse_grid(grid_text);

  Document doc;
  doc.command = "boost-grid";
  doc.parameters = {{"rapidity", real_cell(rapidity)},
                    {"space", text_cell(space)},
                    {"grid", text_cell(grid_text)}};

  if (space == "position") {
    doc.data.columns = {"z", "t", "value"};
  } else if (space == "momentum") {
    doc.data.columns = {"q_z", "q_0", "value"};
  } else {
    doc.data.columns = {"x", "p", "value"};
  }

  doc.data.rows.reserve(static_cast<std::size_t>(grid.n_z) * grid.n_t);
  for (int j = 0; j < grid.n_t; ++j) {
    const double second = grid.t(j);
    for (int i = 0; i < grid.n_z; ++i) {
      const double first = grid.z(i);
      double value = 0.0;
      if (space == "position") {
        const double psi = covosc::psi_boosted(rapidity, first, second);
        value = psi * psi;
      } else if (space == "momentum") {
        const double phi = covosc::phi_boosted(rapidity, first, second);
        value = phi * phi;
      } else {
        // Reduced-state Wigner panel of the same boosted bound state; the
        // wave-function squeeze is twice the rapidity.
        value = covosc::wigner_reduced(2.0 * rapidity, first, second);
      }
      doc.data.rows.push_back({real_cell(first), real_cell(second), real_cell(value)});
    }
  }
  emit(doc, common);
}

void run_parton(double energy, double mass, const CommonOptions& common) {
  const covosc::PartonReport report = covosc::parton_report({energy, mass});

  Document doc;
  doc.command = "parton";
  doc.parameters = {{"energy", real_cell(energy)}, {"mass", real_cell(mass)}};
  doc.data.columns = {"energy",           "mass",
                      "rapidity",         "period_factor",
                      "interaction_factor", "coherence_ratio",
                      "entropy",          "purity"};
  doc.data.rows.push_back({real_cell(energy), real_cell(mass), real_cell(report.rapidity),
                           real_cell(report.period_factor),
                           real_cell(report.interaction_factor),
                           real_cell(report.coherence_ratio), real_cell(report.entropy),
                           real_cell(report.purity)});
  emit(doc, common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coupled-oscillator squeezed states, reduced density matrices and "
               "Lorentz-squeezed wave functions"};
  app.require_subcommand(1);

  // coupling
  covosc::OscillatorCoupling coupling;
  CommonOptions coupling_common;
  CLI::App* coupling_cmd =
      app.add_subcommand("coupling", "normal modes and squeeze parameters of a coupling");
  coupling_cmd->add_option("--mass", coupling.mass, "oscillator mass")->capture_default_str();
  coupling_cmd->add_option("--spring", coupling.spring, "spring constant K")
      ->capture_default_str();
  coupling_cmd->add_option("--coupling", coupling.coupling, "coupling constant C, |C| < K")
      ->capture_default_str();
  add_common_flags(coupling_cmd, coupling_common);
  coupling_cmd->callback([&] { run_coupling(coupling, coupling_common); });

  // schmidt
  double schmidt_eta = 0.0;
  int schmidt_k_max = 0;
  double schmidt_tail_tol = 1e-12;
  double schmidt_omega = 1.0;
  CommonOptions schmidt_common;
  CLI::App* schmidt_cmd = app.add_subcommand(
      "schmidt", "schmidt coefficients and reduced-state summary at a squeeze eta");
  schmidt_cmd->add_option("--eta", schmidt_eta, "squeeze parameter (wave-function convention)")
      ->required();
  CLI::Option* kmax_opt =
      schmidt_cmd->add_option("--kmax", schmidt_k_max, "truncate at this excitation");
  CLI::Option* tail_opt =
      schmidt_cmd
          ->add_option("--tail-tol", schmidt_tail_tol,
                       "certified bound on the discarded probability")
          ->capture_default_str();
  kmax_opt->excludes(tail_opt);
  tail_opt->excludes(kmax_opt);
  schmidt_cmd
      ->add_option("--omega", schmidt_omega, "mode frequency for the temperature entry")
      ->capture_default_str();
  add_common_flags(schmidt_cmd, schmidt_common);
  schmidt_cmd->callback([&] {
    run_schmidt(schmidt_eta, schmidt_k_max, kmax_opt->count() > 0, schmidt_tail_tol,
                schmidt_omega, schmidt_common);
  });

  // boost-grid
  double grid_rapidity = 0.0;
  std::string grid_text = "-4:4:81";
  std::string grid_space = "position";
  CommonOptions grid_common;
  CLI::App* grid_cmd = app.add_subcommand(
      "boost-grid", "sample the squared boosted wave function (or the reduced-state "
                    "Wigner panel, at wave-function squeeze 2*rapidity) on a lattice");
  grid_cmd->add_option("--rapidity", grid_rapidity, "boost rapidity")->required();
  grid_cmd->add_option("--grid", grid_text, "min:max:count[,min:max:count]")
      ->capture_default_str();
  grid_cmd->add_option("--space", grid_space, "which panel to sample")
      ->check(CLI::IsMember({"position", "momentum", "wigner"}))
      ->capture_default_str();
  add_common_flags(grid_cmd, grid_common);
  grid_cmd->callback([&] { run_boost_grid(grid_rapidity, grid_text, grid_space, grid_common); });

  // parton
  double parton_energy = 0.0;
  double parton_mass = 0.938;
  CommonOptions parton_common;
  CLI::App* parton_cmd =
      app.add_subcommand("parton", "decoherence factors for a beam energy (GeV)");
  parton_cmd->add_option("--energy", parton_energy, "beam energy in GeV")->required();
  parton_cmd->add_option("--mass", parton_mass, "rest mass in GeV")->capture_default_str();
  add_common_flags(parton_cmd, parton_common);
  parton_cmd->callback([&] { run_parton(parton_energy, parton_mass, parton_common); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const covosc::AccuracyError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const covosc::ConventionError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const covosc::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
