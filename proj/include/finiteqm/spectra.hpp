#pragma once

#include <string>
#include <vector>

#include "finiteqm/lattice.hpp"

namespace finiteqm {

enum class Parity { Even, Odd, None };

std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

struct EigenEntry {
  int m = 0;                // quantum number (mode index)
  double energy = 0.0;
  Parity parity = Parity::None;
  std::vector<double> vec;  // unit-norm coefficients in the position basis
};

struct EigenSystem {
  LatticeConfig config;
  std::vector<EigenEntry> entries;  // energy ascending, degenerate pairs adjacent
};

// Closed-form spectrum: nonperiodic sine modes m = 1..d (eq57/58/62 family)
// or the periodic ground state plus cosine/sine parity families
// (eq70/71/73/75/76 family).
EigenSystem analytic_spectrum(const LatticeConfig& cfg);
EigenSystem analytic_spectrum_nonperiodic(const LatticeConfig& cfg);
EigenSystem analytic_spectrum_periodic(const LatticeConfig& cfg);

// Independent numerical diagonalization of the built Hamiltonian: QL plus
// inverse iteration on the tridiagonal for nonperiodic, first-row DFT plus
// the generic circulant eigenbasis for periodic.  Never uses the closed
// forms above.
EigenSystem numeric_spectrum(const LatticeConfig& cfg);

// Indices [start, start+count) of levels whose energies cluster within
// rel_tol * (spectral range).
struct LevelCluster {
  int start = 0;
  int count = 0;
};
std::vector<LevelCluster> cluster_levels(const std::vector<double>& energies,
                                         double rel_tol = 1e-9);

struct LevelMatch {
  double energy_analytic = 0.0;
  double energy_numeric = 0.0;
  int multiplicity = 0;
  double subspace_angle = 0.0;  // largest principal angle, radians
};

struct MatchTolerances {
  double rel_energy = 1e-10;
  double abs_near_zero = 1e-12;
  double subspace_angle = 1e-8;
  double cluster_rel = 1e-9;
};

struct MatchReport {
  bool multiplicity_ok = true;
  double max_rel_energy_dev = 0.0;
  double max_abs_dev_near_zero = 0.0;
  double max_subspace_angle = 0.0;
  std::vector<LevelMatch> levels;

  bool pass(const MatchTolerances& tols = {}) const;
};

// Pairs levels of the two systems by sorted energy, compares degenerate
// levels as whole subspaces.  Both systems must share a config.
MatchReport match_spectra(const EigenSystem& analytic,
                          const EigenSystem& numeric,
                          const MatchTolerances& tols = {});

struct WaveSample {
  double n = 0.0;    // site coordinate (centered for periodic, so possibly
                     // half-integer)
  double x = 0.0;    // n * a
  double psi = 0.0;  // units length^{-1/2}
};

struct WaveFunction {
  LatticeConfig config;
  int m = 0;
  Parity parity = Parity::None;
  std::vector<WaveSample> samples;
};

// Position-sampled normalized eigenfunction.  Nonperiodic needs
// parity = None and 1 <= m <= d; periodic m = 0 is the even ground state,
// excited states need Even (m <= (d-1)/2) or Odd (m <= d/2).  The lone
// m = d/2 odd state of even d is renormalized numerically.
WaveFunction wavefunction(const LatticeConfig& cfg, int m, Parity parity);

struct RecurrenceReport {
  double max_residual = 0.0;
};

// Checks lambda_{n+1} + lambda_{n-1} = lambda lambda_n for every entry,
// with zero virtual end points (nonperiodic) or cyclic wraparound
// (periodic); lambda is recovered from the entry energy via E = c(2-lambda).
RecurrenceReport verify_recurrence(const EigenSystem& eigen);

}  // namespace finiteqm
