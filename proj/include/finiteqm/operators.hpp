#pragma once

#include <string>
#include <vector>

#include "finiteqm/lattice.hpp"

namespace finiteqm {

enum class Direction { Right, Left };

// Truncated translation on the end-pointed lattice: Right gives u+
// (subdiagonal ones, u+|d-1> = 0), Left gives u- = adjoint of u+.
Operator build_shift_nonperiodic(const LatticeConfig& cfg, Direction dir);

// Cyclic shift U with U|d-1> = |0>; unitary permutation.
Operator build_shift_periodic(const LatticeConfig& cfg);

// Clock V = diag(1, q, ..., q^{d-1}), q = exp(2 pi i / d).
Operator build_clock(const LatticeConfig& cfg);

// Position X = a diag(n).  Centered uses n - (d-1)/2 (half-integers for
// even d), the coordinate in which periodic parity acts as n -> -n.
Operator build_position(const LatticeConfig& cfg, bool centered);

// Free-particle Hamiltonian c [2 - (S + S^dag)] with S = U (periodic) or
// S = u+ (nonperiodic) and c = pi^2 hbar^2 / (2 (ad)^2 M sin^2(pi/d)).
Operator build_hamiltonian(const LatticeConfig& cfg);

struct MomentumMode {
  int k;                    // frequency index 0..d-1
  std::vector<cplx> vec;    // (1/sqrt d) exp(2 pi i k n / d)
};

// Orthonormal discrete-Fourier eigenbasis of U; mode k has U-eigenvalue
// exp(-2 pi i k / d).
std::vector<MomentumMode> momentum_basis(const LatticeConfig& cfg);

// Signed representative of mode k in (-d/2, d/2].
int signed_mode_index(int k, int d);

struct DeformedMomentum {
  Operator op;
  std::string branch_rule;  // which square-root branch of U was taken
};

// Deformed momentum (2 pi hbar/(ad)) (U^{-1/2} - U^{1/2})/(q^{1/2} - q^{-1/2})
// built spectrally on the momentum basis.  Branch: mode k maps to
// exp(-i pi khat / d) with khat in (-d/2, d/2]; for even d the k = d/2 mode
// takes exp(-i pi/2).  Eigenvalue on mode k is
// (2 pi hbar/(ad)) sin(pi khat/d)/sin(pi/d).
DeformedMomentum build_deformed_momentum(const LatticeConfig& cfg);

// Eigenvalue of the deformed momentum on the signed mode khat.
double deformed_momentum_eigenvalue(const LatticeConfig& cfg, int khat);

// Site reflection |n> -> |d-1-n| (n -> -n on the centered coordinate).
Operator build_parity(const LatticeConfig& cfg);

}  // namespace finiteqm
