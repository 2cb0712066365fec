#pragma once

#include <string>

#include "finiteqm/matrix.hpp"

namespace finiteqm {

enum class Boundary { Nonperiodic, Periodic };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

// Physical and structural parameters of the lattice.
//
// Position basis convention used throughout: |0>, |1>, ..., |d-1>, matrix
// elements entries(m,n) = <m| Op |n>.  The cyclic shift U has
// <m|U|n> = 1 iff m = (n+1) mod d; the right translation u+ has
// <m|u+|n> = 1 iff m = n+1 and n <= d-2 (u+ annihilates |d-1>).
// The centered site coordinate n - (d-1)/2 used for the periodic parity
// analysis is a relabeling of the same storage order, never a reordering.
struct LatticeConfig {
  int d = 2;                // number of lattice points
  double a = 1.0;           // lattice spacing
  double M = 1.0;           // particle mass
  double hbar = 1.0;
  Boundary boundary = Boundary::Nonperiodic;

  // Throws std::invalid_argument when d < 2 or a, M, hbar are not positive.
  void validate() const;

  // Total length: a(d-1) for Nonperiodic, ad for Periodic.
  double length() const;

  // Spacing chosen so that length() == L under this boundary kind.
  static LatticeConfig from_length(int d, double L, Boundary b,
                                   double M = 1.0, double hbar = 1.0);

  bool operator==(const LatticeConfig&) const = default;
};

// Coefficient c in H = c [2 - (S + S^dag)]: diagonal 2c, off-diagonal -c.
double hopping_coefficient(const LatticeConfig& cfg);

enum class StructureHint { Dense, Tridiagonal, Circulant, Diagonal };

std::string to_string(StructureHint h);

// Labeled d x d complex matrix over the position basis.
struct Operator {
  std::string label;
  StructureHint hint = StructureHint::Dense;
  Mat mat;

  int dim() const { return mat.dim(); }
  const cplx& at(int i, int j) const { return mat.at(i, j); }
};

// True when the stored entries actually have the pattern the hint claims
// (exact comparisons; builders produce patterns bit-exactly).
bool structure_consistent(const Operator& op);

// sin(pi * num/den) and cos(pi * num/den) with the angle reduced in integer
// arithmetic first, so lattice trig stays accurate for large mode numbers.
double sin_pi_frac(long long num, long long den);
double cos_pi_frac(long long num, long long den);

}  // namespace finiteqm
