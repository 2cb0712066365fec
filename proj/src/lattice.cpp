#include "finiteqm/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace finiteqm {

std::string to_string(Boundary b) {
  return b == Boundary::Nonperiodic ? "nonperiodic" : "periodic";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "nonperiodic") return Boundary::Nonperiodic;
  if (s == "periodic") return Boundary::Periodic;
  throw std::invalid_argument("unknown boundary kind: " + s);
}

void LatticeConfig::validate() const {
  if (d < 2) throw std::invalid_argument("LatticeConfig: d must be >= 2");
  if (!(a > 0.0)) throw std::invalid_argument("LatticeConfig: a must be > 0");
  if (!(M > 0.0)) throw std::invalid_argument("LatticeConfig: M must be > 0");
  if (!(hbar > 0.0))
    throw std::invalid_argument("LatticeConfig: hbar must be > 0");
}

double LatticeConfig::length() const {
  return boundary == Boundary::Nonperiodic ? a * (d - 1) : a * d;
}

LatticeConfig LatticeConfig::from_length(int d, double L, Boundary b, double M,
                                         double hbar) {
  if (d < 2) throw std::invalid_argument("from_length: d must be >= 2");
  if (!(L > 0.0)) throw std::invalid_argument("from_length: L must be > 0");
  LatticeConfig cfg;
  cfg.d = d;
  cfg.a = (b == Boundary::Nonperiodic) ? L / (d - 1) : L / d;
  cfg.M = M;
  cfg.hbar = hbar;
  cfg.boundary = b;
  cfg.validate();
  return cfg;
}

double hopping_coefficient(const LatticeConfig& cfg) {
  const double pi = std::numbers::pi;
  const double s = std::sin(pi / cfg.d);
  return pi * pi * cfg.hbar * cfg.hbar /
         (2.0 * (cfg.a * cfg.d) * (cfg.a * cfg.d) * cfg.M * s * s);
}

std::string to_string(StructureHint h) {
  switch (h) {
    case StructureHint::Dense: return "dense";
    case StructureHint::Tridiagonal: return "tridiagonal";
    case StructureHint::Circulant: return "circulant";
    case StructureHint::Diagonal: return "diagonal";
  }
  return "dense";
}

bool structure_consistent(const Operator& op) {
  const int d = op.dim();
  const Mat& m = op.mat;
  switch (op.hint) {
    case StructureHint::Dense:
      return true;
    case StructureHint::Diagonal:
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (i != j && m.at(i, j) != cplx(0.0, 0.0)) return false;
      return true;
    case StructureHint::Tridiagonal:
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (std::abs(i - j) > 1 && m.at(i, j) != cplx(0.0, 0.0))
            return false;
      return true;
    case StructureHint::Circulant:
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (m.at(i, j) != m.at(0, (j - i + d) % d)) return false;
      return true;
  }
  return false;
}

double sin_pi_frac(long long num, long long den) {
  long long r = num % (2 * den);
  if (r < 0) r += 2 * den;
  return std::sin(std::numbers::pi *
                  (static_cast<double>(r) / static_cast<double>(den)));
}

double cos_pi_frac(long long num, long long den) {
  long long r = num % (2 * den);
  if (r < 0) r += 2 * den;
  return std::cos(std::numbers::pi *
                  (static_cast<double>(r) / static_cast<double>(den)));
}

}  // namespace finiteqm
