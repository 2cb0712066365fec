#include "finiteqm/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace finiteqm {

namespace {

void require_boundary(const LatticeConfig& cfg, Boundary want,
                      const char* who) {
  if (cfg.boundary != want)
    throw std::invalid_argument(std::string(who) + ": config has the wrong " +
                                "boundary kind (" + to_string(cfg.boundary) +
                                ")");
}

}  // namespace

Operator build_shift_nonperiodic(const LatticeConfig& cfg, Direction dir) {
  cfg.validate();
  require_boundary(cfg, Boundary::Nonperiodic, "build_shift_nonperiodic");
  const int d = cfg.d;
  Operator op;
  op.hint = StructureHint::Tridiagonal;
  op.mat = Mat(d);
  if (dir == Direction::Right) {
    op.label = "u+";
    for (int n = 0; n <= d - 2; ++n) op.mat.at(n + 1, n) = 1.0;
  } else {
    op.label = "u-";
    for (int n = 1; n <= d - 1; ++n) op.mat.at(n - 1, n) = 1.0;
  }
  return op;
}

Operator build_shift_periodic(const LatticeConfig& cfg) {
  cfg.validate();
  require_boundary(cfg, Boundary::Periodic, "build_shift_periodic");
  const int d = cfg.d;
  Operator op;
  op.label = "U";
  op.hint = StructureHint::Circulant;
  op.mat = Mat(d);
  for (int n = 0; n < d; ++n) op.mat.at((n + 1) % d, n) = 1.0;
  return op;
}

Operator build_clock(const LatticeConfig& cfg) {
  cfg.validate();
  require_boundary(cfg, Boundary::Periodic, "build_clock");
  const int d = cfg.d;
  Operator op;
  op.label = "V";
  op.hint = StructureHint::Diagonal;
  op.mat = Mat(d);
  for (int n = 0; n < d; ++n)
    op.mat.at(n, n) = cplx(cos_pi_frac(2LL * n, d), sin_pi_frac(2LL * n, d));
  return op;
}

Operator build_position(const LatticeConfig& cfg, bool centered) {
  cfg.validate();
  const int d = cfg.d;
  Operator op;
  op.label = centered ? "X_centered" : "X";
  op.hint = StructureHint::Diagonal;
  op.mat = Mat(d);
  for (int n = 0; n < d; ++n) {
    const double site = centered ? n - 0.5 * (d - 1) : n;
    op.mat.at(n, n) = cfg.a * site;
  }
  return op;
}

Operator build_hamiltonian(const LatticeConfig& cfg) {
  cfg.validate();
  const int d = cfg.d;
  const double c = hopping_coefficient(cfg);
  Operator op;
  op.label = "H";
  op.mat = Mat(d);
  if (cfg.boundary == Boundary::Nonperiodic) {
    op.hint = StructureHint::Tridiagonal;
    for (int n = 0; n < d; ++n) {
      op.mat.at(n, n) = 2.0 * c;
      if (n + 1 < d) {
        op.mat.at(n, n + 1) = -c;
        op.mat.at(n + 1, n) = -c;
      }
    }
  } else {
    op.hint = StructureHint::Circulant;
    for (int n = 0; n < d; ++n) {
      op.mat.at(n, n) += 2.0 * c;
      op.mat.at((n + 1) % d, n) += -c;
      op.mat.at(n, (n + 1) % d) += -c;
    }
  }
  return op;
}

std::vector<MomentumMode> momentum_basis(const LatticeConfig& cfg) {
  cfg.validate();
  require_boundary(cfg, Boundary::Periodic, "momentum_basis");
  const int d = cfg.d;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<MomentumMode> modes;
  modes.reserve(d);
  for (int k = 0; k < d; ++k) {
    MomentumMode mode;
    mode.k = k;
    mode.vec.resize(d);
    for (int n = 0; n < d; ++n) {
      const long long t = 2LL * k * n;
      mode.vec[n] = norm * cplx(cos_pi_frac(t, d), sin_pi_frac(t, d));
    }
    modes.push_back(std::move(mode));
  }
  return modes;
}

int signed_mode_index(int k, int d) {
  return (2 * k <= d) ? k : k - d;
}

double deformed_momentum_eigenvalue(const LatticeConfig& cfg, int khat) {
  const double pi = std::numbers::pi;
  return (2.0 * pi * cfg.hbar / (cfg.a * cfg.d)) *
         sin_pi_frac(khat, cfg.d) / std::sin(pi / cfg.d);
}

DeformedMomentum build_deformed_momentum(const LatticeConfig& cfg) {
  cfg.validate();
  require_boundary(cfg, Boundary::Periodic, "build_deformed_momentum");
  const int d = cfg.d;

  // First row of the circulant: g(t) = (1/d) sum_k e_k exp(2 pi i k t / d),
  // entries(m,n) = g((m-n) mod d).  Filling from g keeps the matrix
  // circulant bit-exactly.
  std::vector<cplx> g(d, cplx(0.0, 0.0));
  for (int k = 0; k < d; ++k) {
    const double ek = deformed_momentum_eigenvalue(cfg, signed_mode_index(k, d));
    for (int t = 0; t < d; ++t) {
      const long long arg = 2LL * k * t;
      g[t] += ek * cplx(cos_pi_frac(arg, d), sin_pi_frac(arg, d));
    }
  }
  for (int t = 0; t < d; ++t) g[t] /= static_cast<double>(d);

  DeformedMomentum result;
  result.op.label = "Ptilde";
  result.op.hint = StructureHint::Circulant;
  result.op.mat = Mat(d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) result.op.mat.at(m, n) = g[(m - n + d) % d];
  result.branch_rule =
      "U^{1/2} eigenvalue exp(-i pi khat/d), khat in (-d/2, d/2]";
  if (d % 2 == 0)
    result.branch_rule += "; k = d/2 mode takes exp(-i pi/2)";
  return result;
}

Operator build_parity(const LatticeConfig& cfg) {
  cfg.validate();
  require_boundary(cfg, Boundary::Periodic, "build_parity");
  const int d = cfg.d;
  Operator op;
  op.label = "parity";
  op.hint = StructureHint::Dense;
  op.mat = Mat(d);
  for (int n = 0; n < d; ++n) op.mat.at(d - 1 - n, n) = 1.0;
  return op;
}

}  // namespace finiteqm
