#pragma once

#include <string>
#include <vector>

#include "finiteqm/lattice.hpp"

namespace finiteqm {

// Default pass threshold for floating-point identity checks; identities
// among 0/1-entried matrices come out exactly 0 on top of this.
inline constexpr double kVerifyTolerance = 1e-12;

// One verified identity: a stable name, the equation tag it traces to, the
// max entrywise |deviation|, and whether exact arithmetic makes 0 the only
// acceptable outcome.
struct Check {
  std::string name;
  std::string paper_eq;
  double max_dev = 0.0;
  bool pass = false;
  bool exact_family = false;
};

struct VerificationReport {
  LatticeConfig config;
  double tolerance = kVerifyTolerance;
  std::vector<Check> checks;

  bool all_pass() const;
  double worst_dev() const;
  const Check* find(const std::string& name) const;
};

// P_n = u^dag^n u^n with u = u-, u^dag = u+: diagonal 0/1 projector killing
// sites below n.  Valid n range is 0..d; P_0 = I, P_d = 0.
Operator projection(const LatticeConfig& cfg, int n);

struct ProjectionFamily {
  LatticeConfig config;
  std::vector<Operator> members;  // P_0 .. P_d
};

ProjectionFamily projection_family(const LatticeConfig& cfg);

// Nonunitary translation algebra: u+^d = u-^d = 0, u+^dag = u-, the two
// unitarity-defect relations, and the end-point action on basis vectors.
VerificationReport verify_translation_algebra(const LatticeConfig& cfg,
                                              double tol = kVerifyTolerance);

// The minimal defining set u u^dag = 1 - P_{d-1}, u^d = 0, certified on
// its own.
VerificationReport verify_minimal_axioms(const LatticeConfig& cfg,
                                         double tol = kVerifyTolerance);

// Projection-operator lattice: nesting, idempotency, the shift intertwining
// relations and the complement relation, exhaustively over index ranges.
VerificationReport verify_projection_lattice(const LatticeConfig& cfg,
                                             double tol = kVerifyTolerance);

// Clock/shift pair: U^d = V^d = 1, VU = qUV, unitarity of both.
VerificationReport verify_weyl_pair(const LatticeConfig& cfg,
                                    double tol = kVerifyTolerance);

// d = 2: sigma_1 = u^dag + u, sigma_2 = i(u^dag - u),
// sigma_3 = u u^dag - u^dag u generate the Pauli algebra
// sigma_i sigma_j = delta_ij + i eps_ijk sigma_k.
VerificationReport verify_pauli(const LatticeConfig& cfg,
                                double tol = kVerifyTolerance);

}  // namespace finiteqm
