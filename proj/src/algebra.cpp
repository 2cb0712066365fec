#include "finiteqm/algebra.hpp"

#include <cmath>
#include <stdexcept>

#include "finiteqm/operators.hpp"

namespace finiteqm {

bool VerificationReport::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

double VerificationReport::worst_dev() const {
  double w = 0.0;
  for (const Check& c : checks) w = std::max(w, c.max_dev);
  return w;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

void require_nonperiodic(const LatticeConfig& cfg, const char* who) {
  if (cfg.boundary != Boundary::Nonperiodic)
    throw std::invalid_argument(std::string(who) +
                                ": needs a nonperiodic config");
}

void add_check(VerificationReport& rep, const std::string& name,
               const std::string& eq, double dev, bool exact_family) {
  Check c;
  c.name = name;
  c.paper_eq = eq;
  c.max_dev = dev;
  c.pass = dev <= rep.tolerance;
  c.exact_family = exact_family;
  rep.checks.push_back(std::move(c));
}

// Powers u^0 .. u^d by repeated dense multiplication.
std::vector<Mat> power_chain(const Mat& u, int d) {
  std::vector<Mat> pows;
  pows.reserve(d + 1);
  pows.push_back(Mat::identity(d));
  for (int n = 1; n <= d; ++n) pows.push_back(pows.back() * u);
  return pows;
}

// Deviation of m from a diagonal matrix with the given 0/1 diagonal.
double dev_from_diag01(const Mat& m, const std::vector<double>& diag) {
  double dev = 0.0;
  const int d = m.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const cplx want = (i == j) ? cplx(diag[i], 0.0) : cplx(0.0, 0.0);
      dev = std::max(dev, std::abs(m.at(i, j) - want));
    }
  return dev;
}

// Diagonal of a matrix verified (elsewhere) to be diagonal.
std::vector<double> diag_of(const Mat& m) {
  std::vector<double> diag(m.dim());
  for (int i = 0; i < m.dim(); ++i) diag[i] = m.at(i, i).real();
  return diag;
}

double scan_diagonal_01(const Mat& m) {
  double dev = 0.0;
  const int d = m.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) {
        const double re = m.at(i, i).real();
        dev = std::max(dev, std::abs(m.at(i, i).imag()));
        dev = std::max(dev, std::min(std::abs(re), std::abs(re - 1.0)));
      } else {
        dev = std::max(dev, std::abs(m.at(i, j)));
      }
    }
  return dev;
}

Mat scale_rows(const std::vector<double>& diag, const Mat& m) {
  Mat r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = diag[i] * m.at(i, j);
  return r;
}

Mat scale_cols(const Mat& m, const std::vector<double>& diag) {
  Mat r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r.at(i, j) = m.at(i, j) * diag[j];
  return r;
}

double vec_max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& z : v) m = std::max(m, std::abs(z));
  return m;
}

std::vector<cplx> basis_vec(int d, int n) {
  std::vector<cplx> e(d, cplx(0.0, 0.0));
  e[n] = 1.0;
  return e;
}

double vec_dev(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace

Operator projection(const LatticeConfig& cfg, int n) {
  cfg.validate();
  require_nonperiodic(cfg, "projection");
  if (n < 0 || n > cfg.d)
    throw std::invalid_argument("projection: n out of range 0..d");
  const Mat up = build_shift_nonperiodic(cfg, Direction::Right).mat;
  const Mat um = build_shift_nonperiodic(cfg, Direction::Left).mat;
  Operator op;
  op.label = "P_" + std::to_string(n);
  op.hint = StructureHint::Diagonal;
  op.mat = mat_pow(up, n) * mat_pow(um, n);
  return op;
}

ProjectionFamily projection_family(const LatticeConfig& cfg) {
  cfg.validate();
  require_nonperiodic(cfg, "projection_family");
  const int d = cfg.d;
  const Mat up = build_shift_nonperiodic(cfg, Direction::Right).mat;
  const Mat um = build_shift_nonperiodic(cfg, Direction::Left).mat;
  const std::vector<Mat> up_pow = power_chain(up, d);
  const std::vector<Mat> um_pow = power_chain(um, d);
  ProjectionFamily fam;
  fam.config = cfg;
  fam.members.reserve(d + 1);
  for (int n = 0; n <= d; ++n) {
    Operator op;
    op.label = "P_" + std::to_string(n);
    op.hint = StructureHint::Diagonal;
    op.mat = up_pow[n] * um_pow[n];
    fam.members.push_back(std::move(op));
  }
  return fam;
}

VerificationReport verify_translation_algebra(const LatticeConfig& cfg,
                                              double tol) {
  cfg.validate();
  require_nonperiodic(cfg, "verify_translation_algebra");
  const int d = cfg.d;
  VerificationReport rep;
  rep.config = cfg;
  rep.tolerance = tol;

  const Mat up = build_shift_nonperiodic(cfg, Direction::Right).mat;
  const Mat um = build_shift_nonperiodic(cfg, Direction::Left).mat;
  const Mat id = Mat::identity(d);
  const std::vector<Mat> up_pow = power_chain(up, d);
  const std::vector<Mat> um_pow = power_chain(um, d);

  add_check(rep, "eq20_uplus_power_d_zero", "eq20", up_pow[d].max_abs(), true);
  add_check(rep, "eq20_uminus_power_d_zero", "eq20", um_pow[d].max_abs(), true);
  add_check(rep, "eq21_adjoint_pair", "eq21", max_abs_diff(up.adjoint(), um),
            true);
  add_check(rep, "eq22_left_relation", "eq22",
            max_abs_diff(um * up, id - up_pow[d - 1] * um_pow[d - 1]), true);
  add_check(rep, "eq23_right_relation", "eq23",
            max_abs_diff(up * um, id - um_pow[d - 1] * up_pow[d - 1]), true);

  const Mat upum = up * um;
  const Mat umup = um * up;
  add_check(rep, "eq25_right_endpoint_defect", "eq25",
            vec_max_abs(upum.apply(basis_vec(d, 0))), true);
  add_check(rep, "eq26_left_endpoint_defect", "eq26",
            vec_max_abs(umup.apply(basis_vec(d, d - 1))), true);
  double dev27 = 0.0;
  for (int n = 1; n <= d - 1; ++n)
    dev27 = std::max(dev27, vec_dev(upum.apply(basis_vec(d, n)), basis_vec(d, n)));
  add_check(rep, "eq27_interior_identity_upum", "eq27", dev27, true);
  double dev28 = 0.0;
  for (int n = 0; n <= d - 2; ++n)
    dev28 = std::max(dev28, vec_dev(umup.apply(basis_vec(d, n)), basis_vec(d, n)));
  add_check(rep, "eq28_interior_identity_umup", "eq28", dev28, true);
  return rep;
}

VerificationReport verify_minimal_axioms(const LatticeConfig& cfg, double tol) {
  cfg.validate();
  require_nonperiodic(cfg, "verify_minimal_axioms");
  const int d = cfg.d;
  VerificationReport rep;
  rep.config = cfg;
  rep.tolerance = tol;

  // u = u-, u^dag = u+ as in the text after eq28.
  const Mat up = build_shift_nonperiodic(cfg, Direction::Right).mat;
  const Mat um = build_shift_nonperiodic(cfg, Direction::Left).mat;
  const Mat p_dm1 = mat_pow(up, d - 1) * mat_pow(um, d - 1);
  add_check(rep, "minimal_u_udag_complement", "after eq28",
            max_abs_diff(um * up, Mat::identity(d) - p_dm1), true);
  add_check(rep, "minimal_u_power_d_zero", "after eq28",
            mat_pow(um, d).max_abs(), true);
  return rep;
}

VerificationReport verify_projection_lattice(const LatticeConfig& cfg,
                                             double tol) {
  cfg.validate();
  require_nonperiodic(cfg, "verify_projection_lattice");
  const int d = cfg.d;
  VerificationReport rep;
  rep.config = cfg;
  rep.tolerance = tol;

  const Mat up = build_shift_nonperiodic(cfg, Direction::Right).mat;
  const Mat um = build_shift_nonperiodic(cfg, Direction::Left).mat;
  const Mat id = Mat::identity(d);
  const std::vector<Mat> up_pow = power_chain(up, d);
  const std::vector<Mat> um_pow = power_chain(um, d);

  std::vector<Mat> proj;
  proj.reserve(d + 1);
  for (int n = 0; n <= d; ++n) proj.push_back(up_pow[n] * um_pow[n]);

  add_check(rep, "eq29_p0_identity", "eq29", max_abs_diff(proj[0], id), true);
  add_check(rep, "p_d_zero", "eq20", proj[d].max_abs(), true);

  // The P_n must be diagonal 0/1 matrices; once that holds exactly, the
  // pairwise products in eq31/eq32 reduce to their diagonals.
  double diag_dev = 0.0;
  for (int n = 0; n <= d; ++n)
    diag_dev = std::max(diag_dev, scan_diagonal_01(proj[n]));
  add_check(rep, "projections_diagonal_01", "eq29-30", diag_dev, true);

  std::vector<std::vector<double>> pd;
  pd.reserve(d + 1);
  for (int n = 0; n <= d; ++n) pd.push_back(diag_of(proj[n]));

  double dev31 = 0.0;
  for (int n = 0; n <= d; ++n)
    for (int m = n; m <= d; ++m)
      for (int i = 0; i < d; ++i)
        dev31 = std::max(dev31, std::abs(pd[n][i] * pd[m][i] - pd[m][i]));
  add_check(rep, "eq31_nested_projections", "eq31", dev31, true);

  double dev32 = 0.0;
  for (int n = 0; n <= d; ++n)
    for (int i = 0; i < d; ++i)
      dev32 = std::max(dev32, std::abs(pd[n][i] * pd[n][i] - pd[n][i]));
  add_check(rep, "eq32_idempotent", "eq32", dev32, true);

  // eq39: P_m u^dag = u^dag P_{m-1}; eq40: u P_m = P_{m-1} u;
  // eq41: P_m u = u P_{m+1}; with u = u-, u^dag = u+.
  double dev39 = 0.0, dev40 = 0.0, dev41 = 0.0;
  for (int m = 1; m <= d; ++m) {
    dev39 = std::max(dev39, max_abs_diff(scale_rows(pd[m], up),
                                         scale_cols(up, pd[m - 1])));
    dev40 = std::max(dev40, max_abs_diff(scale_cols(um, pd[m]),
                                         scale_rows(pd[m - 1], um)));
  }
  for (int m = 0; m <= d - 1; ++m)
    dev41 = std::max(dev41, max_abs_diff(scale_rows(pd[m], um),
                                         scale_cols(um, pd[m + 1])));
  add_check(rep, "eq39_projection_raise", "eq39", dev39, true);
  add_check(rep, "eq40_projection_lower", "eq40", dev40, true);
  add_check(rep, "eq41_projection_lower_shifted", "eq41", dev41, true);

  double dev42 = 0.0;
  for (int n = 1; n <= d - 1; ++n)
    dev42 = std::max(dev42, max_abs_diff(um_pow[n] * up_pow[n],
                                         id - proj[d - n]));
  add_check(rep, "eq42_complement_relation", "eq42", dev42, true);
  add_check(rep, "eq42_last_part_n_dminus1", "after eq42",
            max_abs_diff(um_pow[d - 1] * up_pow[d - 1], id - up * um), true);
  return rep;
}

VerificationReport verify_weyl_pair(const LatticeConfig& cfg, double tol) {
  cfg.validate();
  if (cfg.boundary != Boundary::Periodic)
    throw std::invalid_argument("verify_weyl_pair: needs a periodic config");
  const int d = cfg.d;
  VerificationReport rep;
  rep.config = cfg;
  rep.tolerance = tol;

  const Mat u = build_shift_periodic(cfg).mat;
  const Mat v = build_clock(cfg).mat;
  const Mat id = Mat::identity(d);
  const cplx q(cos_pi_frac(2, d), sin_pi_frac(2, d));

  add_check(rep, "eq5_u_power_d_identity", "eq5",
            max_abs_diff(mat_pow(u, d), id), true);
  add_check(rep, "eq5_v_power_d_identity", "eq5",
            max_abs_diff(mat_pow(v, d), id), false);
  add_check(rep, "eq6_weyl_commutation", "eq6",
            max_abs_diff(v * u, q * (u * v)), false);
  add_check(rep, "eq7_u_unitary", "eq7", max_abs_diff(u.adjoint() * u, id),
            true);
  add_check(rep, "eq7_v_unitary", "eq7", max_abs_diff(v.adjoint() * v, id),
            false);
  return rep;
}

VerificationReport verify_pauli(const LatticeConfig& cfg, double tol) {
  cfg.validate();
  require_nonperiodic(cfg, "verify_pauli");
  if (cfg.d != 2)
    throw std::invalid_argument("verify_pauli: requires d = 2");
  VerificationReport rep;
  rep.config = cfg;
  rep.tolerance = tol;

  // u = u-, u^dag = u+ (the section 2 identification); this choice makes
  // sigma_3 come out as diag(1, -1).
  const Mat udag = build_shift_nonperiodic(cfg, Direction::Right).mat;
  const Mat u = build_shift_nonperiodic(cfg, Direction::Left).mat;
  const Mat id = Mat::identity(2);
  const cplx i_unit(0.0, 1.0);

  const Mat s1 = udag + u;
  const Mat s2 = i_unit * (udag - u);
  const Mat s3 = u * udag - udag * u;
  const Mat sigma[3] = {s1, s2, s3};

  Mat s3_expected(2);
  s3_expected.at(0, 0) = 1.0;
  s3_expected.at(1, 1) = -1.0;
  add_check(rep, "eq82_sigma3_diag", "eq82", max_abs_diff(s3, s3_expected),
            true);

  for (int i = 0; i < 3; ++i)
    add_check(rep, "pauli_sigma" + std::to_string(i + 1) + "_squared", "§5",
              max_abs_diff(sigma[i] * sigma[i], id), true);

  const char* cyc_names[3] = {"pauli_s1s2_is_i_s3", "pauli_s2s3_is_i_s1",
                              "pauli_s3s1_is_i_s2"};
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    add_check(rep, cyc_names[i], "§5",
              max_abs_diff(sigma[i] * sigma[j], i_unit * sigma[k]), true);
  }

  double anti_dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      anti_dev = std::max(
          anti_dev, (sigma[i] * sigma[j] + sigma[j] * sigma[i]).max_abs());
  add_check(rep, "pauli_anticommutators", "§5", anti_dev, true);

  // Full product table sigma_i sigma_j = delta_ij + i eps_ijk sigma_k.
  double full_dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Mat want = (i == j) ? id : Mat::zero(2);
      if (i != j) {
        const int k = 3 - i - j;
        const double eps = (j == (i + 1) % 3) ? 1.0 : -1.0;
        want = want + (i_unit * eps) * sigma[k];
      }
      full_dev = std::max(full_dev, max_abs_diff(sigma[i] * sigma[j], want));
    }
  add_check(rep, "pauli_full_product_table", "eq80-82", full_dev, true);
  return rep;
}

}  // namespace finiteqm
