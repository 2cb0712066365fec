#pragma once

#include <stdexcept>
#include <vector>

namespace finiteqm::eig {

struct EigensolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvalues of a real symmetric tridiagonal matrix, ascending.
// Implicit-shift QL; throws EigensolverError if any eigenvalue fails to
// converge within the iteration cap.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> sub);

// Eigenvector for an isolated eigenvalue of a symmetric tridiagonal matrix
// by inverse iteration.  Unit norm; component of largest magnitude positive.
std::vector<double> tridiagonal_eigenvector(const std::vector<double>& diag,
                                            const std::vector<double>& sub,
                                            double lambda);

// Rayleigh quotient v^T T v / v^T v accumulated in extended precision.
// Refines an eigenvalue to near machine-relative accuracy once v is good.
double rayleigh_quotient(const std::vector<double>& diag,
                         const std::vector<double>& sub,
                         const std::vector<double>& v);

struct DenseEigenResult {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs values[i]
};

// Cyclic Jacobi on a dense real symmetric matrix (row-major, n x n).
// Robust small-d cross-check for the specialized paths.
DenseEigenResult jacobi_eigensystem(const std::vector<double>& a, int n);

// Eigenvalues of the real symmetric circulant with the given first row,
// via the DFT of that row accumulated in extended precision.  Returned in
// frequency order k = 0..d-1 (lambda_k = lambda_{d-k}); *max_imag, when
// non-null, receives the largest imaginary residue (a structure check).
std::vector<double> circulant_eigenvalues(const std::vector<double>& first_row,
                                          double* max_imag = nullptr);

}  // namespace finiteqm::eig
