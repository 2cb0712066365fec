#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace finiteqm {

using cplx = std::complex<double>;

// Dense complex square matrix, row-major.  Small dimensions (d up to a few
// thousand); exactness matters more than speed everywhere this is used.
class Mat {
 public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static Mat identity(int n);
  static Mat zero(int n) { return Mat(n); }

  int dim() const { return n_; }

  cplx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const cplx& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  Mat adjoint() const;
  Mat transpose() const;
  Mat conj() const;

  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  std::vector<double> apply_real(const std::vector<double>& v) const;

  // Largest |entry|.
  double max_abs() const;
  bool all_finite() const;

  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  friend Mat operator*(cplx s, const Mat& x);

  bool operator==(const Mat&) const = default;

 private:
  int n_ = 0;
  std::vector<cplx> a_;
};

// max_ij |x_ij - y_ij|
double max_abs_diff(const Mat& x, const Mat& y);

// x^k by repeated multiplication (k >= 0).
Mat mat_pow(const Mat& x, int k);

}  // namespace finiteqm
