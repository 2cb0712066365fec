#include "finiteqm/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace finiteqm {

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Mat Mat::adjoint() const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

Mat Mat::transpose() const {
  Mat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

Mat Mat::conj() const {
  Mat r(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
  return r;
}

std::vector<cplx> Mat::apply(const std::vector<cplx>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("Mat::apply: size mismatch");
  std::vector<cplx> r(n_);
  for (int i = 0; i < n_; ++i) {
    cplx s = 0.0;
    for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

std::vector<double> Mat::apply_real(const std::vector<double>& v) const {
  if (static_cast<int>(v.size()) != n_)
    throw std::invalid_argument("Mat::apply_real: size mismatch");
  std::vector<double> r(n_);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += at(i, j).real() * v[j];
    r[i] = s;
  }
  return r;
}

double Mat::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) {
    m = std::max(m, std::abs(z.real()));
    m = std::max(m, std::abs(z.imag()));
  }
  return m;
}

bool Mat::all_finite() const {
  for (const cplx& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("Mat product: size mismatch");
  const int n = x.n_;
  Mat r(n);
  // i-k-j order keeps both operands streaming row-major.
  for (int i = 0; i < n; ++i) {
    const cplx* xrow = &x.a_[static_cast<std::size_t>(i) * n];
    cplx* rrow = &r.a_[static_cast<std::size_t>(i) * n];
    for (int k = 0; k < n; ++k) {
      const cplx xik = xrow[k];
      if (xik == cplx(0.0, 0.0)) continue;
      const cplx* yrow = &y.a_[static_cast<std::size_t>(k) * n];
      for (int j = 0; j < n; ++j) rrow[j] += xik * yrow[j];
    }
  }
  return r;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("Mat sum: size mismatch");
  Mat r(x.n_);
  for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] + y.a_[k];
  return r;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("Mat diff: size mismatch");
  Mat r(x.n_);
  for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = x.a_[k] - y.a_[k];
  return r;
}

Mat operator*(cplx s, const Mat& x) {
  Mat r(x.n_);
  for (std::size_t k = 0; k < x.a_.size(); ++k) r.a_[k] = s * x.a_[k];
  return r;
}

double max_abs_diff(const Mat& x, const Mat& y) { return (x - y).max_abs(); }

Mat mat_pow(const Mat& x, int k) {
  if (k < 0) throw std::invalid_argument("mat_pow: negative power");
  Mat r = Mat::identity(x.dim());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace finiteqm
