#include "finiteqm/eig.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace finiteqm::eig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

double tridiag_norm(const std::vector<double>& diag,
                    const std::vector<double>& sub) {
  double norm = 0.0;
  const int n = static_cast<int>(diag.size());
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(sub[i - 1]);
    if (i < n - 1) row += std::abs(sub[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

// Deterministic start vector; xorshift64 keeps runs reproducible.
std::vector<double> start_vector(int n) {
  std::uint64_t s = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n);
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    v[i] = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
  }
  return v;
}

// Solves (T - sigma) x = b in place by Gaussian elimination with partial
// pivoting; the row swaps introduce a second superdiagonal.
void shifted_tridiag_solve(const std::vector<double>& diag,
                           const std::vector<double>& sub, double sigma,
                           double pivot_floor, std::vector<double>& x) {
  const int n = static_cast<int>(diag.size());
  if (n == 1) {
    double p = diag[0] - sigma;
    if (p == 0.0) p = pivot_floor;
    x[0] /= p;
    return;
  }
  std::vector<double> alpha(n), beta(n, 0.0), gamma(n, 0.0);
  double dcur = diag[0] - sigma;
  double ucur = sub[0];
  double wcur = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    const double s = sub[i];
    const double dnext = diag[i + 1] - sigma;
    const double unext = (i + 1 < n - 1) ? sub[i + 1] : 0.0;
    if (std::abs(dcur) >= std::abs(s)) {
      double piv = dcur;
      if (piv == 0.0) piv = pivot_floor;
      const double mult = s / piv;
      alpha[i] = piv;
      beta[i] = ucur;
      gamma[i] = wcur;
      x[i + 1] -= mult * x[i];
      dcur = dnext - mult * ucur;
      ucur = unext - mult * wcur;
      wcur = 0.0;
    } else {
      const double mult = dcur / s;
      alpha[i] = s;
      beta[i] = dnext;
      gamma[i] = unext;
      std::swap(x[i], x[i + 1]);
      x[i + 1] -= mult * x[i];
      dcur = ucur - mult * dnext;
      ucur = wcur - mult * unext;
      wcur = 0.0;
    }
  }
  alpha[n - 1] = (dcur == 0.0) ? pivot_floor : dcur;
  x[n - 1] /= alpha[n - 1];
  if (n >= 2) x[n - 2] = (x[n - 2] - beta[n - 2] * x[n - 1]) / alpha[n - 2];
  for (int i = n - 3; i >= 0; --i)
    x[i] = (x[i] - beta[i] * x[i + 1] - gamma[i] * x[i + 2]) / alpha[i];
}

void normalize_unit(std::vector<double>& v) {
  long double s = 0.0L;
  for (double c : v) s += static_cast<long double>(c) * c;
  const double inv = 1.0 / static_cast<double>(sqrtl(s));
  for (double& c : v) c *= inv;
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> sub) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return {};
  if (static_cast<int>(sub.size()) != n - 1)
    throw std::invalid_argument("tridiagonal_eigenvalues: size mismatch");
  std::vector<double>& d = diag;
  std::vector<double> e = sub;
  e.push_back(0.0);

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double scale = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * scale) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw EigensolverError(
              "tridiagonal QL failed to converge at dimension " +
              std::to_string(n));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> tridiagonal_eigenvector(const std::vector<double>& diag,
                                            const std::vector<double>& sub,
                                            double lambda) {
  const int n = static_cast<int>(diag.size());
  const double anorm = tridiag_norm(diag, sub);
  const double pivot_floor = kEps * kEps * std::max(anorm, 1.0);

  std::vector<double> v = start_vector(n);
  normalize_unit(v);
  std::vector<double> resid(n);
  for (int iter = 0; iter < 8; ++iter) {
    shifted_tridiag_solve(diag, sub, lambda, pivot_floor, v);
    // Guard against overflow from a nearly exact shift.
    double vmax = 0.0;
    for (double c : v) vmax = std::max(vmax, std::abs(c));
    if (!std::isfinite(vmax) || vmax == 0.0) {
      v = start_vector(n);
      for (double& c : v) c += 1.0 / n;
    }
    normalize_unit(v);
    if (iter >= 1) {
      double rmax = 0.0;
      for (int i = 0; i < n; ++i) {
        double t = (diag[i] - lambda) * v[i];
        if (i > 0) t += sub[i - 1] * v[i - 1];
        if (i < n - 1) t += sub[i] * v[i + 1];
        rmax = std::max(rmax, std::abs(t));
      }
      if (rmax <= 64.0 * kEps * std::max(anorm, 1.0)) break;
    }
  }

  int imax = 0;
  for (int i = 1; i < n; ++i)
    if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
  if (v[imax] < 0.0)
    for (double& c : v) c = -c;
  return v;
}

double rayleigh_quotient(const std::vector<double>& diag,
                         const std::vector<double>& sub,
                         const std::vector<double>& v) {
  const int n = static_cast<int>(diag.size());
  long double num = 0.0L, den = 0.0L;
  for (int i = 0; i < n; ++i) {
    long double t = static_cast<long double>(diag[i]) * v[i];
    if (i > 0) t += static_cast<long double>(sub[i - 1]) * v[i - 1];
    if (i < n - 1) t += static_cast<long double>(sub[i]) * v[i + 1];
    num += static_cast<long double>(v[i]) * t;
    den += static_cast<long double>(v[i]) * v[i];
  }
  return static_cast<double>(num / den);
}

DenseEigenResult jacobi_eigensystem(const std::vector<double>& a, int n) {
  if (static_cast<int>(a.size()) != n * n)
    throw std::invalid_argument("jacobi_eigensystem: size mismatch");
  std::vector<double> w = a;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto W = [&](int i, int j) -> double& {
    return w[static_cast<std::size_t>(i) * n + j];
  };
  auto V = [&](int i, int j) -> double& {
    return v[static_cast<std::size_t>(i) * n + j];
  };

  double norm = 0.0;
  for (double x : a) norm = std::max(norm, std::abs(x));
  const double stop = (norm == 0.0) ? 0.0 : 0.5 * kEps * norm;

  bool converged = false;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(W(p, q)));
    if (off <= stop) {
      converged = true;
      break;
    }
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = W(p, q);
        if (std::abs(apq) <= stop) continue;
        const double theta = (W(q, q) - W(p, p)) / (2.0 * apq);
        const double t = std::copysign(
            1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0)), theta);
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double wkp = W(k, p), wkq = W(k, q);
          W(k, p) = c * wkp - s * wkq;
          W(k, q) = s * wkp + c * wkq;
        }
        for (int k = 0; k < n; ++k) {
          const double wpk = W(p, k), wqk = W(q, k);
          W(p, k) = c * wpk - s * wqk;
          W(q, k) = s * wpk + c * wqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p), vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
  }
  if (!converged) {
    // One more scan; tiny residual rotations can stall exactly at stop.
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(W(p, q)));
    if (off > 64.0 * stop + 64.0 * kEps * norm)
      throw EigensolverError("jacobi failed to converge at dimension " +
                             std::to_string(n));
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return W(i, i) < W(j, j); });
  DenseEigenResult res;
  res.values.resize(n);
  res.vectors.assign(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i) {
    res.values[i] = W(order[i], order[i]);
    for (int k = 0; k < n; ++k) res.vectors[i][k] = V(k, order[i]);
    int imax = 0;
    for (int k = 1; k < n; ++k)
      if (std::abs(res.vectors[i][k]) > std::abs(res.vectors[i][imax]))
        imax = k;
    if (res.vectors[i][imax] < 0.0)
      for (double& c : res.vectors[i]) c = -c;
  }
  return res;
}

std::vector<double> circulant_eigenvalues(const std::vector<double>& first_row,
                                          double* max_imag) {
  const int d = static_cast<int>(first_row.size());
  std::vector<long double> ct(d), st(d);
  for (int t = 0; t < d; ++t) {
    const long double ang = 2.0L * kPiL * t / d;
    ct[t] = cosl(ang);
    st[t] = sinl(ang);
  }
  std::vector<double> values(d);
  long double imax = 0.0L;
  for (int k = 0; k < d; ++k) {
    long double re = 0.0L, im = 0.0L;
    for (int j = 0; j < d; ++j) {
      const int t = static_cast<int>((static_cast<long long>(j) * k) % d);
      re += first_row[j] * ct[t];
      im -= first_row[j] * st[t];
    }
    values[k] = static_cast<double>(re);
    imax = std::max(imax, fabsl(im));
  }
  if (max_imag) *max_imag = static_cast<double>(imax);
  return values;
}

}  // namespace finiteqm::eig
