#include "pimcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pimcert {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  DenseMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix r(a.dim());
  const std::size_t nn = static_cast<std::size_t>(a.dim()) * a.dim();
  for (std::size_t i = 0; i < nn; ++i) r.data()[i] = a.data()[i] + b.data()[i];
  return r;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix r(a.dim());
  const std::size_t nn = static_cast<std::size_t>(a.dim()) * a.dim();
  for (std::size_t i = 0; i < nn; ++i) r.data()[i] = a.data()[i] - b.data()[i];
  return r;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  const int n = a.dim();
  DenseMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix r(a.dim());
  const std::size_t nn = static_cast<std::size_t>(a.dim()) * a.dim();
  for (std::size_t i = 0; i < nn; ++i) r.data()[i] = s * a.data()[i];
  return r;
}

DenseMatrix abs_entrywise(const DenseMatrix& a) {
  DenseMatrix r(a.dim());
  const std::size_t nn = static_cast<std::size_t>(a.dim()) * a.dim();
  for (std::size_t i = 0; i < nn; ++i) r.data()[i] = std::abs(a.data()[i]);
  return r;
}

DenseMatrix transpose(const DenseMatrix& a) {
  const int n = a.dim();
  DenseMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) r(j, i) = a(i, j);
  }
  return r;
}

double inf_norm(const DenseMatrix& a) {
  const int n = a.dim();
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

double max_abs(const DenseMatrix& a) {
  double best = 0.0;
  const std::size_t nn = static_cast<std::size_t>(a.dim()) * a.dim();
  for (std::size_t i = 0; i < nn; ++i) best = std::max(best, std::abs(a.data()[i]));
  return best;
}

double frobenius_norm(const DenseMatrix& a) {
  double s = 0.0;
  const std::size_t nn = static_cast<std::size_t>(a.dim()) * a.dim();
  for (std::size_t i = 0; i < nn; ++i) s += a.data()[i] * a.data()[i];
  return std::sqrt(s);
}

bool is_symmetric(const DenseMatrix& a, double tol) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
    }
  }
  return true;
}

DenseMatrix invert(const DenseMatrix& a) {
  const int n = a.dim();
  const double pivot_floor = 1e-12 * inf_norm(a);
  DenseMatrix w = a;
  DenseMatrix inv = DenseMatrix::identity(n);

  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i) {
      if (std::abs(w(i, col)) > std::abs(w(piv, col))) piv = i;
    }
    const double p = w(piv, col);
    if (std::abs(p) <= pivot_floor) {
      throw SingularMatrix("pivot " + std::to_string(p) + " in column " + std::to_string(col) +
                           " below threshold");
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(w(piv, j), w(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const double inv_p = 1.0 / p;
    for (int j = 0; j < n; ++j) {
      w(col, j) *= inv_p;
      inv(col, j) *= inv_p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const double f = w(i, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        w(i, j) -= f * w(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

void jacobi_eigenvalues(double* a, int n, double* eig) {
  auto at = [a, n](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  if (n == 1) {
    eig[0] = a[0];
    return;
  }

  double fro = 0.0;
  for (int i = 0; i < n * n; ++i) fro += a[i] * a[i];
  fro = std::sqrt(fro);
  const double stop = 1e-12 * fro;

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (std::sqrt(off) < stop || off == 0.0) {
      for (int i = 0; i < n; ++i) eig[i] = at(i, i);
      std::sort(eig, eig + n);
      return;
    }

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        const double theta = 0.5 * (aqq - app) / apq;
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  throw NoConvergence("Jacobi eigenvalue iteration did not converge in 100 sweeps");
}

std::vector<double> sym_eigenvalues(const DenseMatrix& a) {
  const int n = a.dim();
  const double tol = 1e-10 * (1.0 + max_abs(a));
  if (!is_symmetric(a, tol)) {
    throw NotSymmetric("matrix is not symmetric within tolerance");
  }
  std::vector<double> buf(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      buf[static_cast<std::size_t>(i) * n + j] = 0.5 * (a(i, j) + a(j, i));
    }
  }
  std::vector<double> eig(n);
  jacobi_eigenvalues(buf.data(), n, eig.data());
  return eig;
}

bool is_positive_definite(const DenseMatrix& a) {
  const int n = a.dim();
  std::vector<double> m(static_cast<std::size_t>(n) * n);
  double max_diag = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<std::size_t>(i) * n + j] = 0.5 * (a(i, j) + a(j, i));
    }
    max_diag = std::max(max_diag, std::abs(a(i, i)));
  }
  const double floor = 1e-12 * (1.0 + max_diag);
  auto at = [&m, n](int i, int j) -> double& { return m[static_cast<std::size_t>(i) * n + j]; };

  // In-place lower Cholesky; a pivot at or below the floor means "not PD".
  for (int j = 0; j < n; ++j) {
    double d = at(j, j);
    for (int k = 0; k < j; ++k) d -= at(j, k) * at(j, k);
    if (d <= floor) return false;
    const double l = std::sqrt(d);
    at(j, j) = l;
    for (int i = j + 1; i < n; ++i) {
      double v = at(i, j);
      for (int k = 0; k < j; ++k) v -= at(i, k) * at(j, k);
      at(i, j) = v / l;
    }
  }
  return true;
}

double spectral_radius_nonneg(const DenseMatrix& a) {
  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a(i, j) < 0.0) {
        throw NotNonnegative("matrix has a negative entry at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
      }
    }
  }
  if (n == 0) return 0.0;

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double lambda_prev = std::numeric_limits<double>::quiet_NaN();

  constexpr int kMaxIter = 100000;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += a(i, j) * x[j];
      y[i] = s;
      norm2 += s * s;
    }
    const double ny = std::sqrt(norm2);
    if (ny == 0.0) return 0.0;  // x reached the kernel: no growth in any direction we can see

    // Rayleigh quotient lambda = x . (A x) with ||x|| = 1.
    double lambda = 0.0;
    for (int i = 0; i < n; ++i) lambda += x[i] * y[i];
    for (int i = 0; i < n; ++i) x[i] = y[i] / ny;

    if (iter > 0 && std::abs(lambda - lambda_prev) <= 1e-12 * std::abs(lambda)) {
      return lambda;
    }
    lambda_prev = lambda;
  }
  throw NoConvergence("power iteration did not converge in 100000 iterations");
}

}  // namespace pimcert
