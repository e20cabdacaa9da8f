#pragma once

#include <initializer_list>
#include <vector>

#include "pimcert/errors.hpp"

namespace pimcert {

// Dense square matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() : n_(0) {}
  explicit DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  static DenseMatrix identity(int n);
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double* data() { return a_.data(); }
  const double* data() const { return a_.data(); }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int n_;
  std::vector<double> a_;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, const DenseMatrix& a);

DenseMatrix abs_entrywise(const DenseMatrix& a);
DenseMatrix transpose(const DenseMatrix& a);
double inf_norm(const DenseMatrix& a);     // max row sum of |entries|
double max_abs(const DenseMatrix& a);      // largest |entry|
double frobenius_norm(const DenseMatrix& a);
bool is_symmetric(const DenseMatrix& a, double tol);

// Gauss-Jordan with partial pivoting.  A pivot of magnitude <= 1e-12 *
// inf_norm(a) (of the input) throws SingularMatrix.
DenseMatrix invert(const DenseMatrix& a);

// Cyclic Jacobi on the destroyed n x n row-major buffer `a`; writes the
// eigenvalues to `eig` in ascending order.  Converged when the off-diagonal
// Frobenius norm falls below 1e-12 * ||A||_F of the input; throws
// NoConvergence after 100 sweeps.  The input must already be symmetric; this
// entry point does not check.
void jacobi_eigenvalues(double* a, int n, double* eig);

// Checked front end: throws NotSymmetric when max |a_ij - a_ji| exceeds
// 1e-10 * (1 + max_abs(a)), then runs Jacobi on the symmetrized copy.
std::vector<double> sym_eigenvalues(const DenseMatrix& a);

// Cholesky probe of the symmetric part (A + A^T)/2: true iff every pivot
// exceeds 1e-12 * (1 + max |diagonal entry|).
bool is_positive_definite(const DenseMatrix& a);

// Perron root of an entrywise-nonnegative matrix by power iteration from the
// all-ones vector.  Throws NotNonnegative on a negative entry and
// NoConvergence after 100000 iterations without the Rayleigh quotient
// settling to 1e-12 relative.  A zero image vector means the root is 0.
double spectral_radius_nonneg(const DenseMatrix& a);

}  // namespace pimcert
