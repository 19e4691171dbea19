#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace laguerre {

// Parameters of a (possibly spiked) beta-Laguerre / Wishart ensemble.
// n is the matrix order, r the sample-count parameter (continuous values
// >= n allowed), beta the Dyson index, sigma1 a single multiplicative
// spike (1 = unspiked).
struct EnsembleParams {
  int n = 1;
  double r = 1.0;
  double beta = 2.0;
  double sigma1 = 1.0;

  // a = R - n + 1 - 2/beta, the exponent appearing in the eigenvalue law.
  double laguerre_exponent() const { return r - n + 1.0 - 2.0 / beta; }
  void validate() const;
};

// Lower-bidiagonal chi factor; diag[0] is the top-left entry, sub[k] sits
// directly below diag[k].
struct BidiagonalFactor {
  std::vector<double> diag;  // n entries
  std::vector<double> sub;   // n-1 entries
  int order() const { return static_cast<int>(diag.size()); }
};

// Symmetric tridiagonal stored in matrix order: a[0] is the top-left
// diagonal entry and b[i] couples rows i and i+1. (In the recurrence
// labelling used by charpoly_tridiag, a[0] plays the role of a_n and
// b[0] of b_{n-1}.)
struct SymTridiagonal {
  std::vector<double> a;  // n diagonal entries
  std::vector<double> b;  // n-1 off-diagonal entries
  int order() const { return static_cast<int>(a.size()); }
  double inf_norm() const;
};

// Coefficients of the bidiagonal pencil (L, M): L carries diagonal
// a_tilde with a unit superdiagonal, M a unit diagonal with subdiagonal
// -b_tilde. Generalized eigenvalues are the roots of det(xM - L).
struct BidiagonalPencil {
  std::vector<double> a_tilde;  // n entries
  std::vector<double> b_tilde;  // n-1 entries
  int order() const { return static_cast<int>(a_tilde.size()); }
  void validate() const;
};

// Dense Hermitian matrix; real symmetric inputs are the special case of
// vanishing imaginary parts. Storage is the full square, kept Hermitian
// by construction.
class DenseHermitian {
 public:
  explicit DenseHermitian(int n);

  int order() const { return n_; }
  std::complex<double>& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::complex<double>& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  // Writes v at (i,j) and conj(v) at (j,i); diagonal writes force Im = 0.
  void set_hermitian_pair(int i, int j, std::complex<double> v);
  double fro_norm() const;

 private:
  int n_;
  std::vector<std::complex<double>> a_;
};

}  // namespace laguerre
