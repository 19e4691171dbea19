#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "laguerre/matrices.hpp"

namespace laguerre {

inline constexpr double kDefaultTol = 1e-12;

// Non-convergence and numerical-breakdown failures; the message carries
// the diagnostic state (iteration counts, bracket endpoints).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Eigenvalues sorted descending, plus solver bookkeeping.
struct Spectrum {
  std::vector<double> values;
  std::string solver;
  int iterations = 0;
};

// Scaled polynomial value: value() == mantissa * 2^exp2. The exponent is
// carried separately so that degree ~1e3 recurrences stay in range.
struct CharPolyEval {
  double mantissa = 0.0;
  long long exp2 = 0;

  int sign() const { return (mantissa > 0.0) - (mantissa < 0.0); }
  double value() const;     // may overflow/underflow to inf/0 when out of range
  double log2_abs() const;  // -inf for an exact zero
};

enum class Extreme { smallest, largest };

// Full spectrum via implicit-shift QL; values within tol*||T|| of exact,
// tiny negative roundoff clamped to zero (Gram spectra are nonnegative).
Spectrum tridiag_eigen_all(const SymTridiagonal& t, double tol = kDefaultTol);

// One extreme eigenvalue by Sturm-count bisection inside the Gershgorin
// interval, to absolute width tol*||T||.
double tridiag_eigen_extreme(const SymTridiagonal& t, Extreme which, double tol = kDefaultTol);

// Number of eigenvalues of T strictly below x (LDL^T pivot signs with the
// standard guarded division).
int sturm_count(const SymTridiagonal& t, double x);

// P_n(lambda) = det(lambda I - T) through the three-term recurrence over
// trailing principal submatrices, renormalized each step.
CharPolyEval charpoly_tridiag(const SymTridiagonal& t, double lambda);

// B_degree(x) = det(x M_degree - L_degree) over leading blocks of the
// pencil, same renormalization.
CharPolyEval charpoly_pencil(const BidiagonalPencil& p, double x, int degree);

// All generalized eigenvalues of the pencil: roots of B_n located by
// progressive interlacing (roots of B_j bracket those of B_{j+1}) and
// per-bracket bisection.
Spectrum pencil_eigen_all(const BidiagonalPencil& p, double tol = kDefaultTol);

// Dense Hermitian spectrum via cyclic Jacobi rotations; desk-scale oracle.
Spectrum dense_hermitian_eigen(const DenseHermitian& w, double tol = kDefaultTol);

}  // namespace laguerre
