#pragma once

#include "laguerre/eigensolve.hpp"
#include "laguerre/matrices.hpp"
#include "laguerre/rng.hpp"

namespace laguerre {

// Draws the 2n-1 chi variates of the bidiagonal factor (diagonal first,
// then the subdiagonal); sigma1 scales the leading diagonal entry.
BidiagonalFactor build_bidiagonal(const EnsembleParams& params, RngStream& rng);

// Gram tridiagonal of the factor, in the displayed layout (top-left entry
// is the square of the leading factor entry).
SymTridiagonal to_tridiagonal(const BidiagonalFactor& f);

// Draws the 2n-1 tilde variates of the bidiagonal pencil (a first, then
// b); the last a and last b carry the sigma1^2 factor.
BidiagonalPencil build_pencil(const EnsembleParams& params, RngStream& rng);

Spectrum sample_spectrum_tridiagonal(const EnsembleParams& params, RngStream& rng,
                                     double tol = kDefaultTol);

// Extreme eigenvalue of one tridiagonal draw via the Sturm bisection path.
double sample_extreme_tridiagonal(const EnsembleParams& params, RngStream& rng, Extreme which,
                                  double tol = kDefaultTol);

Spectrum sample_spectrum_pencil(const EnsembleParams& params, RngStream& rng,
                                double tol = kDefaultTol);

// Closed-form n=2 sampler from one chi-squared trace draw and one beta
// draw; beta must be 1 or 2 and R >= 2.
Spectrum sample_closed_form_n2(double r, double beta, RngStream& rng);

// Forms W = H^H H from an R x n Gaussian matrix whose first column is
// scaled by sigma1 (beta in {1,2}, integer R); consumes beta*R*n reals.
DenseHermitian gaussian_wishart(const EnsembleParams& params, RngStream& rng);

// Dense-construction oracle: spectrum of gaussian_wishart via Jacobi.
Spectrum sample_dense_oracle(const EnsembleParams& params, RngStream& rng,
                             double tol = kDefaultTol);

}  // namespace laguerre
