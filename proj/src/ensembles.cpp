#include "laguerre/ensembles.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace laguerre {

BidiagonalFactor build_bidiagonal(const EnsembleParams& params, RngStream& rng) {
  params.validate();
  const int n = params.n;
  const double root_beta = std::sqrt(params.beta);

  BidiagonalFactor f;
  f.diag.reserve(n);
  f.sub.reserve(n - 1);
  for (int k = 0; k < n; ++k) {
    f.diag.push_back(rng.chi(Dof(params.beta * (params.r - k))) / root_beta);
  }
  for (int k = 0; k < n - 1; ++k) {
    f.sub.push_back(rng.chi(Dof(params.beta * (n - 1 - k))) / root_beta);
  }
  f.diag[0] *= params.sigma1;
  return f;
}

SymTridiagonal to_tridiagonal(const BidiagonalFactor& f) {
  const int n = f.order();
  if (n < 1 || static_cast<int>(f.sub.size()) != n - 1) {
    throw std::invalid_argument("to_tridiagonal: factor sizes are inconsistent");
  }
  SymTridiagonal t;
  t.a.resize(n);
  t.b.resize(n - 1);
  t.a[0] = f.diag[0] * f.diag[0];
  for (int i = 1; i < n; ++i) t.a[i] = f.sub[i - 1] * f.sub[i - 1] + f.diag[i] * f.diag[i];
  for (int i = 0; i + 1 < n; ++i) t.b[i] = f.diag[i] * f.sub[i];
  return t;
}

BidiagonalPencil build_pencil(const EnsembleParams& params, RngStream& rng) {
  params.validate();
  const int n = params.n;
  const double beta = params.beta;
  const double spike = params.sigma1 * params.sigma1;

  BidiagonalPencil p;
  p.a_tilde.reserve(n);
  p.b_tilde.reserve(n - 1);
  for (int j = 1; j <= n; ++j) {
    double v = rng.chi_squared(Dof(beta * (params.r + 1.0 - j))) / beta;
    if (j == n) v *= spike;
    p.a_tilde.push_back(v);
  }
  for (int j = 1; j <= n - 1; ++j) {
    double v = rng.chi_squared(Dof(beta * j)) / beta;
    if (j == n - 1) v *= spike;
    p.b_tilde.push_back(v);
  }
  return p;
}

Spectrum sample_spectrum_tridiagonal(const EnsembleParams& params, RngStream& rng, double tol) {
  return tridiag_eigen_all(to_tridiagonal(build_bidiagonal(params, rng)), tol);
}

double sample_extreme_tridiagonal(const EnsembleParams& params, RngStream& rng, Extreme which,
                                  double tol) {
  return tridiag_eigen_extreme(to_tridiagonal(build_bidiagonal(params, rng)), which, tol);
}

Spectrum sample_spectrum_pencil(const EnsembleParams& params, RngStream& rng, double tol) {
  return pencil_eigen_all(build_pencil(params, rng), tol);
}

Spectrum sample_closed_form_n2(double r, double beta, RngStream& rng) {
  if (beta != 1.0 && beta != 2.0) {
    throw std::invalid_argument("sample_closed_form_n2: beta must be 1 or 2");
  }
  if (!(r >= 2.0)) {
    throw std::invalid_argument("sample_closed_form_n2: R must be >= 2");
  }
  double t, s;
  if (beta == 2.0) {
    t = 0.5 * rng.chi_squared(Dof(4.0 * r));
    s = rng.beta_variate(1.5, r - 1.0);
  } else {
    t = rng.chi_squared(Dof(2.0 * r));
    s = rng.beta_variate(1.0, 0.5 * (r - 1.0));
  }
  const double rs = std::sqrt(s);
  Spectrum out;
  out.values = {0.5 * t * (1.0 + rs), 0.5 * t * (1.0 - rs)};
  out.solver = "closed-form-n2";
  return out;
}

DenseHermitian gaussian_wishart(const EnsembleParams& params, RngStream& rng) {
  params.validate();
  if (params.beta != 1.0 && params.beta != 2.0) {
    throw std::invalid_argument("gaussian_wishart: beta must be 1 or 2");
  }
  if (params.r != std::floor(params.r)) {
    throw std::invalid_argument("gaussian_wishart: R must be an integer");
  }
  const int rows = static_cast<int>(params.r);
  const int n = params.n;

  std::vector<std::complex<double>> h(static_cast<std::size_t>(rows) * n);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) {
      if (params.beta == 2.0) {
        const auto [re, im] = rng.complex_standard_normal();
        h[static_cast<std::size_t>(i) * n + j] = {re, im};
      } else {
        h[static_cast<std::size_t>(i) * n + j] = {rng.standard_normal(), 0.0};
      }
    }
  }
  for (int i = 0; i < rows; ++i) h[static_cast<std::size_t>(i) * n] *= params.sigma1;

  DenseHermitian w(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::complex<double> s{0.0, 0.0};
      for (int k = 0; k < rows; ++k) {
        s += std::conj(h[static_cast<std::size_t>(k) * n + i]) *
             h[static_cast<std::size_t>(k) * n + j];
      }
      w.set_hermitian_pair(i, j, s);
    }
  }
  return w;
}

Spectrum sample_dense_oracle(const EnsembleParams& params, RngStream& rng, double tol) {
  const DenseHermitian w = gaussian_wishart(params, rng);
  Spectrum s = dense_hermitian_eigen(w, tol);
  const double floor_abs = tol * std::max(w.fro_norm(), 1e-300);
  for (double& v : s.values) {
    if (v < 0.0) {
      if (v >= -floor_abs) {
        v = 0.0;
      } else {
        std::ostringstream os;
        os << "sample_dense_oracle: negative eigenvalue " << v << " from a Gram matrix";
        throw SolverError(os.str());
      }
    }
  }
  s.solver = "dense-jacobi";
  return s;
}

}  // namespace laguerre
