#include "laguerre/matrices.hpp"

#include <cmath>

namespace laguerre {

void EnsembleParams::validate() const {
  if (n < 1) throw std::invalid_argument("EnsembleParams: n must be >= 1");
  if (!(r >= n)) throw std::invalid_argument("EnsembleParams: R must satisfy R >= n");
  if (!(beta > 0.0)) throw std::invalid_argument("EnsembleParams: beta must be > 0");
  if (!(sigma1 > 0.0)) throw std::invalid_argument("EnsembleParams: sigma1 must be > 0");
  if (!std::isfinite(laguerre_exponent())) {
    throw std::invalid_argument("EnsembleParams: a = R - n + 1 - 2/beta is not finite");
  }
}

double SymTridiagonal::inf_norm() const {
  const int n = order();
  double m = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(a[i]);
    if (i > 0) row += std::abs(b[i - 1]);
    if (i + 1 < n) row += std::abs(b[i]);
    m = std::max(m, row);
  }
  return m;
}

void BidiagonalPencil::validate() const {
  const int n = order();
  if (n < 1) throw std::invalid_argument("BidiagonalPencil: empty pencil");
  if (static_cast<int>(b_tilde.size()) != n - 1) {
    throw std::invalid_argument("BidiagonalPencil: b_tilde must have n-1 entries");
  }
  for (double v : a_tilde) {
    if (!(v > 0.0)) throw std::invalid_argument("BidiagonalPencil: a_tilde entries must be > 0");
  }
  for (double v : b_tilde) {
    if (!(v > 0.0)) throw std::invalid_argument("BidiagonalPencil: b_tilde entries must be > 0");
  }
}

DenseHermitian::DenseHermitian(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("DenseHermitian: order must be >= 1");
  a_.assign(static_cast<std::size_t>(n) * n, {0.0, 0.0});
}

void DenseHermitian::set_hermitian_pair(int i, int j, std::complex<double> v) {
  if (i == j) v = {v.real(), 0.0};
  at(i, j) = v;
  at(j, i) = std::conj(v);
}

double DenseHermitian::fro_norm() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace laguerre
