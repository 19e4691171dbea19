#include "laguerre/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

namespace laguerre {

namespace {

constexpr int kMaxDenseOrder = 512;

void check_tol(double tol) {
  if (!(tol > 0.0) || tol > 1e-6) {
    throw std::invalid_argument("tol must lie in (0, 1e-6]");
  }
}

void check_tridiagonal(const SymTridiagonal& t) {
  if (t.order() < 1) throw std::invalid_argument("SymTridiagonal: empty matrix");
  if (static_cast<int>(t.b.size()) != t.order() - 1) {
    throw std::invalid_argument("SymTridiagonal: b must have n-1 entries");
  }
}

// Keeps max(|hi|, |lo|) inside [2^-512, 2^512]; the recurrences are linear
// in the trailing pair so both members carry the same exponent.
void renormalize(double& hi, double& lo, long long& e) {
  const double m = std::max(std::abs(hi), std::abs(lo));
  if (m == 0.0) return;
  if (m > 0x1.0p+512 || m < 0x1.0p-512) {
    int k = 0;
    std::frexp(m, &k);
    hi = std::ldexp(hi, -k);
    lo = std::ldexp(lo, -k);
    e += k;
  }
}

// Clamp roundoff negatives of a Gram spectrum; anything below the floor is
// a corrupted input, not roundoff.
void clamp_gram(std::vector<double>& values, double floor_abs, const char* who) {
  for (double& v : values) {
    if (v < 0.0) {
      if (v >= -floor_abs) {
        v = 0.0;
      } else {
        std::ostringstream os;
        os << who << ": eigenvalue " << v << " below -" << floor_abs
           << "; input is not a Gram spectrum";
        throw SolverError(os.str());
      }
    }
  }
}

}  // namespace

double CharPolyEval::value() const {
  if (exp2 > std::numeric_limits<int>::max()) return mantissa * HUGE_VAL;
  if (exp2 < std::numeric_limits<int>::min()) return mantissa * 0.0;
  return std::ldexp(mantissa, static_cast<int>(exp2));
}

double CharPolyEval::log2_abs() const {
  if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(std::abs(mantissa)) + static_cast<double>(exp2);
}

Spectrum tridiag_eigen_all(const SymTridiagonal& t, double tol) {
  check_tridiagonal(t);
  check_tol(tol);
  const int n = t.order();
  const double norm = t.inf_norm();

  std::vector<double> d = t.a;
  std::vector<double> e = t.b;
  e.push_back(0.0);

  int total_iter = 0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= tol * dd + std::numeric_limits<double>::min()) break;
      }
      if (m == l) break;
      if (++iter > 50) {
        std::ostringstream os;
        os << "tridiag_eigen_all: QL sweep budget (50) exhausted at index " << l
           << " of " << n << ", |e|=" << std::abs(e[l]);
        throw SolverError(os.str());
      }
      ++total_iter;

      // implicit Wilkinson-style shift
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double bb = c * e[i];
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
        r = (d[i] - g) * s + 2.0 * c * bb;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - bb;
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }

  std::sort(d.begin(), d.end(), std::greater<double>());
  clamp_gram(d, tol * norm, "tridiag_eigen_all");
  return Spectrum{std::move(d), "tridiagonal-ql", total_iter};
}

int sturm_count(const SymTridiagonal& t, double x) {
  check_tridiagonal(t);
  const int n = t.order();
  double bmax = 1.0;
  for (double v : t.b) bmax = std::max(bmax, v * v);
  const double pivmin = std::numeric_limits<double>::min() * bmax;

  int count = 0;
  double d = 1.0;
  for (int i = 0; i < n; ++i) {
    const double off = (i > 0) ? t.b[i - 1] * t.b[i - 1] / d : 0.0;
    d = (t.a[i] - x) - off;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

double tridiag_eigen_extreme(const SymTridiagonal& t, Extreme which, double tol) {
  check_tridiagonal(t);
  check_tol(tol);
  const int n = t.order();

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    double rad = 0.0;
    if (i > 0) rad += std::abs(t.b[i - 1]);
    if (i + 1 < n) rad += std::abs(t.b[i]);
    lo = std::min(lo, t.a[i] - rad);
    hi = std::max(hi, t.a[i] + rad);
  }

  const double width = tol * std::max(t.inf_norm(), 1e-300);
  while (hi - lo > width) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating resolution
    const int c = sturm_count(t, mid);
    const bool above = (which == Extreme::smallest) ? (c >= 1) : (c >= n);
    if (above) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  double v = 0.5 * (lo + hi);
  std::vector<double> one{v};
  clamp_gram(one, width, "tridiag_eigen_extreme");
  return one[0];
}

CharPolyEval charpoly_tridiag(const SymTridiagonal& t, double lambda) {
  check_tridiagonal(t);
  const int n = t.order();
  // P_k over trailing submatrices: a[n-1] enters first.
  double pm1 = 1.0;
  double p = lambda - t.a[n - 1];
  long long e = 0;
  renormalize(p, pm1, e);
  for (int i = n - 2; i >= 0; --i) {
    const double bb = t.b[i] * t.b[i];
    const double pn = (lambda - t.a[i]) * p - bb * pm1;
    pm1 = p;
    p = pn;
    renormalize(p, pm1, e);
  }
  return CharPolyEval{p, e};
}

CharPolyEval charpoly_pencil(const BidiagonalPencil& p, double x, int degree) {
  p.validate();
  if (degree < 0 || degree > p.order()) {
    throw std::invalid_argument("charpoly_pencil: degree must lie in [0, n]");
  }
  if (degree == 0) return CharPolyEval{1.0, 0};
  double qm1 = 1.0;
  double q = x - p.a_tilde[0];
  long long e = 0;
  renormalize(q, qm1, e);
  for (int j = 2; j <= degree; ++j) {
    // det(xM_j - L_j) expansion along the last row: the subdiagonal of
    // xM - L is -x*b_tilde, the superdiagonal -1.
    const double qn = (x - p.a_tilde[j - 1]) * q - x * p.b_tilde[j - 2] * qm1;
    qm1 = q;
    q = qn;
    renormalize(q, qm1, e);
  }
  return CharPolyEval{q, e};
}

Spectrum pencil_eigen_all(const BidiagonalPencil& p, double tol) {
  p.validate();
  check_tol(tol);
  const int n = p.order();

  double full_trace = 0.0;
  for (double v : p.a_tilde) full_trace += v;
  for (double v : p.b_tilde) full_trace += v;
  const double width = tol * std::max(full_trace, 1.0);

  int iterations = 0;
  std::vector<double> roots{p.a_tilde[0]};
  double partial_trace = p.a_tilde[0];
  for (int j = 2; j <= n; ++j) {
    partial_trace += p.a_tilde[j - 1] + p.b_tilde[j - 2];
    // All j roots are positive and sum to the partial trace, so the trace
    // plus a margin bounds the largest one.
    const double upper = partial_trace + 1.0;
    std::vector<double> next;
    next.reserve(j);
    for (int k = 0; k < j; ++k) {
      double lo = (k == 0) ? 0.0 : roots[k - 1];
      double hi = (k == j - 1) ? upper : roots[k];
      int slo = charpoly_pencil(p, lo, j).sign();
      int shi = charpoly_pencil(p, hi, j).sign();
      if (slo == 0) {
        // Endpoint landed on a root of B_j (measure zero); nudge outward.
        lo = std::nextafter(lo, -1.0);
        slo = charpoly_pencil(p, lo, j).sign();
      }
      if (shi == 0) {
        hi = std::nextafter(hi, upper + 1.0);
        shi = charpoly_pencil(p, hi, j).sign();
      }
      if (slo == shi || slo == 0 || shi == 0) {
        std::ostringstream os;
        os << "pencil_eigen_all: interlacing bracket violated at degree " << j
           << ", bracket " << k << " = [" << lo << ", " << hi << "], signs (" << slo
           << ", " << shi << ")";
        throw SolverError(os.str());
      }
      while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        ++iterations;
        const int sm = charpoly_pencil(p, mid, j).sign();
        if (sm == 0) {
          lo = hi = mid;
          break;
        }
        if (sm == slo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      next.push_back(0.5 * (lo + hi));
    }
    roots = std::move(next);
  }

  std::reverse(roots.begin(), roots.end());
  return Spectrum{std::move(roots), "pencil-bisect", iterations};
}

Spectrum dense_hermitian_eigen(const DenseHermitian& w, double tol) {
  check_tol(tol);
  const int n = w.order();
  if (n > kMaxDenseOrder) {
    throw std::invalid_argument("dense_hermitian_eigen: order beyond desk-scale cap (512)");
  }

  std::vector<std::complex<double>> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = w.at(i, j);
  auto at = [&](int i, int j) -> std::complex<double>& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  const double fro = w.fro_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(at(i, j));
    return std::sqrt(s);
  };

  const double target = tol * std::max(fro, 1e-300);
  const double skip = target / (8.0 * n * n);
  int sweeps = 0;
  while (off_norm() > target) {
    if (++sweeps > 60) {
      std::ostringstream os;
      os << "dense_hermitian_eigen: Jacobi budget (60 sweeps) exhausted, off-norm "
         << off_norm() << " target " << target;
      throw SolverError(os.str());
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> apq = at(p, q);
        const double h = std::abs(apq);
        if (h <= skip) continue;
        const std::complex<double> phase = apq / h;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double tau = (aqq - app) / (2.0 * h);
        const double tt =
            (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                         : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + tt * tt);
        const std::complex<double> sigma = tt * c * phase;
        // A <- J^H A J with J = [[c, sigma], [-conj(sigma), c]] on (p, q)
        for (int k = 0; k < n; ++k) {
          const std::complex<double> akp = at(k, p);
          const std::complex<double> akq = at(k, q);
          at(k, p) = c * akp - std::conj(sigma) * akq;
          at(k, q) = sigma * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const std::complex<double> apk = at(p, k);
          const std::complex<double> aqk = at(q, k);
          at(p, k) = c * apk - sigma * aqk;
          at(q, k) = std::conj(sigma) * apk + c * aqk;
        }
        at(p, q) = {0.0, 0.0};
        at(q, p) = {0.0, 0.0};
        at(p, p) = {at(p, p).real(), 0.0};
        at(q, q) = {at(q, q).real(), 0.0};
      }
    }
  }

  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = at(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<double>());
  return Spectrum{std::move(values), "dense-jacobi", sweeps};
}

}  // namespace laguerre
