#include "laguerre/theory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "laguerre/eigensolve.hpp"
#include "laguerre/format.hpp"

namespace laguerre {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279503L;

constexpr double kAiryPosSwitch = 4.8;
constexpr double kAiryNegSwitch = -9.5;
constexpr double kAiryDomain = 40.0;

struct AiryPair {
  double ai;
  double aip;
};

// Maclaurin series Ai = c1 f - c2 g, accumulated in long double. Good to
// well below 1e-12 absolute on the core interval [-9.5, 4.8].
AiryPair airy_series(double x) {
  constexpr long double c1 = 0.355028053887817239260063186004L;  // 3^{-2/3}/Gamma(2/3)
  constexpr long double c2 = 0.258819403792806798405183560189L;  // 3^{-1/3}/Gamma(1/3)
  if (x == 0.0) return {static_cast<double>(c1), static_cast<double>(-c2)};

  const long double lx = x;
  const long double x3 = lx * lx * lx;
  long double tf = 1.0L, tg = lx;
  long double f = tf, g = tg;
  long double fp = 0.0L, gp = 1.0L;
  for (int k = 1; k < 300; ++k) {
    tf *= x3 / ((3.0L * k - 1.0L) * (3.0L * k));
    tg *= x3 / ((3.0L * k) * (3.0L * k + 1.0L));
    f += tf;
    g += tg;
    fp += 3.0L * k * tf / lx;
    gp += (3.0L * k + 1.0L) * tg / lx;
    const long double scale = std::max({fabsl(f), fabsl(g), 1.0L});
    if (fabsl(tf) < 1e-25L * scale && fabsl(tg) < 1e-25L * scale) break;
  }
  return {static_cast<double>(c1 * f - c2 * g), static_cast<double>(c1 * fp - c2 * gp)};
}

// u_k, v_k coefficient ratios of the large-|x| expansions (DLMF 9.7).
inline long double u_ratio(int k) {
  return (6.0L * k - 5.0L) * (6.0L * k - 3.0L) * (6.0L * k - 1.0L) /
         ((2.0L * k - 1.0L) * 216.0L * k);
}

AiryPair airy_asym_pos(double x) {
  const long double lx = x;
  const long double zeta = 2.0L / 3.0L * lx * sqrtl(lx);
  long double uk = 1.0L, su = 1.0L, sv = 1.0L;
  long double prev = 1.0L;
  for (int k = 1; k < 60; ++k) {
    uk *= u_ratio(k);
    const long double tu = uk / powl(zeta, k);
    if (fabsl(tu) > fabsl(prev)) break;  // divergent tail reached
    prev = tu;
    const long double sgn = (k % 2 == 0) ? 1.0L : -1.0L;
    su += sgn * tu;
    sv += sgn * (-(6.0L * k + 1.0L) / (6.0L * k - 1.0L)) * tu;
    if (fabsl(tu) < 1e-24L) break;
  }
  const long double amp = expl(-zeta) / (2.0L * sqrtl(M_PI));
  const long double q = powl(lx, 0.25L);
  return {static_cast<double>(amp * su / q), static_cast<double>(-amp * sv * q)};
}

AiryPair airy_asym_neg(double x) {
  const long double z = -static_cast<long double>(x);
  const long double zeta = 2.0L / 3.0L * z * sqrtl(z);
  // Even/odd splits of the u and v series.
  long double uk = 1.0L;
  long double pe = 1.0L, po = 0.0L, qe = 1.0L, qo = 0.0L;
  long double prev = 1.0L;
  for (int k = 1; k < 60; ++k) {
    uk *= u_ratio(k);
    const long double t = uk / powl(zeta, k);
    if (t > prev) break;  // divergent tail reached
    prev = t;
    const long double vk_t = -(6.0L * k + 1.0L) / (6.0L * k - 1.0L) * t;
    const long double sgn = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;  // (-1)^{floor(k/2)}
    if (k % 2 == 0) {
      pe += sgn * t;
      qe += sgn * vk_t;
    } else {
      po += sgn * t;
      qo += sgn * vk_t;
    }
    if (t < 1e-26L) break;
  }
  const long double w = zeta - kPiL / 4.0L;
  const long double cw = cosl(w), sw = sinl(w);
  const long double q4 = powl(z, 0.25L);
  const long double ai = (cw * pe + sw * po) / (sqrtl(kPiL) * q4);
  const long double aip = q4 / sqrtl(kPiL) * (sw * qe - cw * qo);
  return {static_cast<double>(ai), static_cast<double>(aip)};
}

AiryPair airy_pair(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("airy_ai: non-finite argument");
  if (x > kAiryDomain) return {0.0, 0.0};  // below 1e-70; underflow guard
  if (x < -kAiryDomain) {
    throw std::domain_error("airy_ai: x < -40 is outside the accuracy budget");
  }
  if (x > kAiryPosSwitch) return airy_asym_pos(x);
  if (x < kAiryNegSwitch) return airy_asym_neg(x);
  return airy_series(x);
}

// det(I - W^{1/2} K W^{1/2}) by LU with partial pivoting.
double lu_det(std::vector<double>& m, int n) {
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m[static_cast<std::size_t>(k) * n + k]);
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(m[static_cast<std::size_t>(i) * n + k]);
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (piv != k) {
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(piv) * n + j], m[static_cast<std::size_t>(k) * n + j]);
      det = -det;
    }
    const double pivot = m[static_cast<std::size_t>(k) * n + k];
    det *= pivot;
    for (int i = k + 1; i < n; ++i) {
      const double f = m[static_cast<std::size_t>(i) * n + k] / pivot;
      if (f == 0.0) continue;
      for (int j = k + 1; j < n; ++j) {
        m[static_cast<std::size_t>(i) * n + j] -= f * m[static_cast<std::size_t>(k) * n + j];
      }
    }
  }
  return det;
}

double fredholm_det(double s, int m, double scale, const std::vector<double>& xi,
                    const std::vector<double>& wi) {
  std::vector<double> x(m), sw(m), ai(m), aip(m);
  for (int i = 0; i < m; ++i) {
    const double theta = M_PI * (xi[i] + 1.0) / 4.0;
    const double c = std::cos(theta);
    x[i] = s + scale * std::tan(theta);
    const double dphi = scale * (M_PI / 4.0) / (c * c);
    sw[i] = std::sqrt(wi[i] * dphi);
    const AiryPair p = airy_pair(x[i]);
    ai[i] = p.ai;
    aip[i] = p.aip;
  }

  std::vector<double> a(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double k;
      if (i == j) {
        k = aip[i] * aip[i] - x[i] * ai[i] * ai[i];
      } else {
        const double numer = ai[i] * aip[j] - aip[i] * ai[j];
        k = (numer == 0.0) ? 0.0 : numer / (x[i] - x[j]);
      }
      a[static_cast<std::size_t>(i) * m + j] = (i == j ? 1.0 : 0.0) - sw[i] * sw[j] * k;
    }
  }
  const double det = lu_det(a, m);
  if (!std::isfinite(det)) {
    std::ostringstream os;
    os << "tw2_cdf: non-finite Fredholm determinant at s=" << s << ", m=" << m;
    throw SolverError(os.str());
  }
  return det;
}

double tw2_right_tail(double s) {
  // 1 - F2(s) ~ exp(-4/3 s^{3/2}) / (16 pi s^{3/2})
  const double p = s * std::sqrt(s);
  return 1.0 - std::exp(-4.0 / 3.0 * p) / (16.0 * M_PI * p);
}

}  // namespace

LogDensity log_joint_density(const std::vector<double>& lambdas, const EnsembleParams& params) {
  params.validate();
  const int n = params.n;
  if (static_cast<int>(lambdas.size()) != n) {
    throw std::invalid_argument("log_joint_density: expected n eigenvalues");
  }
  for (double v : lambdas) {
    if (!(v > 0.0)) throw std::invalid_argument("log_joint_density: eigenvalues must be > 0");
  }
  if (params.sigma1 != 1.0) {
    throw std::invalid_argument("log_joint_density: only the unspiked law is available");
  }

  const double a = params.laguerre_exponent();
  double sum = 0.0, logsum = 0.0, vdm = 0.0;
  for (double v : lambdas) {
    sum += v;
    logsum += std::log(v);
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      const double d = std::abs(lambdas[k] - lambdas[j]);
      if (d == 0.0) return {-std::numeric_limits<double>::infinity(), params.beta == 2.0};
      vdm += std::log(d);
    }
  }

  const double beta = params.beta;
  double lv = -0.5 * beta * sum + 0.5 * beta * a * logsum + beta * vdm;
  if (beta == 2.0) {
    // Ordered-domain normalization 1/prod_j Gamma(j+1) Gamma(j+a+1).
    double lc = 0.0;
    for (int j = 0; j < n; ++j) lc += std::lgamma(j + 1.0) + std::lgamma(j + a + 1.0);
    return {lv - lc, true};
  }
  return {lv, false};
}

double pmin_exact(double x, int n) {
  if (n < 1) throw std::invalid_argument("pmin_exact: n must be >= 1");
  if (!(x >= 0.0)) throw std::invalid_argument("pmin_exact: x must be >= 0");
  return n * std::exp(-x * n);
}

double tw_rescale(double lambda1, double big_n, double a) {
  if (!(big_n > 0.0)) throw std::invalid_argument("tw_rescale: N must be > 0");
  if (!(a >= 0.0)) throw std::invalid_argument("tw_rescale: a must be >= 0");
  return (lambda1 - 4.0 * big_n - 2.0 * a) / (2.0 * std::cbrt(2.0 * big_n));
}

double airy_ai(double x) { return airy_pair(x).ai; }
double airy_ai_prime(double x) { return airy_pair(x).aip; }

TWGrid::TWGrid(int order, double map_scale) : m_(order), scale_(map_scale) {
  if (order < 4) throw std::invalid_argument("TWGrid: order must be >= 4");
  if (!(map_scale > 0.0)) throw std::invalid_argument("TWGrid: map scale must be > 0");
  x_.resize(order);
  w_.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    long double t = cosl(kPiL * (i + 0.75L) / (order + 0.5L));
    long double pp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p1 = 1.0L, p2 = 0.0L;
      for (int j = 1; j <= order; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2.0L * j - 1.0L) * t * p2 - (j - 1.0L) * p3) / j;
      }
      pp = order * (t * p1 - p2) / (t * t - 1.0L);
      const long double t1 = t;
      t = t1 - p1 / pp;
      if (fabsl(t - t1) < 1e-19L) break;
    }
    x_[i] = static_cast<double>(-t);
    x_[order - 1 - i] = static_cast<double>(t);
    const double w = static_cast<double>(2.0L / ((1.0L - t * t) * pp * pp));
    w_[i] = w;
    w_[order - 1 - i] = w;
  }
}

double tw2_cdf(double s, const TWGrid& grid) {
  if (!std::isfinite(s)) throw std::invalid_argument("tw2_cdf: non-finite argument");
  if (s < -10.0) return 0.0;
  if (s > 6.0) return tw2_right_tail(s);
  const double det = fredholm_det(s, grid.order(), grid.map_scale(), grid.nodes(), grid.weights());
  return std::clamp(det, 0.0, 1.0);
}

double tw2_pdf(double s, const TWGrid& grid) {
  const double h = 5e-3;
  const double d = (tw2_cdf(s + h, grid) - tw2_cdf(s - h, grid)) / (2.0 * h);
  if (d < -1e-8) {
    std::ostringstream os;
    os << "tw2_pdf: derivative " << d << " at s=" << s << " is negative beyond roundoff";
    throw SolverError(os.str());
  }
  return std::max(d, 0.0);
}

double tw2_refinement_estimate(double s, const TWGrid& grid) {
  const TWGrid fine(2 * grid.order(), grid.map_scale());
  return std::abs(tw2_cdf(s, grid) - tw2_cdf(s, fine));
}

TWMoments tw2_moments(const TWGrid& grid) {
  // Stieltjes moments by parts over [-10, 6]: the mass outside is below
  // 1e-12 on both sides.
  const TWGrid quad(64, grid.map_scale());
  const double lo = -10.0, hi = 6.0;
  const double mid = 0.5 * (lo + hi), halfw = 0.5 * (hi - lo);
  double int_f = 0.0, int_sf = 0.0;
  for (int i = 0; i < quad.order(); ++i) {
    const double s = mid + halfw * quad.nodes()[i];
    const double f = tw2_cdf(s, grid);
    int_f += halfw * quad.weights()[i] * f;
    int_sf += halfw * quad.weights()[i] * s * f;
  }
  const double f_hi = tw2_cdf(hi, grid);
  const double f_lo = tw2_cdf(lo, grid);
  const double mean = hi * f_hi - lo * f_lo - int_f;
  const double second = hi * hi * f_hi - lo * lo * f_lo - 2.0 * int_sf;
  return {mean, second - mean * mean};
}

void write_tw2_table(const std::string& path, const std::vector<double>& s_grid,
                     const TWGrid& grid) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_tw2_table: cannot open " + path);
  os << "s,F2,quadrature_order\n";
  for (double s : s_grid) {
    os << format_double(s) << ',' << format_double(tw2_cdf(s, grid)) << ',' << grid.order()
       << '\n';
  }
  if (!os) throw std::runtime_error("write_tw2_table: write failed for " + path);
}

std::vector<std::pair<double, double>> read_tw2_table(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("read_tw2_table: cannot open " + path);
  std::vector<std::pair<double, double>> out;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 's') continue;
    std::istringstream ls(line);
    double s, f;
    char comma;
    if (ls >> s >> comma >> f) out.emplace_back(s, f);
  }
  return out;
}

}  // namespace laguerre
