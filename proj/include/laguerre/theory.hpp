#pragma once

#include <string>
#include <utility>
#include <vector>

#include "laguerre/matrices.hpp"

namespace laguerre {

struct LogDensity {
  double log_value = 0.0;
  bool normalized = false;
};

// Log joint eigenvalue density at the given points (input order is
// irrelevant; the value is for the ordered domain). Fully normalized for
// beta = 2 with sigma1 = 1; for other beta the unnormalized general-beta
// form is returned with the flag cleared.
LogDensity log_joint_density(const std::vector<double>& lambdas, const EnsembleParams& params);

// Smallest-eigenvalue PDF at the square case R = n, beta = 2: n e^{-xn}.
double pmin_exact(double x, int n);

// Largest-eigenvalue recentering (l - 4N - 2a) / (2 (2N)^{1/3}).
double tw_rescale(double lambda1, double big_n, double a);

// Ai(x) to 1e-10 absolute on [-40, 40]: Maclaurin series in the core,
// asymptotic expansions beyond. x > 40 underflows to 0; x < -40 throws.
double airy_ai(double x);
double airy_ai_prime(double x);

// Gauss-Legendre Nystrom grid for the Airy-kernel Fredholm determinant on
// (s, infinity), using the tangent map x = s + scale*tan(pi(1+xi)/4).
// Immutable and shareable across threads.
class TWGrid {
 public:
  explicit TWGrid(int order = 64, double map_scale = 10.0);
  int order() const { return m_; }
  double map_scale() const { return scale_; }
  const std::vector<double>& nodes() const { return x_; }    // on (-1, 1)
  const std::vector<double>& weights() const { return w_; }

 private:
  int m_;
  double scale_;
  std::vector<double> x_, w_;
};

// Tracy-Widom beta=2 CDF as the Fredholm determinant det(I - K_Airy) on
// (s, inf). Outside the supported window [-10, 6] the known tail
// asymptotics are returned.
double tw2_cdf(double s, const TWGrid& grid);

// Centered-difference density of tw2_cdf, clamped at -1e-8.
double tw2_pdf(double s, const TWGrid& grid);

// |F2(s; m) - F2(s; 2m)|: the grid-refinement error estimate.
double tw2_refinement_estimate(double s, const TWGrid& grid);

struct TWMoments {
  double mean = 0.0;
  double variance = 0.0;
};
TWMoments tw2_moments(const TWGrid& grid);

// CSV cache of the distribution: columns s,F2,quadrature_order.
void write_tw2_table(const std::string& path, const std::vector<double>& s_grid,
                     const TWGrid& grid);
std::vector<std::pair<double, double>> read_tw2_table(const std::string& path);

}  // namespace laguerre
