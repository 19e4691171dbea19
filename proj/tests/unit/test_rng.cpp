#include <doctest.h>

#include <cmath>
#include <vector>

#include "laguerre/rng.hpp"
#include "laguerre/stats.hpp"
#include "oracles.hpp"

using laguerre::Dof;
using laguerre::EmpiricalSample;
using laguerre::RngStream;

TEST_SUITE_BEGIN("rng");

TEST_CASE("uniform01 range and reproducibility") {
  RngStream a(42), b(42);
  const double first = a.uniform01();
  CHECK(first >= 0.0);
  CHECK(first < 1.0);
  CHECK(b.uniform01() == first);

  // identical call sequences reproduce bit for bit
  RngStream c(7, 3), d(7, 3);
  for (int i = 0; i < 200; ++i) {
    CHECK(c.uniform01() == d.uniform01());
    CHECK(c.standard_normal() == d.standard_normal());
    CHECK(c.chi(Dof(3.5)) == d.chi(Dof(3.5)));
    CHECK(c.gamma_variate(0.7, 2.0) == d.gamma_variate(0.7, 2.0));
  }
}

TEST_CASE("uniform01 mean") {
  RngStream rng(1);
  double s = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) s += rng.uniform01();
  CHECK(std::abs(s / n - 0.5) < 0.002);
}

TEST_CASE("distinct stream indices give distinct sequences") {
  RngStream a(42, 0), b(42, 1);
  int diff = 0;
  for (int i = 0; i < 64; ++i) {
    if (a.uniform01() != b.uniform01()) ++diff;
  }
  CHECK(diff > 60);
}

TEST_CASE("standard normal moments") {
  RngStream rng(2);
  const int n = 1000000;
  double s1 = 0.0, s2 = 0.0, s4 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.standard_normal();
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  CHECK(std::abs(s1 / n) < 0.005);
  CHECK(std::abs(s2 / n - 1.0) < 0.01);
  CHECK(std::abs(s4 / n - 3.0) < 0.05);  // Gaussian fourth moment
}

TEST_CASE("gamma variate laws") {
  SUBCASE("Gamma(1,1) is Exp(1)") {
    RngStream rng(3);
    std::vector<double> xs(100000);
    for (double& x : xs) x = rng.gamma_variate(1.0, 1.0);
    const auto ks = laguerre::ks_one_sample(
        EmpiricalSample(xs), [](double x) { return x <= 0 ? 0.0 : 1.0 - std::exp(-x); }, 0.01);
    CHECK(ks.pass);
  }
  SUBCASE("mean at shape 3.5, scale 2") {
    RngStream rng(4);
    const int n = 100000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gamma_variate(3.5, 2.0);
    const double band = 3.0 * std::sqrt(3.5 * 4.0 / n);
    CHECK(std::abs(s / n - 7.0) < band);
  }
  SUBCASE("sub-unit shape path") {
    RngStream rng(5);
    const int n = 100000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.gamma_variate(0.5, 1.0);
    const double band = 3.0 * std::sqrt(0.5 / n);
    CHECK(std::abs(s / n - 0.5) < band);
  }
  SUBCASE("invalid parameters") {
    RngStream rng(6);
    CHECK_THROWS_AS((void)rng.gamma_variate(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)rng.gamma_variate(1.0, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(Dof(-1.0), std::invalid_argument);
  }
}

TEST_CASE("chi squared laws") {
  SUBCASE("half chi2_2R has mean R") {
    const double R = 4.0;
    RngStream rng(7);
    const int n = 100000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += 0.5 * rng.chi_squared(Dof(2.0 * R));
    const double band = 3.0 * std::sqrt(0.25 * 2.0 * 2.0 * R / n);
    CHECK(std::abs(s / n - R) < band);
  }
  SUBCASE("chi is the square root of chi squared") {
    RngStream a(8, 1), b(8, 1);
    for (int i = 0; i < 1000; ++i) {
      const double c = a.chi(Dof(4.7));
      const double c2 = b.chi_squared(Dof(4.7));
      CHECK(c * c == doctest::Approx(c2).epsilon(1e-14));
    }
  }
  SUBCASE("variance at odd dof") {
    RngStream rng(9);
    const int n = 100000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = rng.chi_squared(Dof(3.0));
      s += x;
      s2 += x * x;
    }
    const double mean = s / n;
    const double var = s2 / n - mean * mean;
    // sd of the variance estimate from the chi-squared fourth moment
    const double band = 3.0 * std::sqrt((252.0 - 36.0) / n);
    CHECK(std::abs(var - 6.0) < band);
  }
  SUBCASE("even dof matches a sum of exponentials") {
    const int k = 6;
    RngStream a(10), b(11);
    std::vector<double> xs(10000), ys(10000);
    for (double& x : xs) x = a.chi_squared(Dof(k));
    for (double& y : ys) {
      y = 0.0;
      for (int j = 0; j < k / 2; ++j) y += b.gamma_variate(1.0, 2.0);
    }
    const auto ks = laguerre::ks_two_sample(EmpiricalSample(xs), EmpiricalSample(ys), 0.01);
    CHECK(ks.pass);
  }
}

TEST_CASE("beta variate laws") {
  SUBCASE("mean of Beta(3/2, R-1) at R=4") {
    RngStream rng(12);
    const int n = 100000;
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += rng.beta_variate(1.5, 3.0);
    const double var = 1.5 * 3.0 / (4.5 * 4.5 * 5.5);
    CHECK(std::abs(s / n - 1.0 / 3.0) < 3.0 * std::sqrt(var / n));
  }
  SUBCASE("Beta(1,1) is uniform") {
    RngStream rng(13);
    std::vector<double> xs(100000);
    for (double& x : xs) x = rng.beta_variate(1.0, 1.0);
    const auto ks = laguerre::ks_one_sample(
        EmpiricalSample(xs), [](double x) { return std::clamp(x, 0.0, 1.0); }, 0.01);
    CHECK(ks.pass);
  }
  SUBCASE("support is the open interval") {
    RngStream rng(14);
    for (int i = 0; i < 1000000; ++i) {
      const double x = rng.beta_variate(0.8, 2.5);
      CHECK(x > 0.0);
      CHECK(x < 1.0);
    }
  }
}

TEST_CASE("complex standard normal") {
  RngStream rng(15);
  const int n = 100000;
  double sm = 0.0, sre = 0.0, sre2 = 0.0, sim = 0.0, sim2 = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto [re, im] = rng.complex_standard_normal();
    sm += re * re + im * im;
    sre += re;
    sre2 += re * re;
    sim += im;
    sim2 += im * im;
    sxy += re * im;
  }
  CHECK(std::abs(sm / n - 1.0) < 3.0 * std::sqrt(1.0 / n));  // |z|^2 is Exp(1)
  CHECK(std::abs(sre2 / n - 0.5) < 0.01);
  const double corr = (sxy / n - (sre / n) * (sim / n)) /
                      std::sqrt((sre2 / n - (sre / n) * (sre / n)) *
                                (sim2 / n - (sim / n) * (sim / n)));
  CHECK(std::abs(corr) < 0.01);
}

TEST_CASE("variate accounting counts deliverables") {
  RngStream rng(16);
  (void)rng.uniform01();
  (void)rng.standard_normal();
  (void)rng.gamma_variate(0.4);  // boosted path, still one deliverable
  (void)rng.chi_squared(Dof(5));
  (void)rng.chi(Dof(5));
  (void)rng.beta_variate(2, 3);
  (void)rng.complex_standard_normal();
  CHECK(rng.variates_delivered() == 8);
}

TEST_CASE("supports hold over ten million draws") {
  RngStream rng(17);
  for (int i = 0; i < 4000000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
  for (int i = 0; i < 3000000; ++i) {
    REQUIRE(std::isfinite(rng.standard_normal()));
  }
  for (int i = 0; i < 3000000; ++i) {
    const double c = rng.chi(Dof(0.8));
    REQUIRE(std::isfinite(c));
    REQUIRE(c > 0.0);
  }
}

TEST_SUITE_END();
