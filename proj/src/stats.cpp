#include "laguerre/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace laguerre {

namespace {

double smirnov_critical(double alpha, double n_eff) {
  return std::sqrt(-std::log(alpha / 2.0) / (2.0 * n_eff));
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("ks test: alpha must lie in (0, 1)");
  }
}

double quantile_sorted(const std::vector<double>& v, double q) {
  const double pos = q * (static_cast<double>(v.size()) - 1.0);
  const std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= v.size()) return v.back();
  const double frac = pos - static_cast<double>(i);
  return v[i] * (1.0 - frac) + v[i + 1] * frac;
}

}  // namespace

EmpiricalSample::EmpiricalSample(std::vector<double> values, SampleLabel label)
    : v_(std::move(values)), label_(std::move(label)) {
  if (v_.empty()) throw std::invalid_argument("EmpiricalSample: empty sample");
  for (double x : v_) {
    if (!std::isfinite(x)) throw std::invalid_argument("EmpiricalSample: non-finite value");
  }
  std::sort(v_.begin(), v_.end());
}

double Ecdf::operator()(double x) const {
  const auto it = std::upper_bound(v_.begin(), v_.end(), x);
  return static_cast<double>(it - v_.begin()) / static_cast<double>(v_.size());
}

KsReport ks_one_sample(const EmpiricalSample& s, const std::function<double(double)>& cdf,
                       double alpha) {
  check_alpha(alpha);
  const auto& v = s.values();
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                             f - static_cast<double>(i) / n));
  }
  KsReport r;
  r.kind = KsReport::Kind::one_sample;
  r.statistic = d;
  r.n_a = v.size();
  r.alpha = alpha;
  r.critical = smirnov_critical(alpha, n);
  r.pass = d < r.critical;
  return r;
}

KsReport ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b, double alpha) {
  check_alpha(alpha);
  const auto& va = a.values();
  const auto& vb = b.values();
  const double na = static_cast<double>(va.size());
  const double nb = static_cast<double>(vb.size());

  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < va.size() && j < vb.size()) {
    const double x = std::min(va[i], vb[j]);
    while (i < va.size() && va[i] == x) ++i;
    while (j < vb.size() && vb[j] == x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  d = std::max(d, std::abs(1.0 - static_cast<double>(j) / nb));
  d = std::max(d, std::abs(static_cast<double>(i) / na - 1.0));

  KsReport r;
  r.kind = KsReport::Kind::two_sample;
  r.statistic = d;
  r.n_a = va.size();
  r.n_b = vb.size();
  r.alpha = alpha;
  r.critical = std::sqrt(-std::log(alpha / 2.0) * (na + nb) / (2.0 * na * nb));
  r.pass = d < r.critical;
  return r;
}

void to_json(nlohmann::json& j, const KsReport& r) {
  j = nlohmann::json{{"kind", r.kind == KsReport::Kind::one_sample ? "one_sample" : "two_sample"},
                     {"statistic", r.statistic},
                     {"n_a", r.n_a},
                     {"n_b", r.n_b},
                     {"alpha", r.alpha},
                     {"critical", r.critical},
                     {"pass", r.pass}};
}

void from_json(const nlohmann::json& j, KsReport& r) {
  r.kind = j.at("kind").get<std::string>() == "one_sample" ? KsReport::Kind::one_sample
                                                           : KsReport::Kind::two_sample;
  j.at("statistic").get_to(r.statistic);
  j.at("n_a").get_to(r.n_a);
  j.at("n_b").get_to(r.n_b);
  j.at("alpha").get_to(r.alpha);
  j.at("critical").get_to(r.critical);
  j.at("pass").get_to(r.pass);
}

Histogram make_histogram(const EmpiricalSample& s, int bins) {
  const auto& v = s.values();
  const double lo = v.front();
  const double hi = v.back();
  if (bins < 0) throw std::invalid_argument("make_histogram: bins must be >= 0");

  if (lo == hi) {
    // Degenerate sample: one unit-width bin centered on the value.
    return make_histogram(s, std::vector<double>{lo - 0.5, lo + 0.5});
  }
  int k = bins;
  if (k == 0) {
    // Freedman-Diaconis, with a Sturges fallback for zero IQR.
    const double iqr = quantile_sorted(v, 0.75) - quantile_sorted(v, 0.25);
    const double n = static_cast<double>(v.size());
    if (iqr > 0.0) {
      const double h = 2.0 * iqr / std::cbrt(n);
      k = static_cast<int>(std::clamp(std::ceil((hi - lo) / h), 1.0, 4096.0));
    } else {
      k = static_cast<int>(std::ceil(std::log2(n))) + 1;
    }
  }
  std::vector<double> edges(k + 1);
  for (int i = 0; i <= k; ++i) {
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / k;
  }
  edges.back() = hi;
  return make_histogram(s, std::move(edges));
}

Histogram make_histogram(const EmpiricalSample& s, std::vector<double> edges) {
  if (edges.size() < 2) throw std::invalid_argument("make_histogram: need at least two edges");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1])) {
      throw std::invalid_argument("make_histogram: edges must be strictly increasing");
    }
  }
  const auto& v = s.values();
  if (v.front() < edges.front() || v.back() > edges.back()) {
    throw std::invalid_argument("make_histogram: sample values fall outside the edges");
  }

  const std::size_t k = edges.size() - 1;
  std::vector<std::size_t> counts(k, 0);
  for (double x : v) {
    auto it = std::upper_bound(edges.begin(), edges.end(), x);
    std::size_t bin = static_cast<std::size_t>(it - edges.begin());
    bin = (bin == 0) ? 0 : bin - 1;
    if (bin >= k) bin = k - 1;  // right edge is inclusive
    ++counts[bin];
  }

  Histogram h;
  h.edges = std::move(edges);
  h.count = v.size();
  h.density.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double width = h.edges[i + 1] - h.edges[i];
    h.density[i] = static_cast<double>(counts[i]) / (static_cast<double>(v.size()) * width);
  }
  return h;
}

void to_json(nlohmann::json& j, const Histogram& h) {
  j = nlohmann::json{{"edges", h.edges}, {"density", h.density}, {"count", h.count}};
}

void from_json(const nlohmann::json& j, Histogram& h) {
  j.at("edges").get_to(h.edges);
  j.at("density").get_to(h.density);
  j.at("count").get_to(h.count);
}

Moments moments(const EmpiricalSample& s) {
  const auto& v = s.values();
  const std::size_t n = v.size();
  if (n < 2) throw std::invalid_argument("moments: need at least two values");

  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(n);

  double m2 = 0.0, m3 = 0.0;
  for (double x : v) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  const double variance = m2 / (static_cast<double>(n) - 1.0);
  const double pop2 = m2 / static_cast<double>(n);
  const double pop3 = m3 / static_cast<double>(n);
  const double skew = (pop2 > 0.0) ? pop3 / std::pow(pop2, 1.5) : 0.0;
  return {mean, variance, skew};
}

}  // namespace laguerre
