#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace laguerre {

struct SampleLabel {
  std::string params;
  std::string sampler;
  std::uint64_t seed = 0;
};

// Immutable sorted sample; values are kept ascending.
class EmpiricalSample {
 public:
  explicit EmpiricalSample(std::vector<double> values, SampleLabel label = {});

  const std::vector<double>& values() const { return v_; }
  const SampleLabel& label() const { return label_; }
  std::size_t size() const { return v_.size(); }

 private:
  std::vector<double> v_;
  SampleLabel label_;
};

// Right-continuous step function F(x) = #{v <= x} / N.
class Ecdf {
 public:
  explicit Ecdf(const EmpiricalSample& s) : v_(s.values()) {}
  double operator()(double x) const;

 private:
  std::vector<double> v_;
};

inline Ecdf ecdf(const EmpiricalSample& s) { return Ecdf(s); }

struct KsReport {
  enum class Kind { one_sample, two_sample };
  Kind kind = Kind::one_sample;
  double statistic = 0.0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;  // zero for one-sample
  double alpha = 0.0;
  double critical = 0.0;
  bool pass = false;
};
void to_json(nlohmann::json& j, const KsReport& r);
void from_json(const nlohmann::json& j, KsReport& r);

// Smirnov asymptotic critical value sqrt(-ln(alpha/2) / (2N)).
KsReport ks_one_sample(const EmpiricalSample& s, const std::function<double(double)>& cdf,
                       double alpha);
KsReport ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b, double alpha);

struct Histogram {
  std::vector<double> edges;    // bins+1, ascending
  std::vector<double> density;  // integrates to 1
  std::size_t count = 0;
};
void to_json(nlohmann::json& j, const Histogram& h);
void from_json(const nlohmann::json& j, Histogram& h);

// bins = 0 selects the Freedman-Diaconis rule.
Histogram make_histogram(const EmpiricalSample& s, int bins = 0);
Histogram make_histogram(const EmpiricalSample& s, std::vector<double> edges);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double skewness = 0.0;
};
Moments moments(const EmpiricalSample& s);

}  // namespace laguerre
