#include "laguerre/rng.hpp"

#include <cmath>

namespace laguerre {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index) {
  // Counter-mode splitmix64 derivation: stream k consumes counters
  // 4k..4k+3, so streams never share state words.
  const std::uint64_t base = mix64(seed ^ 0x5851F42D4C957F2DULL);
  for (int i = 0; i < 4; ++i) {
    s_[i] = mix64(base + (4 * stream_index + 1 + static_cast<std::uint64_t>(i)) * kGolden);
  }
  if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // xoshiro forbids all-zero state
}

std::uint64_t RngStream::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::raw_uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double RngStream::raw_normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_normal_;
  }
  double u, v, q;
  do {
    u = 2.0 * raw_uniform() - 1.0;
    v = 2.0 * raw_uniform() - 1.0;
    q = u * u + v * v;
  } while (q >= 1.0 || q == 0.0);
  const double f = std::sqrt(-2.0 * std::log(q) / q);
  spare_normal_ = v * f;
  have_spare_ = true;
  return u * f;
}

// Marsaglia-Tsang squeeze for shape >= 1; shapes below 1 are boosted with
// Gamma(a) = Gamma(a+1) * U^(1/a).
double RngStream::raw_gamma(double shape) {
  if (shape < 1.0) {
    double u;
    do {
      u = raw_uniform();
    } while (u == 0.0);
    return raw_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = raw_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = raw_uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double RngStream::uniform01() {
  ++delivered_;
  return raw_uniform();
}

double RngStream::standard_normal() {
  ++delivered_;
  return raw_normal();
}

double RngStream::gamma_variate(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0)) {
    throw std::invalid_argument("gamma_variate: shape and scale must be > 0");
  }
  ++delivered_;
  return scale * raw_gamma(shape);
}

double RngStream::chi_squared(Dof dof) {
  ++delivered_;
  return 2.0 * raw_gamma(0.5 * dof.value);
}

double RngStream::chi(Dof dof) {
  ++delivered_;
  return std::sqrt(2.0 * raw_gamma(0.5 * dof.value));
}

double RngStream::beta_variate(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("beta_variate: both shape parameters must be > 0");
  }
  ++delivered_;
  const double ga = raw_gamma(a);
  const double gb = raw_gamma(b);
  return ga / (ga + gb);
}

std::pair<double, double> RngStream::complex_standard_normal() {
  delivered_ += 2;
  const double re = raw_normal() * M_SQRT1_2;
  const double im = raw_normal() * M_SQRT1_2;
  return {re, im};
}

}  // namespace laguerre
