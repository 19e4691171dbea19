#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace laguerre {

// Degrees-of-freedom parameter for the chi-type draws. Continuous values
// are allowed; only positivity is required.
struct Dof {
  double value;
  explicit Dof(double v) : value(v) {
    if (!(v > 0.0)) throw std::invalid_argument("Dof: degrees of freedom must be > 0");
  }
};

// Seedable random-variate stream.
//
// The generator is xoshiro256++ with per-stream state derived from
// (seed, stream_index) through a splitmix64-style finalizer, so distinct
// stream indices give statistically independent sequences and the same
// (seed, stream_index, call sequence) reproduces the same variates bit for
// bit on a given build. Streams are single-consumer; independent streams
// may be used concurrently.
class RngStream {
 public:
  // Recorded in output metadata so runs can state what produced them.
  static constexpr const char* kGeneratorId = "xoshiro256++/splitmix64-streams v1";

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  // Count of variates handed out so far; a complex draw counts as two reals.
  // Internal rejection retries do not count.
  std::uint64_t variates_delivered() const { return delivered_; }

  double uniform01();                            // [0, 1)
  double standard_normal();                      // N(0, 1), Marsaglia polar
  double gamma_variate(double shape, double scale = 1.0);
  double chi_squared(Dof dof);                   // 2 * Gamma(dof/2, 1)
  double chi(Dof dof);                           // sqrt(chi_squared)
  double beta_variate(double a, double b);       // g_a / (g_a + g_b)
  std::pair<double, double> complex_standard_normal();  // parts N(0, 1/2)

 private:
  std::uint64_t next();
  double raw_uniform();
  double raw_normal();
  double raw_gamma(double shape);

  std::array<std::uint64_t, 4> s_{};
  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t delivered_ = 0;
  double spare_normal_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace laguerre
