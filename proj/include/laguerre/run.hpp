#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "laguerre/ensembles.hpp"

namespace laguerre::run {

inline constexpr const char* kToolVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitSolver = 4;
inline constexpr int kExitVerify = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Method { tridiagonal, pencil, dense, closed2 };
enum class Which { all, min, max };
enum class FileFormat { csv, json };

Method parse_method(const std::string& s);
Which parse_which(const std::string& s);
FileFormat parse_format(const std::string& s);
const char* to_string(Method m);
const char* to_string(Which w);
const char* to_string(FileFormat f);

struct RunConfig {
  int n = 2;
  double r = 2.0;
  double beta = 2.0;
  double sigma1 = 1.0;
  Method method = Method::tridiagonal;
  Which which = Which::all;
  long samples = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream_offset = 0;  // first stream index used by the batch
  int threads = 1;
  std::string output;
  FileFormat format = FileFormat::csv;
  int bins = 0;  // 0 = Freedman-Diaconis

  // verify
  std::vector<std::string> checks;  // empty = the applicable set
  // bench
  std::vector<std::pair<int, double>> grid;  // (n, R) cells
  std::vector<std::string> methods;          // methods to time
  // theory
  std::vector<std::string> curves;  // pmin, f2, tw2pdf, joint1
  double grid_min = -10.0;
  double grid_max = 6.0;
  int grid_points = 81;
  std::string overlay;  // sample CSV to histogram under the curve
  std::string svg;      // overlay plot path
  bool rescale = false;
  int tw_order = 64;

  EnsembleParams ensemble() const { return EnsembleParams{n, r, beta, sigma1}; }
  void validate() const;
  nlohmann::json to_json() const;
};

struct BatchResult {
  long samples = 0;
  int cols = 0;
  std::vector<double> values;  // row-major samples x cols
  double wall_seconds = 0.0;
  std::uint64_t variates = 0;

  double value(long i, int j) const { return values[static_cast<std::size_t>(i) * cols + j]; }
  std::vector<double> column(int j) const;
};

// Draws cfg.samples spectra; sample i always uses stream index
// stream_offset + i, so the output is independent of the thread count.
BatchResult sample_batch(const RunConfig& cfg);

nlohmann::json summary_json(const RunConfig& cfg, const BatchResult& batch);

int cmd_sample(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);
int cmd_bench(const RunConfig& cfg);
int cmd_theory(const RunConfig& cfg);

// Dispatches and maps exceptions onto the exit codes above.
int run_command(const std::string& command, const RunConfig& cfg);

}  // namespace laguerre::run
