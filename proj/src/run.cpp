#include "laguerre/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "laguerre/format.hpp"
#include "laguerre/stats.hpp"
#include "laguerre/theory.hpp"

namespace laguerre::run {

namespace {

using nlohmann::json;

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open output file: " + path);
  return os;
}

void finish_output(std::ofstream& os, const std::string& path) {
  os.flush();
  if (!os) throw IoError("write failed: " + path);
}

std::string sibling_path(const std::string& base, const std::string& suffix) {
  const auto dot = base.find_last_of('.');
  const auto slash = base.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return base + suffix;
  }
  return base.substr(0, dot) + suffix;
}

// One row of eigenvalues for sample index `idx`.
void draw_row(const RunConfig& cfg, std::uint64_t idx, double* row, std::uint64_t& variates) {
  RngStream rng(cfg.seed, cfg.stream_offset + idx);
  const EnsembleParams p = cfg.ensemble();
  const int cols = cfg.which == Which::all ? cfg.n : 1;

  if (cfg.which != Which::all && cfg.method == Method::tridiagonal) {
    // Dedicated extreme-eigenvalue path: Sturm bisection, no full solve.
    const Extreme e = cfg.which == Which::min ? Extreme::smallest : Extreme::largest;
    row[0] = sample_extreme_tridiagonal(p, rng, e);
    variates += rng.variates_delivered();
    return;
  }

  Spectrum s;
  switch (cfg.method) {
    case Method::tridiagonal: s = sample_spectrum_tridiagonal(p, rng); break;
    case Method::pencil: s = sample_spectrum_pencil(p, rng); break;
    case Method::dense: s = sample_dense_oracle(p, rng); break;
    case Method::closed2: s = sample_closed_form_n2(cfg.r, cfg.beta, rng); break;
  }
  if (cfg.which == Which::all) {
    for (int j = 0; j < cols; ++j) row[j] = s.values[j];
  } else if (cfg.which == Which::min) {
    row[0] = s.values.back();
  } else {
    row[0] = s.values.front();
  }
  variates += rng.variates_delivered();
}

std::vector<std::string> column_names(const RunConfig& cfg) {
  if (cfg.which == Which::min) return {"lambda_min"};
  if (cfg.which == Which::max) return {"lambda_max"};
  std::vector<std::string> names;
  for (int j = 1; j <= cfg.n; ++j) names.push_back("lambda_" + std::to_string(j));
  return names;
}

void write_csv_preamble(std::ofstream& os, const RunConfig& cfg) {
  os << "# laguerre v" << kToolVersion << "\n";
  os << "# generator: " << RngStream::kGeneratorId << "\n";
  os << "# config: " << cfg.to_json().dump() << "\n";
}

EmpiricalSample batch_column(const RunConfig& cfg, const BatchResult& b, int col,
                             const std::string& sampler) {
  return EmpiricalSample(b.column(col),
                         SampleLabel{cfg.to_json().dump(), sampler, cfg.seed});
}

// ---- verify checks ------------------------------------------------------

struct CheckOutcome {
  std::string name;
  bool pass = false;
  json details;
};

void write_histogram_csv(const std::string& path, const RunConfig& cfg, const Histogram& h) {
  std::ofstream os = open_output(path);
  write_csv_preamble(os, cfg);
  os << "bin_lo,bin_hi,density\n";
  for (std::size_t i = 0; i < h.density.size(); ++i) {
    os << format_double(h.edges[i]) << ',' << format_double(h.edges[i + 1]) << ','
       << format_double(h.density[i]) << '\n';
  }
  finish_output(os, path);
}

CheckOutcome check_minlaw(const RunConfig& cfg) {
  RunConfig sub = cfg;
  sub.which = Which::min;
  const BatchResult b = sample_batch(sub);
  const EmpiricalSample s = batch_column(sub, b, 0, to_string(sub.method));
  const double n = cfg.n;
  const KsReport ks = ks_one_sample(
      s, [n](double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-n * x); }, 1e-3);

  CheckOutcome out;
  out.name = "minlaw";
  out.pass = ks.pass;
  out.details = {{"law", "1 - exp(-n x) at R = n, beta = 2"}, {"ks", json(ks)}};
  if (!cfg.output.empty()) {
    const std::string hist = sibling_path(cfg.output, "_minlaw_hist.csv");
    write_histogram_csv(hist, sub, make_histogram(s, cfg.bins));
    out.details["histogram"] = hist;
  }
  return out;
}

CheckOutcome check_maxlaw(const RunConfig& cfg) {
  RunConfig sub = cfg;
  sub.which = Which::max;
  const BatchResult b = sample_batch(sub);
  const double a = cfg.r - cfg.n;
  std::vector<double> rescaled = b.column(0);
  for (double& v : rescaled) v = tw_rescale(v, cfg.n, a);
  const EmpiricalSample s{std::move(rescaled),
                          SampleLabel{cfg.to_json().dump(), to_string(sub.method), cfg.seed}};

  const TWGrid grid(cfg.tw_order);
  const Moments m = moments(s);
  const double sd = std::sqrt(m.variance);
  const KsReport ks =
      ks_one_sample(s, [&grid](double x) { return tw2_cdf(x, grid); }, 1e-3);

  // Reference moments of the Fredholm-determinant law.
  const bool mean_ok = std::abs(m.mean - (-1.7711)) <= 0.10;
  const bool sd_ok = std::abs(sd - 0.902) <= 0.05;
  const bool ks_ok = ks.statistic < 0.03;  // soft finite-n threshold

  CheckOutcome out;
  out.name = "maxlaw";
  out.pass = mean_ok && sd_ok && ks_ok;
  out.details = {{"mean", m.mean},          {"sd", sd},
                 {"mean_ok", mean_ok},      {"sd_ok", sd_ok},
                 {"ks_statistic", ks.statistic}, {"ks_soft_threshold", 0.03},
                 {"ks_ok", ks_ok}};
  if (!cfg.output.empty()) {
    const std::string hist = sibling_path(cfg.output, "_maxlaw_hist.csv");
    write_histogram_csv(hist, sub, make_histogram(s, cfg.bins));
    out.details["histogram"] = hist;
  }
  return out;
}

CheckOutcome check_cross(const RunConfig& cfg) {
  RunConfig a = cfg;
  a.which = Which::all;
  RunConfig b = a;
  b.method = (cfg.method == Method::tridiagonal) ? Method::pencil : Method::tridiagonal;
  b.stream_offset = cfg.stream_offset + static_cast<std::uint64_t>(cfg.samples);

  const BatchResult ba = sample_batch(a);
  const BatchResult bb = sample_batch(b);

  CheckOutcome out;
  out.name = "cross";
  out.pass = true;
  out.details = {{"method_a", to_string(a.method)}, {"method_b", to_string(b.method)}};
  json reports = json::array();
  for (int j = 0; j < ba.cols; ++j) {
    const KsReport ks = ks_two_sample(batch_column(a, ba, j, to_string(a.method)),
                                      batch_column(b, bb, j, to_string(b.method)), 1e-3);
    out.pass = out.pass && ks.pass;
    reports.push_back(json(ks));
  }
  out.details["per_eigenvalue"] = reports;
  return out;
}

CheckOutcome check_trace(const RunConfig& cfg) {
  RunConfig sub = cfg;
  sub.which = Which::all;
  const BatchResult b = sample_batch(sub);

  std::vector<double> traces(b.samples);
  for (long i = 0; i < b.samples; ++i) {
    double t = 0.0;
    for (int j = 0; j < b.cols; ++j) t += b.value(i, j);
    traces[i] = t;
  }
  const EmpiricalSample s{std::move(traces),
                          SampleLabel{cfg.to_json().dump(), to_string(cfg.method), cfg.seed}};
  const Moments m = moments(s);

  const double s2 = cfg.sigma1 * cfg.sigma1;
  const double mu = cfg.r * (s2 + cfg.n - 1.0);
  const double var = 2.0 * cfg.r / cfg.beta * (s2 * s2 + cfg.n - 1.0);
  const double band = 3.0 * std::sqrt(var / static_cast<double>(b.samples));
  const bool mean_ok = std::abs(m.mean - mu) <= band;
  bool var_ok = true;
  if (b.samples >= 5000) var_ok = std::abs(m.variance - var) <= 0.10 * var;

  CheckOutcome out;
  out.name = "trace";
  out.pass = mean_ok && var_ok;
  out.details = {{"mean", m.mean},       {"expected_mean", mu}, {"band", band},
                 {"variance", m.variance}, {"expected_variance", var},
                 {"mean_ok", mean_ok},   {"variance_ok", var_ok}};
  if (!cfg.output.empty()) {
    const std::string hist = sibling_path(cfg.output, "_trace_hist.csv");
    write_histogram_csv(hist, sub, make_histogram(s, cfg.bins));
    out.details["histogram"] = hist;
  }
  return out;
}

// ---- theory curves and the overlay plot ---------------------------------

std::vector<double> read_sample_column(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open sample file: " + path);
  std::vector<double> out;
  std::string line;
  bool header_skipped = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_skipped) {
      header_skipped = true;  // column header
      continue;
    }
    const auto comma = line.find_last_of(',');
    const std::string cell = comma == std::string::npos ? line : line.substr(comma + 1);
    try {
      out.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw IoError("malformed sample row in " + path + ": " + line);
    }
  }
  if (out.empty()) throw IoError("no sample rows found in " + path);
  return out;
}

void write_overlay_svg(const std::string& path, const RunConfig& cfg, const Histogram& h,
                       const std::vector<std::pair<double, double>>& curve,
                       const std::string& curve_name) {
  const double w = 640.0, ht = 420.0, ml = 60.0, mr = 15.0, mt = 18.0, mb = 45.0;
  double x_lo = h.edges.front(), x_hi = h.edges.back();
  double y_hi = 0.0;
  for (double d : h.density) y_hi = std::max(y_hi, d);
  for (const auto& [x, y] : curve) {
    x_lo = std::min(x_lo, x);
    x_hi = std::max(x_hi, x);
    y_hi = std::max(y_hi, y);
  }
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  if (y_hi <= 0.0) y_hi = 1.0;
  y_hi *= 1.08;

  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (w - ml - mr); };
  auto py = [&](double y) { return ht - mb - y / y_hi * (ht - mt - mb); };

  std::ofstream os = open_output(path);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << ht
     << "\" viewBox=\"0 0 " << w << " " << ht << "\">\n";
  os << "<!-- " << cfg.to_json().dump() << " -->\n";
  os << "<rect width=\"" << w << "\" height=\"" << ht << "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < h.density.size(); ++i) {
    const double x0 = px(h.edges[i]);
    const double x1 = px(h.edges[i + 1]);
    const double y0 = py(h.density[i]);
    os << "<rect x=\"" << format_double(x0) << "\" y=\"" << format_double(y0) << "\" width=\""
       << format_double(x1 - x0) << "\" height=\"" << format_double(ht - mb - y0)
       << "\" fill=\"#a6c8e0\" stroke=\"#5b8db8\" stroke-width=\"0.5\"/>\n";
  }
  os << "<polyline fill=\"none\" stroke=\"#c23b22\" stroke-width=\"1.6\" points=\"";
  for (const auto& [x, y] : curve) {
    os << format_double(px(x)) << ',' << format_double(py(y)) << ' ';
  }
  os << "\"/>\n";
  // axes + ticks
  os << "<line x1=\"" << ml << "\" y1=\"" << ht - mb << "\" x2=\"" << w - mr << "\" y2=\""
     << ht - mb << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << ht - mb
     << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / 5.0;
    const double y = y_hi / 1.08 * i / 5.0;
    os << "<line x1=\"" << format_double(px(x)) << "\" y1=\"" << ht - mb << "\" x2=\""
       << format_double(px(x)) << "\" y2=\"" << ht - mb + 4 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << format_double(px(x)) << "\" y=\"" << ht - mb + 16
       << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">"
       << format_double(std::round(x * 1e4) / 1e4) << "</text>\n";
    os << "<line x1=\"" << ml - 4 << "\" y1=\"" << format_double(py(y)) << "\" x2=\"" << ml
       << "\" y2=\"" << format_double(py(y)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << ml - 7 << "\" y=\"" << format_double(py(y) + 3)
       << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">"
       << format_double(std::round(y * 1e4) / 1e4) << "</text>\n";
  }
  os << "<text x=\"" << (ml + (w - ml - mr) / 2) << "\" y=\"" << ht - 8
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << curve_name
     << "</text>\n";
  os << "</svg>\n";
  finish_output(os, path);
}

}  // namespace

Method parse_method(const std::string& s) {
  if (s == "tridiagonal") return Method::tridiagonal;
  if (s == "pencil") return Method::pencil;
  if (s == "dense") return Method::dense;
  if (s == "closed2") return Method::closed2;
  throw std::invalid_argument("unknown method: " + s);
}

Which parse_which(const std::string& s) {
  if (s == "all") return Which::all;
  if (s == "min") return Which::min;
  if (s == "max") return Which::max;
  throw std::invalid_argument("unknown which: " + s);
}

FileFormat parse_format(const std::string& s) {
  if (s == "csv") return FileFormat::csv;
  if (s == "json") return FileFormat::json;
  throw std::invalid_argument("unknown format: " + s);
}

const char* to_string(Method m) {
  switch (m) {
    case Method::tridiagonal: return "tridiagonal";
    case Method::pencil: return "pencil";
    case Method::dense: return "dense";
    case Method::closed2: return "closed2";
  }
  return "?";
}

const char* to_string(Which w) {
  switch (w) {
    case Which::all: return "all";
    case Which::min: return "min";
    case Which::max: return "max";
  }
  return "?";
}

const char* to_string(FileFormat f) { return f == FileFormat::csv ? "csv" : "json"; }

void RunConfig::validate() const {
  ensemble().validate();
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
  if (bins < 0) throw std::invalid_argument("bins must be >= 0");
  if (tw_order < 4) throw std::invalid_argument("tw order must be >= 4");
  if (method == Method::closed2) {
    if (n != 2) throw std::invalid_argument("method closed2 requires n = 2");
    if (sigma1 != 1.0) throw std::invalid_argument("method closed2 requires sigma1 = 1");
    if (beta != 1.0 && beta != 2.0) {
      throw std::invalid_argument("method closed2 requires beta in {1, 2}");
    }
  }
  if (method == Method::dense) {
    if (r != std::floor(r)) throw std::invalid_argument("method dense requires integer R");
    if (beta != 1.0 && beta != 2.0) {
      throw std::invalid_argument("method dense requires beta in {1, 2}");
    }
  }
}

nlohmann::json RunConfig::to_json() const {
  return json{{"n", n},
              {"r", r},
              {"beta", beta},
              {"sigma1", sigma1},
              {"method", to_string(method)},
              {"which", to_string(which)},
              {"samples", samples},
              {"seed", seed},
              {"stream_offset", stream_offset},
              {"threads", threads},
              {"format", to_string(format)},
              {"bins", bins}};
}

std::vector<double> BatchResult::column(int j) const {
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i) out[static_cast<std::size_t>(i)] = value(i, j);
  return out;
}

BatchResult sample_batch(const RunConfig& cfg) {
  cfg.validate();
  const int cols = cfg.which == Which::all ? cfg.n : 1;

  BatchResult out;
  out.samples = cfg.samples;
  out.cols = cols;
  out.values.assign(static_cast<std::size_t>(cfg.samples) * cols, 0.0);

  const double t0 = now_seconds();
  const int workers = static_cast<int>(std::min<long>(cfg.threads, cfg.samples));
  std::vector<std::uint64_t> variates(static_cast<std::size_t>(workers), 0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));

  auto work = [&](int w, long lo, long hi) {
    try {
      for (long i = lo; i < hi; ++i) {
        draw_row(cfg, static_cast<std::uint64_t>(i),
                 out.values.data() + static_cast<std::size_t>(i) * cols,
                 variates[static_cast<std::size_t>(w)]);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (workers <= 1) {
    work(0, 0, cfg.samples);
  } else {
    const long chunk = (cfg.samples + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const long lo = w * chunk;
      const long hi = std::min<long>(cfg.samples, lo + chunk);
      pool.emplace_back(work, w, lo, hi);
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  out.wall_seconds = now_seconds() - t0;
  for (std::uint64_t v : variates) out.variates += v;
  return out;
}

nlohmann::json summary_json(const RunConfig& cfg, const BatchResult& batch) {
  return json{{"tool_version", kToolVersion},
              {"generator", RngStream::kGeneratorId},
              {"config", cfg.to_json()},
              {"seed", cfg.seed},
              {"samples", batch.samples},
              {"columns", column_names(cfg)},
              {"wall_seconds", batch.wall_seconds},
              {"variates_consumed", batch.variates}};
}

int cmd_sample(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.output.empty()) throw std::invalid_argument("sample: output path required");
  const BatchResult b = sample_batch(cfg);
  const std::vector<std::string> names = column_names(cfg);

  if (cfg.format == FileFormat::csv) {
    std::ofstream os = open_output(cfg.output);
    write_csv_preamble(os, cfg);
    os << "sample_index";
    for (const auto& c : names) os << ',' << c;
    os << '\n';
    for (long i = 0; i < b.samples; ++i) {
      os << i;
      for (int j = 0; j < b.cols; ++j) os << ',' << format_double(b.value(i, j));
      os << '\n';
    }
    finish_output(os, cfg.output);
  } else {
    json rows = json::array();
    for (long i = 0; i < b.samples; ++i) {
      json row = json::array();
      for (int j = 0; j < b.cols; ++j) row.push_back(b.value(i, j));
      rows.push_back(std::move(row));
    }
    json doc{{"tool_version", kToolVersion},
             {"generator", RngStream::kGeneratorId},
             {"config", cfg.to_json()},
             {"columns", names},
             {"samples", rows}};
    std::ofstream os = open_output(cfg.output);
    os << doc.dump(2) << '\n';
    finish_output(os, cfg.output);
  }

  const std::string spath = cfg.output + ".summary.json";
  std::ofstream ss = open_output(spath);
  ss << summary_json(cfg, b).dump(2) << '\n';
  finish_output(ss, spath);

  std::cout << "wrote " << b.samples << " samples to " << cfg.output << " ("
            << format_double(b.wall_seconds) << " s, " << b.variates << " variates)\n";
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.output.empty()) throw std::invalid_argument("verify: output path required");

  std::vector<std::string> wanted = cfg.checks;
  if (wanted.empty()) {
    if (cfg.r == cfg.n && cfg.beta == 2.0 && cfg.sigma1 == 1.0) wanted.push_back("minlaw");
    if (cfg.beta == 2.0 && cfg.sigma1 == 1.0) wanted.push_back("maxlaw");
    wanted.push_back("cross");
    wanted.push_back("trace");
  }

  std::vector<CheckOutcome> results;
  for (const auto& name : wanted) {
    if (name == "minlaw") {
      results.push_back(check_minlaw(cfg));
    } else if (name == "maxlaw") {
      results.push_back(check_maxlaw(cfg));
    } else if (name == "cross") {
      results.push_back(check_cross(cfg));
    } else if (name == "trace") {
      results.push_back(check_trace(cfg));
    } else {
      throw std::invalid_argument("verify: unknown check " + name);
    }
  }

  bool all_pass = true;
  json checks = json::array();
  for (const auto& c : results) {
    all_pass = all_pass && c.pass;
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL") << '\n';
  }

  json report{{"tool_version", kToolVersion},
              {"generator", RngStream::kGeneratorId},
              {"config", cfg.to_json()},
              {"checks", checks},
              {"all_pass", all_pass}};
  std::ofstream os = open_output(cfg.output);
  os << report.dump(2) << '\n';
  finish_output(os, cfg.output);

  return all_pass ? kExitOk : kExitVerify;
}

int cmd_bench(const RunConfig& cfg) {
  if (cfg.output.empty()) throw std::invalid_argument("bench: output path required");
  std::vector<std::pair<int, double>> grid = cfg.grid;
  if (grid.empty()) grid.emplace_back(cfg.n, cfg.r);
  std::vector<std::string> methods = cfg.methods;
  if (methods.empty()) methods = {"tridiagonal", "dense"};

  std::ofstream os = open_output(cfg.output);
  write_csv_preamble(os, cfg);
  os << "n,r,beta,method,samples,mean_sample_seconds,variates_per_sample\n";

  for (const auto& [n, r] : grid) {
    for (const auto& mname : methods) {
      RunConfig cell = cfg;
      cell.n = n;
      cell.r = r;
      cell.method = parse_method(mname);
      cell.threads = 1;
      cell.validate();

      // warmup draw, excluded from timing; also yields the variate count
      std::uint64_t variates = 0;
      std::vector<double> row(static_cast<std::size_t>(cell.which == Which::all ? n : 1));
      draw_row(cell, 0, row.data(), variates);

      const double t0 = now_seconds();
      std::uint64_t scratch = 0;
      for (long i = 0; i < cell.samples; ++i) {
        draw_row(cell, static_cast<std::uint64_t>(i) + 1, row.data(), scratch);
      }
      const double per_sample = (now_seconds() - t0) / static_cast<double>(cell.samples);

      os << n << ',' << format_double(r) << ',' << format_double(cell.beta) << ',' << mname
         << ',' << cell.samples << ',' << format_double(per_sample) << ',' << variates << '\n';
    }
  }
  finish_output(os, cfg.output);
  return kExitOk;
}

int cmd_theory(const RunConfig& cfg) {
  if (cfg.output.empty()) throw std::invalid_argument("theory: output path required");
  std::vector<std::string> curves = cfg.curves;
  if (curves.empty()) {
    if (cfg.r == cfg.n && cfg.beta == 2.0) curves.push_back("pmin");
    curves.push_back("f2");
  }

  const TWGrid grid(cfg.tw_order);
  std::vector<std::pair<double, double>> plot_curve;
  std::string plot_name;

  for (const auto& curve : curves) {
    const std::string path =
        curves.size() == 1 ? cfg.output : sibling_path(cfg.output, "_" + curve + ".csv");
    std::ofstream os = open_output(path);
    write_csv_preamble(os, cfg);

    if (curve == "pmin") {
      os << "x,pdf\n";
      const double xmax = std::log(1e4) / cfg.n;
      std::vector<std::pair<double, double>> pts;
      for (int i = 0; i < cfg.grid_points; ++i) {
        const double x = xmax * i / (cfg.grid_points - 1.0);
        pts.emplace_back(x, pmin_exact(x, cfg.n));
        os << format_double(x) << ',' << format_double(pts.back().second) << '\n';
      }
      if (plot_curve.empty()) {
        plot_curve = pts;
        plot_name = "smallest-eigenvalue pdf n e^(-n x)";
      }
    } else if (curve == "f2") {
      os << "s,F2,quadrature_order\n";
      for (int i = 0; i < cfg.grid_points; ++i) {
        const double s =
            cfg.grid_min + (cfg.grid_max - cfg.grid_min) * i / (cfg.grid_points - 1.0);
        os << format_double(s) << ',' << format_double(tw2_cdf(s, grid)) << ',' << grid.order()
           << '\n';
      }
    } else if (curve == "tw2pdf") {
      os << "s,pdf\n";
      std::vector<std::pair<double, double>> pts;
      for (int i = 0; i < cfg.grid_points; ++i) {
        const double s =
            cfg.grid_min + (cfg.grid_max - cfg.grid_min) * i / (cfg.grid_points - 1.0);
        pts.emplace_back(s, tw2_pdf(s, grid));
        os << format_double(s) << ',' << format_double(pts.back().second) << '\n';
      }
      plot_curve = pts;
      plot_name = "Tracy-Widom beta=2 pdf";
    } else if (curve == "joint1") {
      if (cfg.n != 1) throw std::invalid_argument("theory: joint1 curve requires n = 1");
      os << "lambda,pdf\n";
      const double xmax = cfg.r + 6.0 * std::sqrt(cfg.r);
      for (int i = 1; i <= cfg.grid_points; ++i) {
        const double x = xmax * i / static_cast<double>(cfg.grid_points);
        const LogDensity d = log_joint_density({x}, cfg.ensemble());
        os << format_double(x) << ',' << format_double(std::exp(d.log_value)) << '\n';
      }
    } else {
      throw std::invalid_argument("theory: unknown curve " + curve);
    }
    finish_output(os, path);
  }

  if (!cfg.svg.empty()) {
    if (cfg.overlay.empty()) {
      throw std::invalid_argument("theory: --svg requires --overlay samples");
    }
    if (plot_curve.empty()) {
      throw std::invalid_argument("theory: no plottable density curve requested");
    }
    std::vector<double> xs = read_sample_column(cfg.overlay);
    if (cfg.rescale) {
      for (double& x : xs) x = tw_rescale(x, cfg.n, cfg.r - cfg.n);
    }
    const Histogram h = make_histogram(EmpiricalSample(std::move(xs)), cfg.bins);
    write_overlay_svg(cfg.svg, cfg, h, plot_curve, plot_name);
  }
  return kExitOk;
}

int run_command(const std::string& command, const RunConfig& cfg) {
  try {
    if (command == "sample") return cmd_sample(cfg);
    if (command == "verify") return cmd_verify(cfg);
    if (command == "bench") return cmd_bench(cfg);
    if (command == "theory") return cmd_theory(cfg);
    throw std::invalid_argument("unknown command: " + command);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (config): " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "error (io): " << e.what() << '\n';
    return kExitIo;
  } catch (const SolverError& e) {
    std::cerr << "error (solver): " << e.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
}

}  // namespace laguerre::run
