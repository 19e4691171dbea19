#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "laguerre/run.hpp"

namespace {

using laguerre::run::RunConfig;

void add_ensemble_options(CLI::App* cmd, RunConfig& cfg, std::string& method,
                          std::string& which, std::string& format) {
  cmd->add_option("--n", cfg.n, "matrix order");
  cmd->add_option("--r", cfg.r, "sample-count parameter R >= n (continuous allowed)");
  cmd->add_option("--beta", cfg.beta, "Dyson index > 0");
  cmd->add_option("--sigma1", cfg.sigma1, "single-spike scale (1 = unspiked)");
  cmd->add_option("--method", method, "tridiagonal|pencil|dense|closed2");
  cmd->add_option("--which", which, "all|min|max");
  cmd->add_option("--samples", cfg.samples, "number of draws");
  cmd->add_option("--seed", cfg.seed, "base seed; sample i uses stream index i");
  cmd->add_option("--threads", cfg.threads, "worker threads")
      ->envname("LAGUERRE_THREADS");
  cmd->add_option("--output,-o", cfg.output, "output file path");
  cmd->add_option("--format", format, "csv|json");
  cmd->add_option("--bins", cfg.bins, "histogram bins (0 = Freedman-Diaconis)");
}

std::string resolve_output(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("LAGUERRE_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string d(dir);
  if (d.back() != '/') d += '/';
  return d + path;
}

std::vector<std::pair<int, double>> parse_grid(const std::string& spec) {
  std::vector<std::pair<int, double>> grid;
  std::stringstream ss(spec);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto colon = cell.find(':');
    if (colon == std::string::npos) {
      throw CLI::ValidationError("--grid", "expected n:R cells, e.g. 30:30,64:96");
    }
    grid.emplace_back(std::stoi(cell.substr(0, colon)), std::stod(cell.substr(colon + 1)));
  }
  return grid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beta-Laguerre / Wishart eigenvalue sampling and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("laguerre v") + laguerre::run::kToolVersion);

  RunConfig cfg;
  std::string method = "tridiagonal", which = "all", format = "csv";
  std::string grid_spec, checks_spec, methods_spec, curves_spec;

  CLI::App* sample = app.add_subcommand("sample", "draw eigenvalue samples to CSV/JSON");
  add_ensemble_options(sample, cfg, method, which, format);

  CLI::App* verify = app.add_subcommand("verify", "run law/equivalence checks, write a report");
  add_ensemble_options(verify, cfg, method, which, format);
  verify->add_option("--checks", checks_spec,
                     "comma list of minlaw,maxlaw,cross,trace (default: applicable set)");
  verify->add_option("--tw-order", cfg.tw_order, "Tracy-Widom quadrature order");

  CLI::App* bench = app.add_subcommand("bench", "time samplers over an (n, R) grid");
  add_ensemble_options(bench, cfg, method, which, format);
  bench->add_option("--grid", grid_spec, "grid cells n:R,n:R,...");
  bench->add_option("--methods", methods_spec, "comma list of methods to time");

  CLI::App* theory = app.add_subcommand("theory", "emit theory curves/tables, optional SVG");
  add_ensemble_options(theory, cfg, method, which, format);
  theory->add_option("--curves", curves_spec, "comma list of pmin,f2,tw2pdf,joint1");
  theory->add_option("--grid-min", cfg.grid_min, "curve grid lower end");
  theory->add_option("--grid-max", cfg.grid_max, "curve grid upper end");
  theory->add_option("--grid-points", cfg.grid_points, "curve grid size");
  theory->add_option("--overlay", cfg.overlay, "sample CSV to histogram under the curve");
  theory->add_option("--svg", cfg.svg, "overlay SVG output path");
  theory->add_flag("--tw-rescale", cfg.rescale, "rescale overlay samples by the soft-edge map");
  theory->add_option("--tw-order", cfg.tw_order, "Tracy-Widom quadrature order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : laguerre::run::kExitConfig;
  }

  try {
    cfg.method = laguerre::run::parse_method(method);
    cfg.which = laguerre::run::parse_which(which);
    cfg.format = laguerre::run::parse_format(format);
    if (!grid_spec.empty()) cfg.grid = parse_grid(grid_spec);
    auto split = [](const std::string& s) {
      std::vector<std::string> out;
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
      }
      return out;
    };
    if (!checks_spec.empty()) cfg.checks = split(checks_spec);
    if (!methods_spec.empty()) cfg.methods = split(methods_spec);
    if (!curves_spec.empty()) cfg.curves = split(curves_spec);
  } catch (const std::exception& e) {
    std::cerr << "error (config): " << e.what() << '\n';
    return laguerre::run::kExitConfig;
  }

  std::string command;
  std::string default_output;
  if (sample->parsed()) {
    command = "sample";
    default_output = "samples.csv";
  } else if (verify->parsed()) {
    command = "verify";
    default_output = "verify_report.json";
  } else if (bench->parsed()) {
    command = "bench";
    default_output = "bench.csv";
  } else {
    command = "theory";
    default_output = "theory.csv";
  }
  if (cfg.output.empty()) cfg.output = default_output;
  cfg.output = resolve_output(cfg.output);
  if (!cfg.svg.empty()) cfg.svg = resolve_output(cfg.svg);

  return laguerre::run::run_command(command, cfg);
}
