// Command-line front end for the toporeg shared library. Everything
// substantive happens behind the C API; this file only parses arguments,
// moves bytes between files and the library, and maps statuses to exit
// codes (0 ok, 2 usage, 3 parse, 4 pipeline).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toporeg.h"

namespace {

struct string_holder {
  char* ptr = nullptr;
  ~string_holder() { tr_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

using sample_ptr = std::unique_ptr<tr_sample, decltype(&tr_sample_free)>;
using config_ptr = std::unique_ptr<tr_config, decltype(&tr_config_free)>;
using diagram_ptr = std::unique_ptr<tr_diagram, decltype(&tr_diagram_free)>;

int fail_with(tr_status st) {
  std::cerr << "error: " << tr_last_error() << "\n";
  return static_cast<int>(st);
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return static_cast<bool>(out);
}

struct common_options {
  std::string kernel = "gaussian";
  std::optional<double> bandwidth;
  int bandwidth_exponent = 3;
  double epsilon = 0.1;
  int grid = 512;
  double alpha = 0.05;
  double delta = 0.1;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kernel", kernel, "Kernel family: gaussian or cauchy")
        ->check(CLI::IsMember({"gaussian", "cauchy"}));
    auto* bw = cmd->add_option("--bandwidth", bandwidth, "Fixed bandwidth h");
    cmd->add_option("--bandwidth-exponent", bandwidth_exponent,
                    "Power-law bandwidth h = n^(-1/e)")
        ->check(CLI::IsMember({3, 5, 7}))
        ->excludes(bw);
    cmd->add_option("--epsilon", epsilon, "Filtration step parameter");
    cmd->add_option("--grid", grid, "Evaluation grid size");
    cmd->add_option("--alpha", alpha, "Significance level");
    cmd->add_option("--delta", delta, "Modality neighborhood half-width");
    cmd->add_option("--seed", seed, "Random seed");
  }

  tr_status configure(tr_config* cfg) const {
    tr_status st;
    if ((st = tr_config_set_kernel(cfg, kernel.c_str())) != TR_OK) return st;
    if (bandwidth) {
      if ((st = tr_config_set_bandwidth(cfg, *bandwidth)) != TR_OK) return st;
    } else {
      st = tr_config_set_bandwidth_exponent(cfg, bandwidth_exponent);
      if (st != TR_OK) return st;
    }
    if ((st = tr_config_set_epsilon(cfg, epsilon)) != TR_OK) return st;
    if ((st = tr_config_set_grid_points(cfg, grid)) != TR_OK) return st;
    if ((st = tr_config_set_alpha(cfg, alpha)) != TR_OK) return st;
    if ((st = tr_config_set_modality_delta(cfg, delta)) != TR_OK) return st;
    return tr_config_set_seed(cfg, seed);
  }
};

int cmd_simulate(const std::string& scenario, int n, double noise_sd,
                 std::uint64_t seed, const std::string& out_path) {
  tr_sample* raw = nullptr;
  tr_status st = tr_simulate(scenario.c_str(), n, noise_sd, seed, &raw);
  if (st != TR_OK) return fail_with(st);
  sample_ptr s(raw, tr_sample_free);

  if ((st = tr_sample_write_csv(s.get(), out_path.c_str())) != TR_OK) {
    return fail_with(st);
  }
  string_holder meta;
  st = tr_scenario_metadata_json(scenario.c_str(), n, noise_sd, seed, &meta.ptr);
  if (st != TR_OK) return fail_with(st);
  std::cout << meta.str();
  return 0;
}

int cmd_analyze(const std::string& csv_path, const common_options& opts,
                const std::string& structure, std::optional<double> crit,
                bool auto_crit, const std::string& out_path) {
  if (structure == "modality" && !crit && !auto_crit) {
    std::cerr << "error: modality needs --critical-point <x> or "
                 "--auto-critical-points\n";
    return 2;
  }
  tr_sample* raw_sample = nullptr;
  tr_status st = tr_sample_from_csv(csv_path.c_str(), &raw_sample);
  if (st != TR_OK) return fail_with(st);
  sample_ptr s(raw_sample, tr_sample_free);

  tr_config* raw_cfg = nullptr;
  if ((st = tr_config_new(&raw_cfg)) != TR_OK) return fail_with(st);
  config_ptr cfg(raw_cfg, tr_config_free);
  if ((st = opts.configure(cfg.get())) != TR_OK) return fail_with(st);

  const double cp = crit.value_or(0.0);
  string_holder report;
  const auto t0 = std::chrono::steady_clock::now();
  st = tr_analyze(s.get(), cfg.get(), structure.c_str(), crit ? &cp : nullptr,
                  auto_crit ? 1 : 0, &report.ptr);
  if (st != TR_OK) return fail_with(st);
  const auto t1 = std::chrono::steady_clock::now();
  std::cerr << "analyze: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                   .count()
            << " ms\n";

  if (out_path.empty()) {
    std::cout << report.str();
  } else if (!write_file(out_path, report.str())) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 4;
  }
  return 0;
}

int cmd_distance(const std::string& path_a, const std::string& path_b) {
  tr_diagram* raw_a = nullptr;
  tr_status st = tr_diagram_from_json_file(path_a.c_str(), &raw_a);
  if (st != TR_OK) return fail_with(st);
  diagram_ptr a(raw_a, tr_diagram_free);

  tr_diagram* raw_b = nullptr;
  if ((st = tr_diagram_from_json_file(path_b.c_str(), &raw_b)) != TR_OK) {
    return fail_with(st);
  }
  diagram_ptr b(raw_b, tr_diagram_free);

  double d = 0.0;
  if ((st = tr_bottleneck_distance(a.get(), b.get(), &d)) != TR_OK) {
    return fail_with(st);
  }
  std::printf("%.12g\n", d);
  return 0;
}

int cmd_consistency(const std::string& scenario, int n, int reps,
                    double noise_sd, const common_options& opts,
                    const std::string& out_path) {
  tr_config* raw_cfg = nullptr;
  tr_status st = tr_config_new(&raw_cfg);
  if (st != TR_OK) return fail_with(st);
  config_ptr cfg(raw_cfg, tr_config_free);
  if ((st = opts.configure(cfg.get())) != TR_OK) return fail_with(st);

  string_holder summary;
  st = tr_consistency(scenario.c_str(), n, reps, noise_sd, cfg.get(),
                      &summary.ptr);
  if (st != TR_OK) return fail_with(st);
  if (out_path.empty()) {
    std::cout << summary.str();
  } else if (!write_file(out_path, summary.str())) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 4;
  }
  return 0;
}

int cmd_barcode_svg(const std::string& diagram_path, const std::string& out_path) {
  tr_diagram* raw = nullptr;
  tr_status st = tr_diagram_from_json_file(diagram_path.c_str(), &raw);
  if (st != TR_OK) return fail_with(st);
  diagram_ptr d(raw, tr_diagram_free);

  string_holder svg;
  if ((st = tr_barcode_svg(d.get(), &svg.ptr)) != TR_OK) return fail_with(st);
  if (!write_file(out_path, svg.str())) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure inference for regression curves via the persistent "
               "homology of the estimated derivative"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tr_version()));

  // simulate
  auto* sim = app.add_subcommand("simulate", "Generate a seeded scenario CSV");
  std::string sim_scenario;
  int sim_n = 50;
  double sim_noise = 0.0;  // 0 selects the library default sqrt(0.1)
  std::uint64_t sim_seed = 0;
  std::string sim_out;
  sim->add_option("scenario", sim_scenario,
                  "exp-monotone, ratio-nonconvex, or bimodal-mixture")
      ->required();
  sim->add_option("--n", sim_n, "Sample size");
  sim->add_option("--noise-sd", sim_noise, "Noise standard deviation");
  sim->add_option("--seed", sim_seed, "Random seed");
  sim->add_option("--out", sim_out, "Output CSV path")->required();

  // analyze
  auto* ana = app.add_subcommand("analyze", "Run the pipeline on a CSV");
  std::string ana_csv, ana_structure = "monotonicity", ana_out;
  common_options ana_opts;
  std::optional<double> ana_crit;
  bool ana_auto = false;
  ana->add_option("csv", ana_csv, "Input CSV with an x,y header")->required();
  ana->add_option("--structure", ana_structure,
                  "monotonicity, convexity, or modality")
      ->check(CLI::IsMember({"monotonicity", "convexity", "modality"}));
  ana->add_option("--critical-point", ana_crit,
                  "Candidate critical point for modality");
  ana->add_flag("--auto-critical-points", ana_auto,
                "Use interior zero crossings of the derivative estimate");
  ana->add_option("--out", ana_out, "Report path (stdout when omitted)");
  ana_opts.attach(ana);

  // distance
  auto* dist = app.add_subcommand("distance",
                                  "Bottleneck distance between two diagrams");
  std::string dist_a, dist_b;
  dist->add_option("diagram-a", dist_a, "First diagram JSON")->required();
  dist->add_option("diagram-b", dist_b, "Second diagram JSON")->required();

  // consistency
  auto* cons = app.add_subcommand(
      "consistency", "Monte Carlo distance to the analytic truth");
  std::string cons_scenario = "exp-monotone", cons_out;
  int cons_n = 100, cons_reps = 200;
  double cons_noise = 0.0;
  common_options cons_opts;
  cons->add_option("--scenario", cons_scenario, "Built-in scenario name");
  cons->add_option("--n", cons_n, "Sample size per replication");
  cons->add_option("--reps", cons_reps, "Number of replications");
  cons->add_option("--noise-sd", cons_noise, "Noise standard deviation");
  cons->add_option("--out", cons_out, "Summary path (stdout when omitted)");
  cons_opts.attach(cons);

  // barcode-svg
  auto* svg = app.add_subcommand("barcode-svg", "Render a diagram as SVG");
  std::string svg_in, svg_out;
  svg->add_option("diagram", svg_in, "Diagram JSON path")->required();
  svg->add_option("--out", svg_out, "Output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sim->parsed()) {
    return cmd_simulate(sim_scenario, sim_n, sim_noise, sim_seed, sim_out);
  }
  if (ana->parsed()) {
    return cmd_analyze(ana_csv, ana_opts, ana_structure, ana_crit, ana_auto,
                       ana_out);
  }
  if (dist->parsed()) return cmd_distance(dist_a, dist_b);
  if (cons->parsed()) {
    return cmd_consistency(cons_scenario, cons_n, cons_reps, cons_noise,
                           cons_opts, cons_out);
  }
  if (svg->parsed()) return cmd_barcode_svg(svg_in, svg_out);
  return 2;
}
