#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

#include <nlohmann/json.hpp>

#include "metric.hpp"

namespace toporeg {

persistence_diagram estimate_diagram(const sample& s, const analysis_config& cfg) {
  cfg.validate();
  const kernel_spec k = cfg.kernel_for(s.size());
  return estimated_persistence(build_discrete_filtration(s, k, cfg.epsilon));
}

namespace {

json verdicts_for(const sample& s, const analysis_config& cfg,
                  structure_kind kind, std::optional<double> critical_point,
                  bool auto_detect) {
  const kernel_spec k = cfg.kernel_for(s.size());
  json out;
  switch (kind) {
    case structure_kind::monotonicity:
      out = verdict_to_json(monotonicity(s, k, cfg));
      break;
    case structure_kind::convexity:
      out = verdict_to_json(convexity(s, k, cfg));
      break;
    case structure_kind::modality: {
      std::vector<double> candidates;
      if (critical_point) {
        candidates.push_back(*critical_point);
      } else if (auto_detect) {
        const auto grid = uniform_grid(s.x_min(), s.x_max(), cfg.grid_points);
        const auto est = evaluate_on_grid(s, k, grid);
        for (double c : zero_crossings(est)) {
          // Keep candidates whose neighborhood fits inside the data range.
          if (c - cfg.modality_delta >= s.x_min() &&
              c + cfg.modality_delta <= s.x_max()) {
            candidates.push_back(c);
          }
        }
      } else {
        fail(errc::invalid_argument,
             "modality needs --critical-point or auto zero-crossing mode");
      }
      json arr = json::array();
      for (double c : candidates) {
        arr.push_back(verdict_to_json(modality(s, k, c, cfg.modality_delta, cfg)));
      }
      out = json{{"candidates", candidates}, {"verdicts", std::move(arr)}};
      break;
    }
  }
  return out;
}

}  // namespace

std::string analyze_to_json(const sample& s, const analysis_config& cfg,
                            structure_kind kind,
                            std::optional<double> critical_point,
                            bool auto_detect) {
  cfg.validate();
  const kernel_spec k = cfg.kernel_for(s.size());

  json report;
  report["tool"] = "toporeg";
  report["structure"] = structure_kind_name(kind);
  report["config"] = config_to_json(cfg, s.size());
  report["input"] = {{"n", s.size()},
                     {"x_min", s.x_min()},
                     {"x_max", s.x_max()},
                     {"y_abs_max", s.y_abs_max()}};
  report["diagram"] =
      diagram_to_json(estimated_persistence(build_discrete_filtration(s, k, cfg.epsilon)));
  report[kind == structure_kind::modality ? "modality" : "verdict"] =
      verdicts_for(s, cfg, kind, critical_point, auto_detect);
  return report.dump(2) + "\n";
}

int thread_budget() {
  if (const char* env = std::getenv("TOPO_REGRESS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

consistency_summary run_consistency(const scenario& base, int reps,
                                    const analysis_config& cfg) {
  cfg.validate();
  if (reps < 1) fail(errc::invalid_argument, "reps must be >= 1");
  if (base.kind == scenario_kind::custom) {
    fail(errc::invalid_scenario,
         "consistency needs a built-in scenario with known truth");
  }

  const persistence_diagram truth = true_derivative_diagram(base);
  const double threshold = 5.0 * cfg.epsilon;

  std::vector<double> distances(reps, 0.0);
  std::vector<double> dominant_death(reps, 0.0), dominant_birth(reps, 0.0);
  std::vector<std::string> failures(reps);
  std::atomic<int> next{0};
  const auto worker = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= reps) return;
      try {
        scenario sc = base;
        sc.seed = derive_seed(base.seed, static_cast<std::uint64_t>(r));
        const sample s = generate(sc);
        const persistence_diagram est = estimate_diagram(s, cfg);
        distances[r] = bottleneck_distance(est, truth);
        if (!est.empty()) {
          dominant_death[r] = est.features.front().death;
          dominant_birth[r] = est.features.front().birth;
        }
      } catch (const std::exception& e) {
        failures[r] = e.what();
      }
    }
  };
  const int workers = std::min(thread_budget(), reps);
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (int r = 0; r < reps; ++r) {
    if (!failures[r].empty()) {
      fail(errc::invalid_argument,
           "replication " + std::to_string(r) + " failed: " + failures[r]);
    }
  }

  consistency_summary out;
  out.reps = reps;
  out.threshold = threshold;
  int within = 0;
  double mean_death = 0.0, mean_birth = 0.0;
  for (int r = 0; r < reps; ++r) {
    out.mean_distance += distances[r];
    out.max_distance = std::max(out.max_distance, distances[r]);
    if (distances[r] <= threshold) ++within;
    mean_death += dominant_death[r];
    mean_birth += dominant_birth[r];
  }
  out.mean_distance /= reps;
  mean_death /= reps;
  mean_birth /= reps;
  out.fraction_within = static_cast<double>(within) / reps;

  // Theoretical diagnostics from the known scenario bounds. y is bounded by
  // sup|m| plus the unit noise truncation.
  const scenario_bounds b = bounds_of(base);
  const kernel_spec k = cfg.kernel_for(static_cast<std::size_t>(base.n));
  const double y_max = b.m_bound + 1.0;
  const double c_eps = theorem_constant(cfg.epsilon, k.delta, b.p_min, k.tau,
                                        y_max, b.m_bound, b.m1_bound);
  const long n_eps =
      static_cast<long>(std::ceil(b.m1_bound / (2.0 * cfg.epsilon)));
  const double prob_bound = consistency_probability_bound(
      cfg.epsilon, k.delta, b.p_min, k.tau, y_max, b.m_bound, b.m1_bound,
      base.n, k.bandwidth, n_eps);

  json j;
  j["tool"] = "toporeg";
  j["scenario"] = scenario_name(base.kind);
  j["n"] = base.n;
  j["noise_sd"] = base.noise_sd;
  j["reps"] = reps;
  j["config"] = config_to_json(cfg, static_cast<std::size_t>(base.n));
  j["threshold"] = threshold;
  j["fraction_within"] = out.fraction_within;
  j["mean_distance"] = out.mean_distance;
  j["max_distance"] = out.max_distance;
  j["mean_dominant_bar"] = {mean_death, mean_birth};
  j["true_diagram"] = diagram_to_json(truth);
  j["theory"] = {{"c_epsilon", c_eps},
                 {"n_epsilon", n_eps},
                 {"probability_lower_bound", prob_bound},
                 {"delta", k.delta},
                 {"tau", k.tau},
                 {"p_min", b.p_min},
                 {"y_max", y_max},
                 {"m_bound", b.m_bound},
                 {"m1_bound", b.m1_bound}};
  j["distances"] = distances;
  out.json = j.dump(2) + "\n";
  return out;
}

}  // namespace toporeg
