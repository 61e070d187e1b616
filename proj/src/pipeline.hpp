#ifndef TOPOREG_PIPELINE_HPP
#define TOPOREG_PIPELINE_HPP

#include <optional>
#include <string>

#include "config.hpp"
#include "datagen.hpp"
#include "report.hpp"
#include "structures.hpp"

namespace toporeg {

// Estimated diagram of the derivative via the discrete robust filtration.
persistence_diagram estimate_diagram(const sample& s, const analysis_config& cfg);

// Full pipeline to a deterministic JSON report. For modality either a
// candidate critical point is given or candidates are the interior zero
// crossings of the derivative estimate (auto_detect).
std::string analyze_to_json(const sample& s, const analysis_config& cfg,
                            structure_kind kind,
                            std::optional<double> critical_point,
                            bool auto_detect);

struct consistency_summary {
  int reps = 0;
  double fraction_within = 0.0;  // share of reps with distance <= 5 epsilon
  double mean_distance = 0.0;
  double max_distance = 0.0;
  double threshold = 0.0;  // 5 epsilon
  std::string json;        // full report including per-rep distances
};

// Monte Carlo comparison of estimated and analytic derivative diagrams for a
// built-in scenario. Replications run in parallel with seeds derived from
// cfg.seed; TOPO_REGRESS_THREADS caps the worker count.
consistency_summary run_consistency(const scenario& base, int reps,
                                    const analysis_config& cfg);

int thread_budget();

}  // namespace toporeg

#endif
