#ifndef TOPOREG_DATAGEN_HPP
#define TOPOREG_DATAGEN_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "persistence.hpp"
#include "regress.hpp"

namespace toporeg {

enum class scenario_kind {
  exp_monotone,      // m(x) = exp(x)
  ratio_nonconvex,   // m(x) = x^2 / (1 + x^2 + x|x|)
  bimodal_mixture,   // two-bump mixture-density shape, rescaled to max 1
  custom,            // user-supplied data, no analytic truth
};

struct scenario {
  scenario_kind kind = scenario_kind::exp_monotone;
  int n = 50;
  // Standard deviation of the parent normal before truncation to [-1, 1];
  // the reference noise level is variance 0.1.
  double noise_sd = 0.31622776601683794;  // sqrt(0.1)
  double lo = -1.0, hi = 1.0;
  std::uint64_t seed = 0;
};

scenario_kind scenario_from_name(const std::string& name);
const char* scenario_name(scenario_kind kind);

// Deterministic in the seed. x ~ Uniform(lo, hi); y = m(x) + u with u a
// normal(0, noise_sd^2) truncated to [-1, 1] by rejection.
sample generate(const scenario& sc);

// Analytic regression curve and its derivative on the grid.
void true_curves(const scenario& sc, std::span<const double> grid,
                 std::vector<double>& m_values, std::vector<double>& m1_values);

// Super-level barcode of the analytic derivative on a dense grid over the
// scenario domain; the ground truth for consistency experiments.
persistence_diagram true_derivative_diagram(const scenario& sc,
                                            int grid_points = 2048);

// Known bounds for the consistency constant: sup |m|, sup |m1|, and the
// infimum of the uniform design density.
struct scenario_bounds {
  double m_bound = 0.0;
  double m1_bound = 0.0;
  double p_min = 0.0;
};
scenario_bounds bounds_of(const scenario& sc);

// splitmix64 step, used to derive per-replication seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Seeded generator with portable uniform and normal transforms (the
// standard library distributions are implementation-defined).
class rng {
 public:
  explicit rng(std::uint64_t seed) : eng_(seed) {}
  double uniform01();                   // [0, 1)
  double uniform(double lo, double hi);
  double normal();                      // standard normal, Box-Muller
  double truncated_normal(double sd, double bound);

 private:
  std::mt19937_64 eng_;
};

}  // namespace toporeg

#endif
