#ifndef TOPOREG_METRIC_HPP
#define TOPOREG_METRIC_HPP

#include <span>
#include <vector>

#include "persistence.hpp"

namespace toporeg {

// Matching instance between two diagrams with the diagonal available as a
// sink: every point of one side gets a dedicated diagonal proxy on the
// other, proxy-to-proxy edges are free, and the optimum is always one of
// the candidate distances.
struct matching_problem {
  std::vector<pd_feature> points_a, points_b;
  std::vector<double> candidate_distances;  // sorted, deduplicated

  static matching_problem build(const persistence_diagram& a,
                                const persistence_diagram& b);
  // True when a perfect matching exists using only edges of cost <= r.
  bool feasible(double r) const;
};

// sup-norm distance in the (death, birth) plane.
double linf_distance(const pd_feature& a, const pd_feature& b);
// Distance to the diagonal: half the persistence.
double diagonal_distance(const pd_feature& p);

// Exact bottleneck distance via binary search over the candidate set.
// Throws degree_mismatch when the diagrams carry different degrees.
double bottleneck_distance(const persistence_diagram& a,
                           const persistence_diagram& b);

struct stability_result {
  double lhs = 0.0;  // bottleneck distance of the two super-level diagrams
  double rhs = 0.0;  // sup-norm distance of the functions on the grid
  bool holds = false;
};

// Checks the stability bound lhs <= rhs (+1e-9 slack) for two piecewise
// linear functions sampled on a common grid.
stability_result stability_check(std::span<const double> f_values,
                                 std::span<const double> g_values,
                                 std::span<const double> grid);

}  // namespace toporeg

#endif
