#ifndef TOPOREG_PERSISTENCE_HPP
#define TOPOREG_PERSISTENCE_HPP

#include <span>
#include <vector>

#include "regress.hpp"

namespace toporeg {

// Super-level convention: a feature is born at a high level and dies at a
// lower one, so death <= birth. Only degree 0 occurs on the line.
struct pd_feature {
  double death = 0.0;
  double birth = 0.0;
  int degree = 0;
  double persistence() const { return birth - death; }
};

struct persistence_diagram {
  std::vector<pd_feature> features;
  bool empty() const { return features.empty(); }
  std::size_t size() const { return features.size(); }
  // Descending persistence; ties broken by birth then death for stable
  // serialization.
  void sort_by_persistence();
  // Largest-persistence feature; throws empty_diagram when there is none.
  const pd_feature& dominant() const;
};

// 0-dimensional super-level barcode of the piecewise-linear interpolation of
// (grid, values). Components are born at local maxima and die where they
// merge into an older component (elder rule); the last survivor dies at the
// global minimum, giving finite bars.
persistence_diagram superlevel_barcode_0d(std::span<const double> grid,
                                          std::span<const double> values);

// x-locations of data points whose derivative estimate reaches level t.
std::vector<double> filtered_points(const data_derivatives& dd, double t);

// Level schedule for the discrete filtration: t_i = t_max - 2 i epsilon with
// t_max = 2 epsilon ceil(max value / 2 epsilon), descending until the first
// level at or below the minimum value (where the estimated set has absorbed
// every point).
struct filtration_plan {
  double epsilon = 0.0;
  long n_eps = 0;      // ceil(max / 2 epsilon)
  double t_max = 0.0;  // 2 epsilon n_eps
  std::vector<double> levels;
  double radius = 0.0;  // ball radius h
};

filtration_plan build_plan(std::span<const double> values, double epsilon,
                           double radius);

struct interval {
  double lo = 0.0, hi = 0.0;
  bool contains(const interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
};

// Union of closed radius-h intervals around the points passing each level,
// stored merged, disjoint and sorted. Sets grow as levels descend.
struct discrete_filtration {
  filtration_plan plan;
  std::vector<std::vector<interval>> sets_per_level;
};

// Merged union of [x - r, x + r] over the given centers.
std::vector<interval> union_of_balls(std::span<const double> centers, double r);

discrete_filtration build_discrete_filtration(const sample& s,
                                              const kernel_spec& k,
                                              double epsilon);

// Same construction from precomputed derivative values (used for negated or
// region-restricted sweeps).
discrete_filtration build_filtration_from_values(const data_derivatives& dd,
                                                 double epsilon, double radius);

// 0-dimensional persistence of the nested interval unions. Components are
// tracked by containment across levels; on a merge the younger dies (elder
// rule). Survivors die at the lowest level. Features that do not span a full
// level step (persistence < 2 epsilon) are dropped, realizing the
// image-of-inclusion estimator; survivors are exempt since their death is
// only the truncation of the level grid.
persistence_diagram estimated_persistence(const discrete_filtration& f);

// The constant governing the consistency bound:
// 2 eps^2 delta^2 p_min^2 / [tau (y_max + m_bound) + (m1_bound + eps)]^2.
double theorem_constant(double epsilon, double delta, double p_min, double tau,
                        double y_max, double m_bound, double m1_bound);

// Lower bound 1 - 3 n_eps n exp(-C_{eps/2} n h^2) on the probability that
// the estimated diagram is within 5 epsilon of the truth.
double consistency_probability_bound(double epsilon, double delta, double p_min,
                                     double tau, double y_max, double m_bound,
                                     double m1_bound, long n, double h,
                                     long n_eps);

}  // namespace toporeg

#endif
