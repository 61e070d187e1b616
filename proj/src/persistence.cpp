#include "persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace toporeg {

void persistence_diagram::sort_by_persistence() {
  std::sort(features.begin(), features.end(),
            [](const pd_feature& a, const pd_feature& b) {
              if (a.persistence() != b.persistence()) {
                return a.persistence() > b.persistence();
              }
              if (a.birth != b.birth) return a.birth > b.birth;
              if (a.death != b.death) return a.death < b.death;
              return a.degree < b.degree;
            });
}

const pd_feature& persistence_diagram::dominant() const {
  if (features.empty()) fail(errc::empty_diagram, "diagram has no features");
  return *std::max_element(features.begin(), features.end(),
                           [](const pd_feature& a, const pd_feature& b) {
                             if (a.persistence() != b.persistence()) {
                               return a.persistence() < b.persistence();
                             }
                             if (a.birth != b.birth) return a.birth < b.birth;
                             return a.death > b.death;
                           });
}

persistence_diagram superlevel_barcode_0d(std::span<const double> grid,
                                          std::span<const double> values) {
  if (grid.size() != values.size()) {
    fail(errc::length_mismatch, "grid and value lengths differ");
  }
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) {
      fail(errc::non_monotone_grid, "grid must be strictly increasing");
    }
  }
  persistence_diagram dgm;
  const std::size_t n = grid.size();
  if (n == 0) return dgm;
  for (double v : values) {
    if (!std::isfinite(v)) fail(errc::invalid_argument, "values must be finite");
  }

  // Activate vertices in decreasing value order (ties by ascending index)
  // and merge adjacent active runs with union-find.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  // birth[root]: level at which the component appeared; birth_idx breaks
  // equal-birth ties (earlier index is elder). A vertex joining an existing
  // component is not a birth; only vertices with no active neighbor found a
  // component, and only merges of two existing components emit a feature.
  std::vector<double> birth(n, 0.0);
  std::vector<std::size_t> birth_idx(n, 0);
  std::vector<char> active(n, 0);

  for (std::size_t idx : order) {
    const double level = values[idx];
    active[idx] = 1;
    std::size_t roots[2];
    int nroots = 0;
    if (idx > 0 && active[idx - 1]) roots[nroots++] = find(idx - 1);
    if (idx + 1 < n && active[idx + 1]) roots[nroots++] = find(idx + 1);
    if (nroots == 0) {
      birth[idx] = level;
      birth_idx[idx] = idx;
      continue;
    }
    std::size_t elder = roots[0];
    if (nroots == 2 && roots[0] != roots[1]) {
      const bool first_elder =
          birth[roots[0]] != birth[roots[1]]
              ? birth[roots[0]] > birth[roots[1]]
              : birth_idx[roots[0]] < birth_idx[roots[1]];
      elder = first_elder ? roots[0] : roots[1];
      const std::size_t younger = first_elder ? roots[1] : roots[0];
      // A component born at this very level was never separate at any
      // threshold (same-valued vertices activate one at a time); absorbing
      // it is not a death.
      if (birth[younger] != level) {
        dgm.features.push_back({level, birth[younger], 0});
      }
      parent[younger] = elder;
    }
    parent[idx] = elder;
  }

  // The surviving component spans everything; it dies at the global minimum.
  const double global_min = *std::min_element(values.begin(), values.end());
  dgm.features.push_back({global_min, birth[find(order.front())], 0});
  dgm.sort_by_persistence();
  return dgm;
}

std::vector<double> filtered_points(const data_derivatives& dd, double t) {
  std::vector<double> xs;
  for (std::size_t i = 0; i < dd.xs.size(); ++i) {
    if (dd.values[i] >= t) xs.push_back(dd.xs[i]);
  }
  return xs;
}

filtration_plan build_plan(std::span<const double> values, double epsilon,
                           double radius) {
  if (!(epsilon > 0.0)) {
    fail(errc::non_positive_epsilon, "epsilon must be positive");
  }
  if (values.empty()) {
    fail(errc::invalid_argument, "cannot plan levels for empty values");
  }
  const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
  const double vmax = *max_it;
  const double vmin = *min_it;

  filtration_plan plan;
  plan.epsilon = epsilon;
  plan.radius = radius;
  plan.n_eps = static_cast<long>(std::ceil(vmax / (2.0 * epsilon)));
  plan.t_max = 2.0 * epsilon * static_cast<double>(plan.n_eps);
  for (long i = 0;; ++i) {
    const double t = plan.t_max - 2.0 * epsilon * static_cast<double>(i);
    plan.levels.push_back(t);
    if (t <= vmin) break;
    if (plan.levels.size() > 4'000'000) {
      fail(errc::invalid_argument,
           "epsilon " + std::to_string(epsilon) +
               " is too small for the derivative range [" +
               std::to_string(vmin) + ", " + std::to_string(vmax) + "]");
    }
  }
  return plan;
}

std::vector<interval> union_of_balls(std::span<const double> centers, double r) {
  std::vector<double> xs(centers.begin(), centers.end());
  std::sort(xs.begin(), xs.end());
  std::vector<interval> merged;
  for (double x : xs) {
    if (!merged.empty() && x - r <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, x + r);
    } else {
      merged.push_back({x - r, x + r});
    }
  }
  return merged;
}

discrete_filtration build_filtration_from_values(const data_derivatives& dd,
                                                 double epsilon, double radius) {
  if (dd.xs.empty()) {
    fail(errc::all_points_undefined, "no defined derivative values to filter");
  }
  discrete_filtration f;
  f.plan = build_plan(dd.values, epsilon, radius);
  f.sets_per_level.reserve(f.plan.levels.size());
  for (double t : f.plan.levels) {
    f.sets_per_level.push_back(union_of_balls(filtered_points(dd, t), radius));
  }
  return f;
}

discrete_filtration build_discrete_filtration(const sample& s,
                                              const kernel_spec& k,
                                              double epsilon) {
  return build_filtration_from_values(derivative_at_data(s, k), epsilon,
                                      k.bandwidth);
}

namespace {

constexpr std::size_t kNoInterval = static_cast<std::size_t>(-1);

// Index of the interval of `next` containing `iv`, or kNoInterval.
std::size_t containing_index(const std::vector<interval>& next,
                             const interval& iv) {
  auto it = std::upper_bound(
      next.begin(), next.end(), iv.lo,
      [](double value, const interval& b) { return value < b.lo; });
  if (it == next.begin()) return kNoInterval;
  --it;
  return it->contains(iv) ? static_cast<std::size_t>(it - next.begin())
                          : kNoInterval;
}

}  // namespace

persistence_diagram estimated_persistence(const discrete_filtration& f) {
  const auto& levels = f.plan.levels;
  if (levels.size() != f.sets_per_level.size()) {
    fail(errc::length_mismatch, "levels and sets are out of step");
  }
  persistence_diagram dgm;
  if (levels.empty()) return dgm;

  // One live component per merged interval; births[j] is the level at which
  // the ancestor of interval j first appeared.
  std::vector<double> births;
  for (std::size_t li = 0; li < levels.size(); ++li) {
    const auto& sets = f.sets_per_level[li];
    const double level = levels[li];
    if (li == 0) {
      births.assign(sets.size(), level);
      continue;
    }
    const auto& prev = f.sets_per_level[li - 1];
    std::vector<double> next_births(sets.size(),
                                    std::numeric_limits<double>::quiet_NaN());
    for (std::size_t j = 0; j < prev.size(); ++j) {
      const std::size_t target = containing_index(sets, prev[j]);
      if (target == kNoInterval) {
        fail(errc::not_nested, "filtration is not nested at level index " +
                                   std::to_string(li));
      }
      if (std::isnan(next_births[target])) {
        next_births[target] = births[j];
      } else if (births[j] > next_births[target]) {
        // Incoming component is elder; the current holder dies here.
        dgm.features.push_back({level, next_births[target], 0});
        next_births[target] = births[j];
      } else {
        dgm.features.push_back({level, births[j], 0});
      }
    }
    for (double& b : next_births) {
      if (std::isnan(b)) b = level;  // newly born component
    }
    births = std::move(next_births);
  }

  // Survivors die when the level grid stops.
  const double floor_level = levels.back();
  std::vector<char> essential(dgm.features.size(), 0);
  for (double b : births) {
    dgm.features.push_back({floor_level, b, 0});
    essential.push_back(1);
  }

  // Image-of-inclusion filter: a merged-away component counts only if it was
  // distinct for at least one full level step.
  persistence_diagram out;
  const double min_persistence = 2.0 * f.plan.epsilon - 1e-12;
  for (std::size_t i = 0; i < dgm.features.size(); ++i) {
    if (essential[i] || dgm.features[i].persistence() >= min_persistence) {
      out.features.push_back(dgm.features[i]);
    }
  }
  out.sort_by_persistence();
  return out;
}

double theorem_constant(double epsilon, double delta, double p_min, double tau,
                        double y_max, double m_bound, double m1_bound) {
  const double denom_root = tau * (y_max + m_bound) + (m1_bound + epsilon);
  if (denom_root == 0.0) {
    fail(errc::zero_denominator, "constant denominator vanishes");
  }
  const double num = 2.0 * epsilon * epsilon * delta * delta * p_min * p_min;
  return num / (denom_root * denom_root);
}

double consistency_probability_bound(double epsilon, double delta, double p_min,
                                     double tau, double y_max, double m_bound,
                                     double m1_bound, long n, double h,
                                     long n_eps) {
  const double c_half = theorem_constant(epsilon / 2.0, delta, p_min, tau,
                                         y_max, m_bound, m1_bound);
  return 1.0 - 3.0 * static_cast<double>(n_eps) * static_cast<double>(n) *
                   std::exp(-c_half * static_cast<double>(n) * h * h);
}

}  // namespace toporeg
