#include "structures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace toporeg {

const char* conclusion_name(conclusion c) {
  switch (c) {
    case conclusion::non_decreasing: return "non-decreasing";
    case conclusion::non_increasing: return "non-increasing";
    case conclusion::not_monotone: return "not-monotone";
    case conclusion::convex: return "convex";
    case conclusion::concave: return "concave";
    case conclusion::not_convex: return "not-convex";
    case conclusion::is_mode: return "is-mode";
    case conclusion::not_mode: return "not-mode";
    case conclusion::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* structure_kind_name(structure_kind k) {
  switch (k) {
    case structure_kind::monotonicity: return "monotonicity";
    case structure_kind::convexity: return "convexity";
    case structure_kind::modality: return "modality";
  }
  return "monotonicity";
}

std::vector<double> zero_crossings(const curve_estimate& est) {
  std::vector<double> out;
  const auto& v = est.deriv_values;
  for (std::size_t j = 0; j + 1 < est.size(); ++j) {
    if (!est.defined[j] || !est.defined[j + 1]) continue;
    if (v[j] == 0.0) {
      out.push_back(est.grid[j]);
    } else if (v[j] * v[j + 1] < 0.0) {
      const double t = v[j] / (v[j] - v[j + 1]);
      out.push_back(est.grid[j] + t * (est.grid[j + 1] - est.grid[j]));
    }
  }
  if (!est.grid.empty() && est.defined.back() && v.back() == 0.0) {
    out.push_back(est.grid.back());
  }
  return out;
}

namespace {

data_derivatives restrict_derivatives(const data_derivatives& dd, double lo,
                                      double hi, bool negated) {
  data_derivatives out;
  for (std::size_t i = 0; i < dd.xs.size(); ++i) {
    if (dd.xs[i] < lo || dd.xs[i] > hi) continue;
    out.xs.push_back(dd.xs[i]);
    out.values.push_back(negated ? -dd.values[i] : dd.values[i]);
  }
  return out;
}

struct region_data {
  curve_estimate est;  // restricted to the region, possibly negated
  persistence_diagram dgm;
  std::vector<feature_significance> evidence;
};

region_data analyze_region(const sample& s, const kernel_spec& k,
                           const analysis_config& cfg, double lo, double hi,
                           bool negated) {
  region_data rd;
  const auto grid = uniform_grid(s.x_min(), s.x_max(), cfg.grid_points);
  rd.est = evaluate_on_grid(s, k, grid).restrict_to(lo, hi);
  if (negated) rd.est = rd.est.negated();

  const data_derivatives dd =
      restrict_derivatives(derivative_at_data(s, k), lo, hi, negated);
  if (dd.xs.empty()) {
    fail(errc::all_points_undefined,
         "no data points in region [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "]");
  }
  rd.dgm = estimated_persistence(
      build_filtration_from_values(dd, cfg.epsilon, k.bandwidth));
  rd.evidence.reserve(rd.dgm.size());
  for (const auto& f : rd.dgm.features) {
    rd.evidence.push_back(assess_feature(s, k, rd.est, f, cfg.alpha, negated));
  }
  return rd;
}

std::size_t dominant_index(const persistence_diagram& dgm) {
  // Diagrams from estimated_persistence are already persistence-sorted.
  dgm.dominant();  // validates non-emptiness
  return 0;
}

conclusion monotone_direction(const pd_feature& bar,
                              const feature_significance& sig) {
  if (bar.death >= 0.0) {
    return sig.death_significant ? conclusion::non_decreasing
                                 : conclusion::inconclusive;
  }
  if (bar.birth <= 0.0) {
    return sig.birth_significant ? conclusion::non_increasing
                                 : conclusion::inconclusive;
  }
  return sig.death_significant && sig.birth_significant
             ? conclusion::not_monotone
             : conclusion::inconclusive;
}

}  // namespace

structure_verdict monotonicity_on(const sample& s, const kernel_spec& k,
                                  const analysis_config& cfg, double lo,
                                  double hi) {
  cfg.validate();
  region_data rd = analyze_region(s, k, cfg, lo, hi, false);
  structure_verdict v;
  v.kind = structure_kind::monotonicity;
  v.region_lo = lo;
  v.region_hi = hi;
  const std::size_t dom = dominant_index(rd.dgm);
  v.result = monotone_direction(rd.dgm.features[dom], rd.evidence[dom]);
  v.diagram = std::move(rd.dgm);
  v.evidence = std::move(rd.evidence);
  return v;
}

structure_verdict monotonicity(const sample& s, const kernel_spec& k,
                               const analysis_config& cfg) {
  return monotonicity_on(s, k, cfg, s.x_min(), s.x_max());
}

structure_verdict convexity(const sample& s, const kernel_spec& k,
                            const analysis_config& cfg) {
  cfg.validate();
  const double lo = s.x_min(), hi = s.x_max();
  structure_verdict v;
  v.kind = structure_kind::convexity;
  v.region_lo = lo;
  v.region_hi = hi;

  region_data pos = analyze_region(s, k, cfg, lo, hi, false);
  region_data neg = analyze_region(s, k, cfg, lo, hi, true);
  const auto count_significant = [](const std::vector<feature_significance>& ev) {
    return std::count_if(ev.begin(), ev.end(),
                         [](const feature_significance& f) { return f.significant; });
  };
  const long sig_pos = count_significant(pos.evidence);
  const long sig_neg = count_significant(neg.evidence);
  const std::size_t dom_pos = dominant_index(pos.dgm);
  const std::size_t dom_neg = dominant_index(neg.dgm);
  const bool dominant_significant =
      pos.evidence[dom_pos].significant && neg.evidence[dom_neg].significant;

  v.note = "features " + std::to_string(pos.dgm.size()) + "/" +
           std::to_string(neg.dgm.size()) + ", significant " +
           std::to_string(sig_pos) + "/" + std::to_string(sig_neg) +
           " (derivative/negated)";
  v.diagram = std::move(pos.dgm);
  v.negated_diagram = std::move(neg.dgm);
  v.evidence = std::move(pos.evidence);
  v.negated_evidence = std::move(neg.evidence);

  if (sig_pos > 1 || sig_neg > 1) {
    // A significantly non-monotone derivative rules convexity out.
    v.result = conclusion::not_convex;
    return v;
  }
  if (!dominant_significant) {
    v.result = conclusion::inconclusive;
    return v;
  }

  const auto grid = uniform_grid(lo, hi, cfg.grid_points);
  v.critical_points = zero_crossings(evaluate_on_grid(s, k, grid));
  if (v.critical_points.empty()) {
    fail(errc::no_zero_crossing,
         "derivative estimate never changes sign; no critical point to split at");
  }
  const double c = v.critical_points.front();
  structure_verdict left = monotonicity_on(s, k, cfg, lo, c);
  structure_verdict right = monotonicity_on(s, k, cfg, c, hi);
  if (left.result == conclusion::non_increasing &&
      right.result == conclusion::non_decreasing) {
    v.result = conclusion::convex;
  } else if (left.result == conclusion::non_decreasing &&
             right.result == conclusion::non_increasing) {
    v.result = conclusion::concave;
  } else if (left.result == conclusion::inconclusive ||
             right.result == conclusion::inconclusive) {
    v.result = conclusion::inconclusive;
  } else {
    v.result = conclusion::not_convex;
  }
  v.parts.push_back(std::move(left));
  v.parts.push_back(std::move(right));
  return v;
}

structure_verdict modality(const sample& s, const kernel_spec& k, double c,
                           double delta_nb, const analysis_config& cfg) {
  cfg.validate();
  if (!(delta_nb > 0.0)) {
    fail(errc::invalid_argument, "modality neighborhood must be positive");
  }
  if (c < s.x_min() || c > s.x_max() || c - delta_nb < s.x_min() ||
      c + delta_nb > s.x_max()) {
    fail(errc::region_outside_data,
         "neighborhood [" + std::to_string(c - delta_nb) + ", " +
             std::to_string(c + delta_nb) + "] exceeds the data range");
  }

  structure_verdict v;
  v.kind = structure_kind::modality;
  v.region_lo = c - delta_nb;
  v.region_hi = c + delta_nb;
  v.critical_points.push_back(c);

  const auto side_verdict = [&](double lo, double hi) -> structure_verdict {
    try {
      return monotonicity_on(s, k, cfg, lo, hi);
    } catch (const error& e) {
      if (e.code() != errc::all_points_undefined &&
          e.code() != errc::empty_diagram &&
          e.code() != errc::too_few_points) {
        throw;
      }
      structure_verdict sparse;
      sparse.kind = structure_kind::monotonicity;
      sparse.region_lo = lo;
      sparse.region_hi = hi;
      sparse.result = conclusion::inconclusive;
      sparse.note = e.what();
      return sparse;
    }
  };
  structure_verdict left = side_verdict(c - delta_nb, c);
  structure_verdict right = side_verdict(c, c + delta_nb);

  const auto side_state = [](const structure_verdict& side, bool into) {
    // into: the curve should rise into c (death >= 0); otherwise it should
    // fall away from c (birth <= 0).
    struct state {
      bool directional = false;
      bool significant = false;
    } st;
    if (side.diagram.empty()) return st;
    const pd_feature& bar = side.diagram.features.front();
    const feature_significance& sig = side.evidence.front();
    if (into) {
      st.directional = bar.death >= 0.0;
      st.significant = sig.death_significant;
    } else {
      st.directional = bar.birth <= 0.0;
      st.significant = sig.birth_significant;
    }
    return st;
  };
  const auto ls = side_state(left, true);
  const auto rs = side_state(right, false);

  if (left.diagram.empty() || right.diagram.empty()) {
    v.result = conclusion::inconclusive;
  } else if (!ls.directional || !rs.directional) {
    v.result = conclusion::not_mode;
  } else if (!ls.significant || !rs.significant) {
    v.result = conclusion::inconclusive;
  } else {
    v.result = conclusion::is_mode;
  }
  v.parts.push_back(std::move(left));
  v.parts.push_back(std::move(right));
  return v;
}

}  // namespace toporeg
