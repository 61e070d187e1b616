#include "significance.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace toporeg {

slope_fit fit_slope(std::span<const double> residuals,
                    std::span<const double> weights) {
  if (residuals.size() != weights.size()) {
    fail(errc::length_mismatch, "residuals and weights lengths differ");
  }
  const std::size_t n = residuals.size();
  if (n < 3) {
    fail(errc::too_few_points,
         "slope fit needs at least 3 points, got " + std::to_string(n));
  }
  double w_mean = 0.0, r_mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    w_mean += weights[i];
    r_mean += residuals[i];
  }
  w_mean /= static_cast<double>(n);
  r_mean /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dw = weights[i] - w_mean;
    sxx += dw * dw;
    sxy += dw * (residuals[i] - r_mean);
  }
  if (sxx == 0.0) {
    fail(errc::degenerate_regressor, "weights have zero variance");
  }

  slope_fit fit;
  fit.n_used = static_cast<int>(n);
  fit.beta1 = sxy / sxx;
  fit.beta0 = r_mean - fit.beta1 * w_mean;

  double ssr = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = residuals[i] - fit.beta0 - fit.beta1 * weights[i];
    ssr += e * e;
  }
  const double df = static_cast<double>(n - 2);
  const double sigma2 = ssr / df;
  fit.std_err_beta1 = std::sqrt(sigma2 / sxx);

  if (fit.std_err_beta1 == 0.0) {
    // Perfect fit: the slope is exact.
    fit.t_stat = fit.beta1 == 0.0 ? 0.0
                                  : std::copysign(
                                        std::numeric_limits<double>::infinity(),
                                        fit.beta1);
    fit.p_value = fit.beta1 == 0.0 ? 1.0 : 0.0;
    return fit;
  }
  fit.t_stat = fit.beta1 / fit.std_err_beta1;
  const boost::math::students_t dist(df);
  fit.p_value = 2.0 * boost::math::cdf(boost::math::complement(
                          dist, std::fabs(fit.t_stat)));
  return fit;
}

namespace {

struct extremum {
  std::size_t index;
  double value;
  double curvature;  // |second difference|, one-sided at the boundary
};

// Local extrema of the derivative values on the largest contiguous defined
// segment; boundary points compare one-sidedly.
std::vector<extremum> find_extrema(const curve_estimate& est, crit_kind kind) {
  // Largest run of defined grid points.
  std::size_t best_lo = 0, best_len = 0, run_lo = 0, run_len = 0;
  for (std::size_t j = 0; j <= est.size(); ++j) {
    if (j < est.size() && est.defined[j]) {
      if (run_len == 0) run_lo = j;
      ++run_len;
      if (run_len > best_len) {
        best_len = run_len;
        best_lo = run_lo;
      }
    } else {
      run_len = 0;
    }
  }
  std::vector<extremum> out;
  if (best_len == 0) return out;
  const auto& v = est.deriv_values;
  const std::size_t lo = best_lo, hi = best_lo + best_len - 1;
  for (std::size_t j = lo; j <= hi; ++j) {
    const bool has_left = j > lo, has_right = j < hi;
    const bool max_ok = (!has_left || v[j] >= v[j - 1]) &&
                        (!has_right || v[j] >= v[j + 1]);
    const bool min_ok = (!has_left || v[j] <= v[j - 1]) &&
                        (!has_right || v[j] <= v[j + 1]);
    const bool wanted = kind == crit_kind::any ? (max_ok || min_ok)
                        : kind == crit_kind::maximum ? max_ok
                                                     : min_ok;
    if (!wanted) continue;
    double curv = 0.0;
    if (has_left && has_right) {
      curv = std::fabs(v[j - 1] - 2.0 * v[j] + v[j + 1]);
    } else if (has_left) {
      curv = std::fabs(v[j] - v[j - 1]);
    } else if (has_right) {
      curv = std::fabs(v[j + 1] - v[j]);
    }
    out.push_back({j, v[j], curv});
  }
  return out;
}

constexpr double kLevelTolerance = 1e-9;

std::vector<extremum> matches_at_level(const std::vector<extremum>& extrema,
                                       double level, double tolerance) {
  std::vector<extremum> hits;
  for (const auto& e : extrema) {
    if (std::fabs(e.value - level) <= tolerance) hits.push_back(e);
  }
  return hits;
}

// Snapping rule for levels produced by the discrete filtration: take the
// extremum value nearest the level, then every extremum within tolerance of
// that value.
std::vector<extremum> snap_to_level(const std::vector<extremum>& extrema,
                                    double level) {
  auto hits = matches_at_level(extrema, level, kLevelTolerance);
  if (!hits.empty() || extrema.empty()) return hits;
  double best = extrema.front().value;
  for (const auto& e : extrema) {
    if (std::fabs(e.value - level) < std::fabs(best - level)) best = e.value;
  }
  return matches_at_level(extrema, best, kLevelTolerance);
}

// Sharpest turning wins; ties go left.
const extremum& pick(const std::vector<extremum>& hits) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i].curvature > hits[best].curvature) best = i;
  }
  return hits[best];
}

}  // namespace

std::vector<double> locate_critical_points(const curve_estimate& est,
                                           double level, crit_kind kind) {
  if (est.size() < 2) {
    fail(errc::too_few_points, "estimate needs at least 2 grid points");
  }
  const auto hits = matches_at_level(find_extrema(est, kind), level,
                                     kLevelTolerance);
  if (hits.empty()) {
    fail(errc::level_not_attained,
         "no extremum of the derivative estimate attains level " +
             std::to_string(level));
  }
  std::vector<double> xs;
  xs.reserve(hits.size());
  for (const auto& e : hits) xs.push_back(est.grid[e.index]);
  std::sort(xs.begin(), xs.end());
  return xs;
}

feature_significance assess_feature(const sample& s, const kernel_spec& k,
                                    const curve_estimate& est,
                                    const pd_feature& feature, double alpha,
                                    bool negated) {
  feature_significance fs;
  fs.feature = feature;
  fs.alpha = alpha;

  // For negated features the caller passes the negated estimate, so the
  // extrema searched here already live in the feature's own frame.
  const auto extrema_min = find_extrema(est, crit_kind::minimum);
  const auto extrema_max = find_extrema(est, crit_kind::maximum);
  const auto death_hits = snap_to_level(extrema_min, feature.death);
  const auto birth_hits = snap_to_level(extrema_max, feature.birth);
  if (death_hits.empty() || birth_hits.empty()) {
    fail(errc::level_not_attained,
         "no critical point found for a feature endpoint");
  }
  fs.death_x = est.grid[pick(death_hits).index];
  fs.birth_x = est.grid[pick(birth_hits).index];

  const auto fit_at = [&](double x0) -> std::optional<slope_fit> {
    try {
      weight_residuals wr = weights_and_residuals(s, k, x0);
      if (negated) {
        for (double& r : wr.residuals) r = -r;
      }
      return fit_slope(wr.residuals, wr.weights);
    } catch (const error& e) {
      if (e.code() == errc::degenerate_regressor ||
          e.code() == errc::undefined_at_point) {
        return std::nullopt;  // treated as not significant
      }
      throw;
    }
  };
  fs.death_fit = fit_at(fs.death_x);
  fs.birth_fit = fit_at(fs.birth_x);

  // A death endpoint sits at a minimum of the curve under analysis, where a
  // real signal shows up as a negative residual-on-weight slope; at a birth
  // endpoint (a maximum) the same mechanism flips the sign. Gating each
  // endpoint by its own sign keeps the assessment exact under negating the
  // data.
  fs.death_significant = fs.death_fit && fs.death_fit->beta1 < 0.0 &&
                         fs.death_fit->p_value <= alpha;
  fs.birth_significant = fs.birth_fit && fs.birth_fit->beta1 > 0.0 &&
                         fs.birth_fit->p_value <= alpha;
  fs.significant = fs.death_significant && fs.birth_significant;
  return fs;
}

}  // namespace toporeg
