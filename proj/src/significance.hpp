#ifndef TOPOREG_SIGNIFICANCE_HPP
#define TOPOREG_SIGNIFICANCE_HPP

#include <optional>
#include <span>
#include <vector>

#include "persistence.hpp"
#include "regress.hpp"

namespace toporeg {

struct slope_fit {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double std_err_beta1 = 0.0;
  double t_stat = 0.0;
  double p_value = 1.0;  // two-sided, Student t with n_used - 2 df
  int n_used = 0;
};

// Ordinary least squares of residuals on weights. Throws too_few_points for
// fewer than 3 observations and degenerate_regressor when the weights have
// zero variance.
slope_fit fit_slope(std::span<const double> residuals,
                    std::span<const double> weights);

enum class crit_kind { any, maximum, minimum };

// Grid locations where the derivative estimate attains `level` (within
// 1e-9) at a local extremum; boundary points count one-sidedly. Throws
// level_not_attained when nothing matches.
std::vector<double> locate_critical_points(const curve_estimate& est,
                                           double level,
                                           crit_kind kind = crit_kind::any);

struct feature_significance {
  pd_feature feature;
  double death_x = 0.0;
  double birth_x = 0.0;
  std::optional<slope_fit> death_fit;  // empty when the fit is degenerate
  std::optional<slope_fit> birth_fit;
  bool death_significant = false;  // negative slope and p <= alpha
  bool birth_significant = false;  // positive slope and p <= alpha
  bool significant = false;        // both endpoints pass
  double alpha = 0.05;
};

// Locates the critical points behind a feature's endpoints, regresses the
// residuals on the kernel weights there, and applies the endpoint and
// feature rules. Levels from the discrete filtration rarely coincide with
// grid values, so each endpoint snaps to the extremum value nearest its
// level before locating. `negated` assesses a feature of the negated
// derivative: extrema are searched on the negated estimate and the
// residuals change sign in the fits.
feature_significance assess_feature(const sample& s, const kernel_spec& k,
                                    const curve_estimate& est,
                                    const pd_feature& feature, double alpha,
                                    bool negated = false);

}  // namespace toporeg

#endif
