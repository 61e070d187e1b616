#ifndef TOPOREG_REGRESS_HPP
#define TOPOREG_REGRESS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kernels.hpp"

namespace toporeg {

// Observed (x, y) pairs. Inputs need not be sorted or distinct; a sorted
// index over x is kept for kernel-window queries.
class sample {
 public:
  sample(std::vector<double> x, std::vector<double> y);

  std::size_t size() const { return x_.size(); }
  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }
  double x_min() const;
  double x_max() const;
  double y_abs_max() const;

  // Indices i with x[i] in [lo, hi], in ascending x order.
  std::span<const std::size_t> window(double lo, double hi) const;

 private:
  std::vector<double> x_, y_;
  std::vector<std::size_t> order_;   // indices sorted by x
  std::vector<double> sorted_x_;
};

struct curve_estimate {
  std::vector<double> grid;          // strictly increasing
  std::vector<double> values;        // NW estimate, meaningful where defined
  std::vector<double> deriv_values;  // its first derivative
  std::vector<char> defined;         // false where the kernel window is empty
  kernel_spec kernel;

  std::size_t size() const { return grid.size(); }
  // Copy of the estimate restricted to grid points in [lo, hi].
  curve_estimate restrict_to(double lo, double hi) const;
  // Same grid, derivative negated.
  curve_estimate negated() const;
};

// Kernel-weighted local average of y around x; empty when no sample point
// lies within one bandwidth of x.
std::optional<double> nw_estimate(const sample& s, const kernel_spec& k, double x);

// First derivative of the estimator above (two-term quotient-rule form).
std::optional<double> nw_derivative(const sample& s, const kernel_spec& k, double x);

struct weight_residuals {
  std::vector<double> weights;    // one per sample point, zero outside window
  std::vector<double> residuals;  // y_i minus the estimate at x0
};

// Decomposition of the derivative estimate at x0 as a weighted residual sum:
// sum_i weights[i] * residuals[i] equals nw_derivative(s, k, x0).
// Throws undefined_at_point if the kernel window at x0 is empty.
weight_residuals weights_and_residuals(const sample& s, const kernel_spec& k,
                                       double x0);

curve_estimate evaluate_on_grid(const sample& s, const kernel_spec& k,
                                std::vector<double> grid);

// count equispaced points spanning [lo, hi], endpoints included.
std::vector<double> uniform_grid(double lo, double hi, int count);

// Derivative estimates at the sample's own points (always defined there,
// since each point lies in its own window): (x_i, deriv_i) pairs sorted by x.
struct data_derivatives {
  std::vector<double> xs;
  std::vector<double> values;
};
data_derivatives derivative_at_data(const sample& s, const kernel_spec& k);

}  // namespace toporeg

#endif
