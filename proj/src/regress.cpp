#include "regress.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "errors.hpp"

namespace toporeg {

namespace {
// Denominators below this are treated as an empty window.
constexpr double kDenominatorFloor = 1e-300;
}  // namespace

sample::sample(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size()) {
    fail(errc::length_mismatch, "sample x and y lengths differ");
  }
  if (x_.size() < 2) {
    fail(errc::invalid_argument, "sample needs at least 2 points, got " +
                                     std::to_string(x_.size()));
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
      fail(errc::invalid_argument,
           "sample contains a non-finite value at row " + std::to_string(i + 1));
    }
  }
  order_.resize(x_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(),
            [&](std::size_t a, std::size_t b) { return x_[a] < x_[b]; });
  sorted_x_.reserve(x_.size());
  for (std::size_t i : order_) sorted_x_.push_back(x_[i]);
}

double sample::x_min() const { return sorted_x_.front(); }
double sample::x_max() const { return sorted_x_.back(); }

double sample::y_abs_max() const {
  double m = 0.0;
  for (double v : y_) m = std::max(m, std::fabs(v));
  return m;
}

std::span<const std::size_t> sample::window(double lo, double hi) const {
  auto first = std::lower_bound(sorted_x_.begin(), sorted_x_.end(), lo);
  auto last = std::upper_bound(first, sorted_x_.end(), hi);
  const auto begin = order_.data() + (first - sorted_x_.begin());
  return {begin, static_cast<std::size_t>(last - first)};
}

namespace {

struct kernel_sums {
  double sk = 0.0;    // sum K_h(x - X_i)
  double sk1 = 0.0;   // sum K_1h(x - X_i)
  double sky = 0.0;   // sum K_h(x - X_i) Y_i
  double sk1y = 0.0;  // sum K_1h(x - X_i) Y_i
};

kernel_sums accumulate(const sample& s, const kernel_spec& k, double x) {
  kernel_sums sums;
  for (std::size_t i : s.window(x - k.bandwidth, x + k.bandwidth)) {
    const auto [kv, k1v] = scaled_eval(k, x, s.x()[i]);
    sums.sk += kv;
    sums.sk1 += k1v;
    sums.sky += kv * s.y()[i];
    sums.sk1y += k1v * s.y()[i];
  }
  return sums;
}

}  // namespace

std::optional<double> nw_estimate(const sample& s, const kernel_spec& k, double x) {
  const kernel_sums sums = accumulate(s, k, x);
  if (sums.sk < kDenominatorFloor) return std::nullopt;
  return sums.sky / sums.sk;
}

std::optional<double> nw_derivative(const sample& s, const kernel_spec& k,
                                    double x) {
  const kernel_sums sums = accumulate(s, k, x);
  if (sums.sk < kDenominatorFloor) return std::nullopt;
  return sums.sk1y / sums.sk - sums.sky * sums.sk1 / (sums.sk * sums.sk);
}

weight_residuals weights_and_residuals(const sample& s, const kernel_spec& k,
                                       double x0) {
  const kernel_sums sums = accumulate(s, k, x0);
  if (sums.sk < kDenominatorFloor) {
    fail(errc::undefined_at_point,
         "kernel window at x0 = " + std::to_string(x0) + " is empty");
  }
  const double m_hat = sums.sky / sums.sk;
  weight_residuals wr;
  wr.weights.resize(s.size(), 0.0);
  wr.residuals.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    wr.residuals[i] = s.y()[i] - m_hat;
  }
  for (std::size_t i : s.window(x0 - k.bandwidth, x0 + k.bandwidth)) {
    wr.weights[i] = scaled_eval(k, x0, s.x()[i]).k1 / sums.sk;
  }
  return wr;
}

curve_estimate evaluate_on_grid(const sample& s, const kernel_spec& k,
                                std::vector<double> grid) {
  if (grid.empty()) fail(errc::empty_grid, "evaluation grid is empty");
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (!(grid[j] > grid[j - 1])) {
      fail(errc::non_monotone_grid, "grid must be strictly increasing");
    }
  }
  curve_estimate est;
  est.kernel = k;
  est.values.resize(grid.size(), 0.0);
  est.deriv_values.resize(grid.size(), 0.0);
  est.defined.resize(grid.size(), 0);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const kernel_sums sums = accumulate(s, k, grid[j]);
    if (sums.sk < kDenominatorFloor) continue;
    est.values[j] = sums.sky / sums.sk;
    est.deriv_values[j] =
        sums.sk1y / sums.sk - sums.sky * sums.sk1 / (sums.sk * sums.sk);
    est.defined[j] = 1;
  }
  est.grid = std::move(grid);
  return est;
}

curve_estimate curve_estimate::restrict_to(double lo, double hi) const {
  curve_estimate out;
  out.kernel = kernel;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (grid[j] < lo || grid[j] > hi) continue;
    out.grid.push_back(grid[j]);
    out.values.push_back(values[j]);
    out.deriv_values.push_back(deriv_values[j]);
    out.defined.push_back(defined[j]);
  }
  return out;
}

curve_estimate curve_estimate::negated() const {
  curve_estimate out = *this;
  for (double& v : out.deriv_values) v = -v;
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, int count) {
  if (count < 2) fail(errc::invalid_argument, "grid needs at least 2 points");
  if (!(hi > lo)) fail(errc::invalid_argument, "grid bounds must satisfy lo < hi");
  std::vector<double> grid(count);
  for (int j = 0; j < count; ++j) {
    grid[j] = lo + (hi - lo) * j / (count - 1);
  }
  return grid;
}

data_derivatives derivative_at_data(const sample& s, const kernel_spec& k) {
  // Round-off in the two-term quotient leaves dust of order
  // eps_mach * |y| / h where the exact value is zero (constant data); level
  // planning would otherwise quantize that dust up to a whole level.
  const double snap = 1e-10 * s.y_abs_max() / k.bandwidth;
  data_derivatives dd;
  dd.xs.reserve(s.size());
  dd.values.reserve(s.size());
  for (std::size_t i : s.window(s.x_min(), s.x_max())) {
    const auto v = nw_derivative(s, k, s.x()[i]);
    if (!v) continue;  // cannot happen for h > 0: the point weights itself
    dd.xs.push_back(s.x()[i]);
    dd.values.push_back(std::fabs(*v) <= snap ? 0.0 : *v);
  }
  if (dd.xs.empty()) {
    fail(errc::all_points_undefined,
         "derivative estimate undefined at every sample point");
  }
  return dd;
}

}  // namespace toporeg
