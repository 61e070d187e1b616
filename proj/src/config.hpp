#ifndef TOPOREG_CONFIG_HPP
#define TOPOREG_CONFIG_HPP

#include <cmath>
#include <cstdint>

#include "errors.hpp"
#include "kernels.hpp"

namespace toporeg {

// Bandwidth is either fixed or the power law h = n^(-1/e) with e in
// {3, 5, 7}.
struct bandwidth_rule {
  bool fixed = false;
  double h = 0.0;
  int exponent = 3;

  static bandwidth_rule fixed_h(double h) {
    if (!(h > 0.0)) fail(errc::non_positive_bandwidth, "bandwidth must be positive");
    return {true, h, 0};
  }
  static bandwidth_rule power_law(int exponent) {
    if (exponent != 3 && exponent != 5 && exponent != 7) {
      fail(errc::invalid_argument, "bandwidth exponent must be 3, 5, or 7");
    }
    return {false, 0.0, exponent};
  }
  double resolve(std::size_t n) const {
    if (fixed) return h;
    return std::pow(static_cast<double>(n), -1.0 / exponent);
  }
};

struct analysis_config {
  kernel_family family = kernel_family::truncated_gaussian;
  bandwidth_rule bandwidth = bandwidth_rule::power_law(3);
  double epsilon = 0.1;
  int grid_points = 512;
  double alpha = 0.05;
  double modality_delta = 0.1;
  std::uint64_t seed = 0;

  kernel_spec kernel_for(std::size_t n) const {
    return kernel_spec::make(family, bandwidth.resolve(n));
  }
  void validate() const {
    if (!(epsilon > 0.0)) fail(errc::non_positive_epsilon, "epsilon must be positive");
    if (grid_points < 2) fail(errc::invalid_argument, "grid needs at least 2 points");
    if (!(alpha > 0.0 && alpha < 1.0)) {
      fail(errc::invalid_argument, "alpha must lie in (0, 1)");
    }
    if (!(modality_delta > 0.0)) {
      fail(errc::invalid_argument, "modality delta must be positive");
    }
  }
};

}  // namespace toporeg

#endif
