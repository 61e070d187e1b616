#include "kernels.hpp"

#include <cmath>

#include "errors.hpp"

namespace toporeg {

namespace {

double gaussian_shape(double u) { return std::exp(-0.5 * u * u); }
double gaussian_shape_deriv(double u) { return -u * std::exp(-0.5 * u * u); }

double cauchy_shape(double u) { return 1.0 / (1.0 + u * u); }
double cauchy_shape_deriv(double u) {
  const double d = 1.0 + u * u;
  return -2.0 * u / (d * d);
}

}  // namespace

kernel_spec kernel_spec::make(kernel_family family, double bandwidth) {
  if (!(bandwidth > 0.0)) {
    fail(errc::non_positive_bandwidth,
         "kernel bandwidth must be positive, got " + std::to_string(bandwidth));
  }
  kernel_spec spec;
  spec.family = family;
  spec.bandwidth = bandwidth;
  switch (family) {
    case kernel_family::truncated_gaussian:
      // inf K = K(1); |K'| = u exp(-u^2/2) is increasing on [0, 1], so the
      // sup is attained at u = 1 as well.
      spec.delta = std::exp(-0.5);
      spec.tau = std::exp(-0.5);
      break;
    case kernel_family::truncated_cauchy:
      // inf K = K(1) = 1/2; |K'| = 2u/(1+u^2)^2 peaks at u = 1/sqrt(3) with
      // value 3*sqrt(3)/8.
      spec.delta = 0.5;
      spec.tau = 3.0 * std::sqrt(3.0) / 8.0;
      break;
  }
  return spec;
}

kernel_spec kernel_spec::make(const std::string& family_name, double bandwidth) {
  if (family_name == "gaussian" || family_name == "truncated-gaussian") {
    return make(kernel_family::truncated_gaussian, bandwidth);
  }
  if (family_name == "cauchy" || family_name == "truncated-cauchy") {
    return make(kernel_family::truncated_cauchy, bandwidth);
  }
  fail(errc::invalid_argument,
       "unknown kernel family '" + family_name + "' (expected gaussian or cauchy)");
}

const char* kernel_family_name(kernel_family f) {
  return f == kernel_family::truncated_gaussian ? "gaussian" : "cauchy";
}

double kernel_eval(const kernel_spec& spec, double u) {
  if (std::fabs(u) > 1.0) return 0.0;
  switch (spec.family) {
    case kernel_family::truncated_gaussian:
      return gaussian_shape(u);
    case kernel_family::truncated_cauchy:
      return cauchy_shape(u);
  }
  return 0.0;
}

double kernel_deriv_eval(const kernel_spec& spec, double u) {
  if (std::fabs(u) > 1.0) return 0.0;
  switch (spec.family) {
    case kernel_family::truncated_gaussian:
      return gaussian_shape_deriv(u);
    case kernel_family::truncated_cauchy:
      return cauchy_shape_deriv(u);
  }
  return 0.0;
}

scaled_values scaled_eval(const kernel_spec& spec, double x, double xi) {
  if (!(spec.bandwidth > 0.0)) {
    fail(errc::non_positive_bandwidth, "kernel bandwidth must be positive");
  }
  const double u = (x - xi) / spec.bandwidth;
  return {kernel_eval(spec, u), kernel_deriv_eval(spec, u) / spec.bandwidth};
}

}  // namespace toporeg
