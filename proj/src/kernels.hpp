#ifndef TOPOREG_KERNELS_HPP
#define TOPOREG_KERNELS_HPP

#include <string>

namespace toporeg {

// Symmetric kernel shapes on [-1, 1] with K(0) = 1, bounded away from zero
// on the support, and hard-zero outside. The normalizing constant of a
// proper density would cancel in every ratio the estimators form, so the
// shapes are kept unnormalized.
enum class kernel_family { truncated_gaussian, truncated_cauchy };

struct kernel_spec {
  kernel_family family = kernel_family::truncated_gaussian;
  double bandwidth = 1.0;  // h, same units as x
  double delta = 0.0;      // inf of K over the support
  double tau = 0.0;        // sup of |dK/du| over the support

  // Computes delta and tau analytically per family; throws
  // non_positive_bandwidth for h <= 0.
  static kernel_spec make(kernel_family family, double bandwidth);
  static kernel_spec make(const std::string& family_name, double bandwidth);
};

const char* kernel_family_name(kernel_family f);

// K(u): 1 at u = 0, in [delta, 1] on [-1, 1], zero outside.
double kernel_eval(const kernel_spec& spec, double u);

// dK/du: zero at u = 0 and outside [-1, 1]; antisymmetric; |value| <= tau.
double kernel_deriv_eval(const kernel_spec& spec, double u);

struct scaled_values {
  double k;   // K_h(x - xi) = K((x - xi)/h)
  double k1;  // d/dx K_h(x - xi) = K'((x - xi)/h) / h
};

scaled_values scaled_eval(const kernel_spec& spec, double x, double xi);

}  // namespace toporeg

#endif
