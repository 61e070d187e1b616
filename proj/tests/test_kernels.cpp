#include <cmath>
#include <doctest.h>

#include "errors.hpp"
#include "kernels.hpp"
#include "test_support.hpp"

using namespace toporeg;

TEST_CASE("kernel shapes at reference points") {
  const auto g = kernel_spec::make(kernel_family::truncated_gaussian, 1.0);
  const auto c = kernel_spec::make(kernel_family::truncated_cauchy, 1.0);

  CHECK(kernel_eval(g, 0.0) == 1.0);
  CHECK(kernel_eval(g, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(kernel_eval(c, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kernel_eval(g, 1.5) == 0.0);
  CHECK(kernel_eval(c, -2.0) == 0.0);

  CHECK(kernel_deriv_eval(g, 0.0) == 0.0);
  CHECK(kernel_deriv_eval(g, 1.0) ==
        doctest::Approx(-std::exp(-0.5)).epsilon(1e-15));
  CHECK(kernel_deriv_eval(c, 0.5) == doctest::Approx(-0.64).epsilon(1e-12));
  CHECK(kernel_deriv_eval(c, 0.0) == 0.0);
  CHECK(kernel_deriv_eval(g, 1.01) == 0.0);
}

TEST_CASE("delta and tau match a 1-d optimization oracle") {
  for (auto family :
       {kernel_family::truncated_gaussian, kernel_family::truncated_cauchy}) {
    const auto spec = kernel_spec::make(family, 1.0);
    double min_k = 2.0, max_abs_k1 = 0.0;
    for (int i = 0; i <= 200000; ++i) {
      const double u = -1.0 + 2.0 * i / 200000.0;
      min_k = std::min(min_k, kernel_eval(spec, u));
      max_abs_k1 = std::max(max_abs_k1, std::fabs(kernel_deriv_eval(spec, u)));
    }
    CHECK(min_k >= spec.delta - 1e-12);
    CHECK(min_k == doctest::Approx(spec.delta).epsilon(1e-9));
    CHECK(max_abs_k1 <= spec.tau + 1e-12);
    CHECK(max_abs_k1 == doctest::Approx(spec.tau).epsilon(1e-8));
  }
  // Cauchy tau has the closed form 3 sqrt(3) / 8 attained at 1/sqrt(3).
  const auto c = kernel_spec::make(kernel_family::truncated_cauchy, 1.0);
  CHECK(c.tau == doctest::Approx(3.0 * std::sqrt(3.0) / 8.0).epsilon(1e-15));
  CHECK(std::fabs(kernel_deriv_eval(c, 1.0 / std::sqrt(3.0))) ==
        doctest::Approx(c.tau).epsilon(1e-15));
}

TEST_CASE("symmetry and finite-difference consistency") {
  testsup::test_rng rng(41);
  for (auto family :
       {kernel_family::truncated_gaussian, kernel_family::truncated_cauchy}) {
    const auto spec = kernel_spec::make(family, 1.0);
    for (int i = 0; i < 2000; ++i) {
      const double u = rng.uniform(-0.999, 0.999);
      CHECK(kernel_eval(spec, u) == kernel_eval(spec, -u));
      CHECK(kernel_deriv_eval(spec, u) == -kernel_deriv_eval(spec, -u));
      if (std::fabs(u) < 0.998) {  // keep the FD stencil inside the support
        const double h = 1e-4;
        const double fd =
            (kernel_eval(spec, u + h) - kernel_eval(spec, u - h)) / (2.0 * h);
        CHECK(std::fabs(fd - kernel_deriv_eval(spec, u)) < 1e-6);
      }
    }
  }
}

TEST_CASE("scaled evaluation carries the 1/h factor") {
  const auto g = kernel_spec::make(kernel_family::truncated_gaussian, 2.0);
  const auto at_center = scaled_eval(g, 0.7, 0.7);
  CHECK(at_center.k == 1.0);
  CHECK(at_center.k1 == 0.0);

  const auto outside = scaled_eval(g, 0.0, 2.5);
  CHECK(outside.k == 0.0);
  CHECK(outside.k1 == 0.0);

  const auto edge = scaled_eval(g, 2.0, 0.0);  // x - xi = h
  CHECK(edge.k == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(edge.k1 == doctest::Approx(-std::exp(-0.5) / 2.0).epsilon(1e-15));

  CHECK_THROWS_AS(kernel_spec::make(kernel_family::truncated_gaussian, 0.0),
                  error);
  CHECK_THROWS_AS(kernel_spec::make("nope", 1.0), error);
}
