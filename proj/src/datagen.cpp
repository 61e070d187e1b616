#include "datagen.hpp"

#include <cmath>

#include "errors.hpp"

namespace toporeg {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double exp_m(double x) { return std::exp(x); }
double exp_m1(double x) { return std::exp(x); }

// x^2 / (1 + x^2 + x|x|): x^2 for x < 0, x^2/(1 + 2x^2) for x >= 0.
double ratio_m(double x) {
  return x * x / (1.0 + x * x + x * std::fabs(x));
}
double ratio_m1(double x) {
  if (x < 0.0) return 2.0 * x;
  const double d = 1.0 + 2.0 * x * x;
  return 2.0 * x / (d * d);
}

// Two Gaussian bumps at +-0.5 with variance 0.1, as an unnormalized shape.
constexpr double kBumpVar = 0.1;
double bimodal_shape(double x) {
  const double a = x + 0.5, b = x - 0.5;
  return std::exp(-a * a / (2.0 * kBumpVar)) + std::exp(-b * b / (2.0 * kBumpVar));
}
double bimodal_shape_deriv(double x) {
  const double a = x + 0.5, b = x - 0.5;
  return -(a / kBumpVar) * std::exp(-a * a / (2.0 * kBumpVar)) -
         (b / kBumpVar) * std::exp(-b * b / (2.0 * kBumpVar));
}

// Peak value of the shape, via golden-section maximization on [0, 1]
// (the shape is symmetric with its maxima near +-0.5).
double bimodal_peak() {
  static const double peak = [] {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = 1.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    for (int iter = 0; iter < 200; ++iter) {
      if (bimodal_shape(c) > bimodal_shape(d)) {
        hi = d;
      } else {
        lo = c;
      }
      c = hi - gr * (hi - lo);
      d = lo + gr * (hi - lo);
    }
    return bimodal_shape((lo + hi) / 2.0);
  }();
  return peak;
}

double bimodal_m(double x) { return bimodal_shape(x) / bimodal_peak(); }
double bimodal_m1(double x) { return bimodal_shape_deriv(x) / bimodal_peak(); }

}  // namespace

scenario_kind scenario_from_name(const std::string& name) {
  if (name == "exp-monotone") return scenario_kind::exp_monotone;
  if (name == "ratio-nonconvex") return scenario_kind::ratio_nonconvex;
  if (name == "bimodal-mixture") return scenario_kind::bimodal_mixture;
  fail(errc::invalid_scenario,
       "unknown scenario '" + name +
           "' (expected exp-monotone, ratio-nonconvex, or bimodal-mixture)");
}

const char* scenario_name(scenario_kind kind) {
  switch (kind) {
    case scenario_kind::exp_monotone: return "exp-monotone";
    case scenario_kind::ratio_nonconvex: return "ratio-nonconvex";
    case scenario_kind::bimodal_mixture: return "bimodal-mixture";
    case scenario_kind::custom: return "custom";
  }
  return "custom";
}

double rng::uniform01() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double rng::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double rng::truncated_normal(double sd, double bound) {
  for (;;) {
    const double z = sd * normal();
    if (std::fabs(z) <= bound) return z;
  }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + index * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

double true_m(scenario_kind kind, double x) {
  switch (kind) {
    case scenario_kind::exp_monotone: return exp_m(x);
    case scenario_kind::ratio_nonconvex: return ratio_m(x);
    case scenario_kind::bimodal_mixture: return bimodal_m(x);
    case scenario_kind::custom: break;
  }
  fail(errc::invalid_scenario, "scenario has no analytic regression curve");
}

double true_m1(scenario_kind kind, double x) {
  switch (kind) {
    case scenario_kind::exp_monotone: return exp_m1(x);
    case scenario_kind::ratio_nonconvex: return ratio_m1(x);
    case scenario_kind::bimodal_mixture: return bimodal_m1(x);
    case scenario_kind::custom: break;
  }
  fail(errc::invalid_scenario, "scenario has no analytic derivative");
}

}  // namespace

sample generate(const scenario& sc) {
  if (sc.kind == scenario_kind::custom) {
    fail(errc::invalid_scenario, "custom scenarios cannot be simulated");
  }
  if (sc.n < 2) {
    fail(errc::invalid_argument,
         "scenario needs n >= 2, got " + std::to_string(sc.n));
  }
  if (!(sc.noise_sd >= 0.0)) {
    fail(errc::invalid_argument, "noise sd must be nonnegative");
  }
  rng gen(sc.seed);
  std::vector<double> xs(sc.n), ys(sc.n);
  for (int i = 0; i < sc.n; ++i) {
    xs[i] = gen.uniform(sc.lo, sc.hi);
    const double noise =
        sc.noise_sd > 0.0 ? gen.truncated_normal(sc.noise_sd, 1.0) : 0.0;
    ys[i] = true_m(sc.kind, xs[i]) + noise;
  }
  return sample(std::move(xs), std::move(ys));
}

void true_curves(const scenario& sc, std::span<const double> grid,
                 std::vector<double>& m_values, std::vector<double>& m1_values) {
  m_values.resize(grid.size());
  m1_values.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    m_values[j] = true_m(sc.kind, grid[j]);
    m1_values[j] = true_m1(sc.kind, grid[j]);
  }
}

persistence_diagram true_derivative_diagram(const scenario& sc, int grid_points) {
  const std::vector<double> grid = uniform_grid(sc.lo, sc.hi, grid_points);
  std::vector<double> m, m1;
  true_curves(sc, grid, m, m1);
  return superlevel_barcode_0d(grid, m1);
}

scenario_bounds bounds_of(const scenario& sc) {
  scenario_bounds b;
  b.p_min = 1.0 / (sc.hi - sc.lo);  // uniform design density
  const std::vector<double> grid = uniform_grid(sc.lo, sc.hi, 4096);
  std::vector<double> m, m1;
  true_curves(sc, grid, m, m1);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    b.m_bound = std::max(b.m_bound, std::fabs(m[j]));
    b.m1_bound = std::max(b.m1_bound, std::fabs(m1[j]));
  }
  return b;
}

}  // namespace toporeg
