#ifndef TOPOREG_STRUCTURES_HPP
#define TOPOREG_STRUCTURES_HPP

#include <string>
#include <vector>

#include "config.hpp"
#include "persistence.hpp"
#include "significance.hpp"

namespace toporeg {

enum class structure_kind { monotonicity, convexity, modality };

enum class conclusion {
  non_decreasing,
  non_increasing,
  not_monotone,
  convex,
  concave,
  not_convex,
  is_mode,
  not_mode,
  inconclusive,
};

const char* conclusion_name(conclusion c);
const char* structure_kind_name(structure_kind k);

// A verdict plus the evidence that produced it: the estimated diagrams,
// the per-feature significance fits, and any located critical points.
struct structure_verdict {
  structure_kind kind = structure_kind::monotonicity;
  conclusion result = conclusion::inconclusive;
  double region_lo = 0.0, region_hi = 0.0;
  persistence_diagram diagram;
  persistence_diagram negated_diagram;  // convexity step (i) only
  std::vector<feature_significance> evidence;
  std::vector<feature_significance> negated_evidence;
  std::vector<double> critical_points;  // zero crossings feeding the verdict
  std::vector<structure_verdict> parts;  // sub-verdicts (convexity halves,
                                         // modality sides)
  std::string note;
};

// Interpolated sign changes of the derivative estimate over its defined
// grid points.
std::vector<double> zero_crossings(const curve_estimate& est);

// Direction of the dominant bar of the estimated diagram of the derivative,
// gated by the significance of the endpoint that carries the claim: the
// death time for non-decreasing, the birth time for non-increasing, both
// for not-monotone. Region defaults to the full data span.
structure_verdict monotonicity(const sample& s, const kernel_spec& k,
                               const analysis_config& cfg);
structure_verdict monotonicity_on(const sample& s, const kernel_spec& k,
                                  const analysis_config& cfg, double lo,
                                  double hi);

// Two-step convexity: (i) the diagrams of the derivative and its negation
// must each carry exactly one significant bar, and their dominant bars must
// be significant; (ii) the curve must fall then rise around the zero
// crossing of the derivative (or rise then fall, for concave).
structure_verdict convexity(const sample& s, const kernel_spec& k,
                            const analysis_config& cfg);

// Mode test around a candidate critical point: increasing into c on
// [c - delta, c], decreasing out of it on [c, c + delta], both significant.
structure_verdict modality(const sample& s, const kernel_spec& k, double c,
                           double delta_nb, const analysis_config& cfg);

}  // namespace toporeg

#endif
