#include "metric.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "errors.hpp"

namespace toporeg {

double linf_distance(const pd_feature& a, const pd_feature& b) {
  return std::max(std::fabs(a.death - b.death), std::fabs(a.birth - b.birth));
}

double diagonal_distance(const pd_feature& p) {
  return (p.birth - p.death) / 2.0;
}

matching_problem matching_problem::build(const persistence_diagram& a,
                                         const persistence_diagram& b) {
  matching_problem mp;
  mp.points_a = a.features;
  mp.points_b = b.features;
  std::set<double> cands;
  cands.insert(0.0);
  for (const auto& p : mp.points_a) {
    cands.insert(diagonal_distance(p));
    for (const auto& q : mp.points_b) cands.insert(linf_distance(p, q));
  }
  for (const auto& q : mp.points_b) cands.insert(diagonal_distance(q));
  mp.candidate_distances.assign(cands.begin(), cands.end());
  return mp;
}

namespace {

// Augmenting-path bipartite matching. Left side: points of A then proxies of
// B's points; right side: points of B then proxies of A's points. A point may
// use its own proxy when it is within r of the diagonal; proxy-proxy edges
// are always allowed.
struct matcher {
  std::size_t na, nb;
  const matching_problem& mp;
  double r;
  std::vector<int> match_right;  // right node -> left node or -1

  matcher(const matching_problem& m, double radius)
      : na(m.points_a.size()),
        nb(m.points_b.size()),
        mp(m),
        r(radius),
        match_right(na + nb, -1) {}

  bool edge(std::size_t left, std::size_t right) const {
    const bool left_real = left < na;
    const bool right_real = right < nb;
    if (left_real && right_real) {
      return linf_distance(mp.points_a[left], mp.points_b[right]) <= r;
    }
    if (left_real) {  // right is the proxy of some A point: must be its own
      return right - nb == left && diagonal_distance(mp.points_a[left]) <= r;
    }
    if (right_real) {  // left is the proxy of some B point
      return left - na == right && diagonal_distance(mp.points_b[right]) <= r;
    }
    return true;  // proxy to proxy
  }

  bool augment(std::size_t left, std::vector<char>& visited) {
    for (std::size_t right = 0; right < na + nb; ++right) {
      if (visited[right] || !edge(left, right)) continue;
      visited[right] = 1;
      if (match_right[right] < 0 ||
          augment(static_cast<std::size_t>(match_right[right]), visited)) {
        match_right[right] = static_cast<int>(left);
        return true;
      }
    }
    return false;
  }

  bool perfect() {
    for (std::size_t left = 0; left < na + nb; ++left) {
      std::vector<char> visited(na + nb, 0);
      if (!augment(left, visited)) return false;
    }
    return true;
  }
};

}  // namespace

bool matching_problem::feasible(double r) const {
  matcher m(*this, r);
  return m.perfect();
}

double bottleneck_distance(const persistence_diagram& a,
                           const persistence_diagram& b) {
  const auto degree_of = [](const persistence_diagram& d) -> int {
    int deg = -1;
    for (const auto& f : d.features) {
      if (deg == -1) deg = f.degree;
      if (f.degree != deg) {
        fail(errc::degree_mismatch, "diagram mixes homology degrees");
      }
    }
    return deg;
  };
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != -1 && db != -1 && da != db) {
    fail(errc::degree_mismatch, "diagrams have different homology degrees");
  }
  if (a.empty() && b.empty()) return 0.0;

  const matching_problem mp = matching_problem::build(a, b);
  // Smallest candidate radius admitting a perfect matching.
  std::size_t lo = 0, hi = mp.candidate_distances.size() - 1;
  if (!mp.feasible(mp.candidate_distances[hi])) {
    // Cannot happen: the largest candidate dominates every edge.
    fail(errc::invalid_argument, "bottleneck search failed");
  }
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (mp.feasible(mp.candidate_distances[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return mp.candidate_distances[lo];
}

stability_result stability_check(std::span<const double> f_values,
                                 std::span<const double> g_values,
                                 std::span<const double> grid) {
  if (f_values.size() != g_values.size() || f_values.size() != grid.size()) {
    fail(errc::length_mismatch, "stability check needs matching lengths");
  }
  stability_result res;
  res.lhs = bottleneck_distance(superlevel_barcode_0d(grid, f_values),
                                superlevel_barcode_0d(grid, g_values));
  for (std::size_t i = 0; i < f_values.size(); ++i) {
    res.rhs = std::max(res.rhs, std::fabs(f_values[i] - g_values[i]));
  }
  res.holds = res.lhs <= res.rhs + 1e-9;
  return res;
}

}  // namespace toporeg
