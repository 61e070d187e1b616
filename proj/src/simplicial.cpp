#include "simplicial.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace toporeg {

using rational = boost::multiprecision::cpp_rational;

const std::vector<std::vector<int>> simplicial_complex::empty_{};

void simplicial_complex::add_simplex(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) return;
  const int k = static_cast<int>(vertices.size()) - 1;
  if (static_cast<std::size_t>(k) >= by_dim_.size()) by_dim_.resize(k + 1);
  auto& set = by_dim_[k];
  auto it = std::lower_bound(set.begin(), set.end(), vertices);
  if (it == set.end() || *it != vertices) set.insert(it, vertices);
}

simplicial_complex simplicial_complex::closure(
    const std::vector<std::vector<int>>& simplices) {
  simplicial_complex c;
  // Enumerate all nonempty subsets of each simplex.
  for (const auto& s : simplices) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const std::size_t n = sorted.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.push_back(sorted[i]);
      }
      c.add_simplex(std::move(face));
    }
  }
  return c;
}

int simplicial_complex::dimension() const {
  for (int k = static_cast<int>(by_dim_.size()) - 1; k >= 0; --k) {
    if (!by_dim_[k].empty()) return k;
  }
  return -1;
}

std::size_t simplicial_complex::count(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= by_dim_.size()) return 0;
  return by_dim_[k].size();
}

const std::vector<std::vector<int>>& simplicial_complex::simplices(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= by_dim_.size()) return empty_;
  return by_dim_[k];
}

bool simplicial_complex::face_closed() const {
  for (int k = 1; k <= dimension(); ++k) {
    for (const auto& s : simplices(k)) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> face;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) face.push_back(s[i]);
        }
        const auto& lower = simplices(k - 1);
        if (!std::binary_search(lower.begin(), lower.end(), face)) return false;
      }
    }
  }
  return true;
}

boundary_matrix_t boundary_matrix(const simplicial_complex& c, int k,
                                  coeff_field f) {
  if (k < 1) fail(errc::invalid_argument, "boundary operator needs k >= 1");
  if (!c.face_closed()) {
    fail(errc::invalid_complex, "complex is not closed under faces");
  }
  const auto& rows = c.simplices(k - 1);
  const auto& cols = c.simplices(k);
  boundary_matrix_t m;
  m.k = k;
  m.rows = rows.size();
  m.cols = cols.size();
  m.entries.assign(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& s = cols[j];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<int> face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) face.push_back(s[i]);
      }
      const auto it = std::lower_bound(rows.begin(), rows.end(), face);
      const std::size_t r = static_cast<std::size_t>(it - rows.begin());
      if (f == coeff_field::gf2) {
        m.entries[r][j] = 1;
      } else {
        m.entries[r][j] = (drop % 2 == 0) ? 1 : -1;
      }
    }
  }
  return m;
}

std::size_t rank_gf2(const boundary_matrix_t& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<std::uint8_t>> a(m.rows,
                                           std::vector<std::uint8_t>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      a[r][c] = static_cast<std::uint8_t>(((m.entries[r][c] % 2) + 2) % 2);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r != rank && a[r][col]) {
        for (std::size_t c = col; c < m.cols; ++c) a[r][c] ^= a[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const boundary_matrix_t& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<std::vector<rational>> a(m.rows, std::vector<rational>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m.entries[r][c];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r != rank && a[r][col] != 0) {
        const rational factor = a[r][col] / a[rank][col];
        for (std::size_t c = col; c < m.cols; ++c) {
          a[r][c] -= factor * a[rank][c];
        }
      }
    }
    ++rank;
  }
  return rank;
}

int betti(const simplicial_complex& c, int k, coeff_field f) {
  if (k < 0) fail(errc::invalid_argument, "Betti number needs k >= 0");
  const std::size_t n_k = c.count(k);
  if (n_k == 0) return 0;
  const auto rank_of = [&](int deg) -> std::size_t {
    if (deg < 1 || c.count(deg) == 0) return 0;  // d_0 is the zero map
    const boundary_matrix_t m = boundary_matrix(c, deg, f);
    return f == coeff_field::gf2 ? rank_gf2(m) : rank_rational(m);
  };
  const std::size_t rank_k = rank_of(k);
  const std::size_t rank_k1 = rank_of(k + 1);
  // dim ker d_k = n_k - rank d_k
  return static_cast<int>(n_k - rank_k - rank_k1);
}

simplicial_complex nerve_of_intervals(std::span<const double> centers,
                                      double radius) {
  if (!(radius > 0.0)) fail(errc::invalid_argument, "nerve radius must be positive");
  simplicial_complex c;
  const int n = static_cast<int>(centers.size());
  for (int i = 0; i < n; ++i) c.add_simplex({i});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::fabs(centers[i] - centers[j]) <= 2.0 * radius) {
        c.add_simplex({i, j});
      }
    }
  }
  return c;
}

}  // namespace toporeg
