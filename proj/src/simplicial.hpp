#ifndef TOPOREG_SIMPLICIAL_HPP
#define TOPOREG_SIMPLICIAL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace toporeg {

// Abstract simplicial complex over integer vertex ids. Simplices are stored
// per dimension as sorted vertex lists; the complex itself keeps each
// dimension's simplex set sorted for stable column ordering.
class simplicial_complex {
 public:
  simplicial_complex() = default;

  // Adds the simplex only; face closure is the caller's responsibility
  // (validated where it matters).
  void add_simplex(std::vector<int> vertices);

  // Builds a valid complex from arbitrary simplices by closing under faces.
  static simplicial_complex closure(const std::vector<std::vector<int>>& simplices);

  int dimension() const;
  std::size_t count(int k) const;  // number of k-simplices
  const std::vector<std::vector<int>>& simplices(int k) const;
  bool face_closed() const;

 private:
  // by_dim_[k] holds the sorted set of k-simplices.
  std::vector<std::vector<std::vector<int>>> by_dim_;
  static const std::vector<std::vector<int>> empty_;
};

enum class coeff_field { gf2, rational };

// Matrix of the k-th boundary operator: rows indexed by (k-1)-simplices,
// columns by k-simplices, both in sorted order. Over the rationals the
// entries are the alternating face signs (-1)^i with ascending vertex order
// as reference orientation; over GF2 they reduce to 0/1. Throws
// invalid_complex if face closure fails.
struct boundary_matrix_t {
  int k = 0;
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::int64_t>> entries;  // rows x cols
};

boundary_matrix_t boundary_matrix(const simplicial_complex& c, int k,
                                  coeff_field f = coeff_field::rational);

// dim ker d_k - rank d_{k+1}, with d_0 the zero map, computed by exact
// elimination over the chosen field.
int betti(const simplicial_complex& c, int k, coeff_field f);

// Nerve of the cover of the line by closed intervals [c - r, c + r]:
// an edge joins two centers iff they are within 2r. Only the 1-skeleton is
// needed for component counting on the line.
simplicial_complex nerve_of_intervals(std::span<const double> centers,
                                      double radius);

// Exact ranks, exposed for tests.
std::size_t rank_gf2(const boundary_matrix_t& m);
std::size_t rank_rational(const boundary_matrix_t& m);

}  // namespace toporeg

#endif
