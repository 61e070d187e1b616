#include <doctest.h>

#include "errors.hpp"
#include "simplicial.hpp"
#include "test_support.hpp"

using namespace toporeg;

TEST_CASE("boundary matrices of small complexes") {
  auto edge = simplicial_complex::closure({{0, 1}});
  auto m = boundary_matrix(edge, 1);
  CHECK(m.rows == 2);
  CHECK(m.cols == 1);
  CHECK(m.entries[0][0] + m.entries[1][0] == 0);  // signs -1 and +1
  CHECK(rank_gf2(m) == 1);

  auto m2 = boundary_matrix(edge, 1, coeff_field::gf2);
  CHECK(m2.entries[0][0] == 1);
  CHECK(m2.entries[1][0] == 1);

  auto hollow = simplicial_complex::closure({{0, 1}, {1, 2}, {0, 2}});
  auto m1 = boundary_matrix(hollow, 1);
  CHECK(m1.rows == 3);
  CHECK(m1.cols == 3);
  for (std::size_t c = 0; c < 3; ++c) {
    std::int64_t col_sum = 0;
    for (std::size_t r = 0; r < 3; ++r) col_sum += m1.entries[r][c];
    CHECK(col_sum == 0);
  }

  // An unclosed complex is rejected.
  simplicial_complex broken;
  broken.add_simplex({0});
  broken.add_simplex({1});
  broken.add_simplex({0, 1, 2});
  CHECK_THROWS_AS(boundary_matrix(broken, 2), error);
}

TEST_CASE("betti numbers of reference complexes") {
  simplicial_complex two_points;
  two_points.add_simplex({0});
  two_points.add_simplex({1});
  CHECK(betti(two_points, 0, coeff_field::gf2) == 2);
  CHECK(betti(two_points, 0, coeff_field::rational) == 2);

  auto hollow = simplicial_complex::closure({{0, 1}, {1, 2}, {0, 2}});
  CHECK(betti(hollow, 0, coeff_field::gf2) == 1);
  CHECK(betti(hollow, 1, coeff_field::gf2) == 1);
  CHECK(betti(hollow, 1, coeff_field::rational) == 1);

  auto filled = simplicial_complex::closure({{0, 1, 2}});
  CHECK(betti(filled, 0, coeff_field::gf2) == 1);
  CHECK(betti(filled, 1, coeff_field::gf2) == 0);
  CHECK(betti(filled, 1, coeff_field::rational) == 0);
  CHECK(betti(filled, 2, coeff_field::rational) == 0);
}

TEST_CASE("boundary of boundary vanishes over the rationals") {
  testsup::test_rng rng(3);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = testsup::random_complex(rng);
    for (int k = 2; k <= c.dimension(); ++k) {
      const auto dk = boundary_matrix(c, k - 1);
      const auto dk1 = boundary_matrix(c, k);
      for (std::size_t r = 0; r < dk.rows; ++r) {
        for (std::size_t j = 0; j < dk1.cols; ++j) {
          std::int64_t dot = 0;
          for (std::size_t m = 0; m < dk.cols; ++m) {
            dot += dk.entries[r][m] * dk1.entries[m][j];
          }
          REQUIRE(dot == 0);
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("betti_0 equals BFS component count") {
  testsup::test_rng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = testsup::random_complex(rng);
    const int components = testsup::bfs_component_count(c);
    REQUIRE(betti(c, 0, coeff_field::gf2) == components);
  }
}

TEST_CASE("gf2 and rational betti numbers agree on graphs") {
  testsup::test_rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int nv = rng.uniform_int(1, 8);
    std::vector<std::vector<int>> simplices;
    for (int v = 0; v < nv; ++v) simplices.push_back({v});
    const int ne = rng.uniform_int(0, nv * 2);
    for (int e = 0; e < ne; ++e) {
      simplices.push_back({rng.uniform_int(0, nv - 1), rng.uniform_int(0, nv - 1)});
    }
    const auto c = simplicial_complex::closure(simplices);
    for (int k : {0, 1}) {
      REQUIRE(betti(c, k, coeff_field::gf2) == betti(c, k, coeff_field::rational));
    }
  }
}

TEST_CASE("nerve of intervals") {
  const std::vector<double> two{0.0, 1.0};
  CHECK(betti(nerve_of_intervals(two, 0.4), 0, coeff_field::gf2) == 2);

  const std::vector<double> three{0.0, 0.5, 1.0};
  CHECK(betti(nerve_of_intervals(three, 0.3), 0, coeff_field::gf2) == 1);

  const std::vector<double> none;
  CHECK(betti(nerve_of_intervals(none, 0.3), 0, coeff_field::gf2) == 0);

  CHECK_THROWS_AS(nerve_of_intervals(two, 0.0), error);
}
