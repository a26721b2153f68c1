// test_matrix.cpp
// Exact linear algebra. Rank is cross-checked against an independent plain
// rational Gaussian elimination (different algorithm from the library's
// fraction-free one), kernels against direct multiplication.
#include <catch2/catch_amalgamated.hpp>

#include "vogan/matrix.hpp"
#include "vogan/sampling.hpp"

using namespace vogan;

namespace {

// Oracle: textbook rational row reduction, no fraction-free tricks.
int naive_rank(Mat m) {
  int rk = 0;
  for (int col = 0; col < m.cols() && rk < m.rows(); ++col) {
    int piv = -1;
    for (int i = rk; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rk, j), m.at(piv, j));
    for (int i = rk + 1; i < m.rows(); ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(rk, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rk, j);
    }
    ++rk;
  }
  return rk;
}

Mat from_rows(std::vector<std::vector<long>> rows) {
  Mat m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(int(i), int(j)) = rat(rows[i][j]);
  return m;
}

Mat random_matrix(SplitMix64& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      // Mix magnitudes so denominators actually occur.
      long num = rng.coefficient();
      long den = 1 + long(rng.next() % 7u);
      m.at(i, j) = rat(num, den);
    }
  return m;
}

}  // namespace

TEST_CASE("half-integer parsing and printing") {
  CHECK(parse_half_int("3/2").twice == 3);
  CHECK(parse_half_int("-1/2").twice == -1);
  CHECK(parse_half_int("2").twice == 4);
  CHECK(parse_half_int("-3").twice == -6);
  CHECK(HalfInt::halves(3).str() == "3/2");
  CHECK(HalfInt::whole(-2).str() == "-2");
  CHECK((HalfInt::halves(1) + HalfInt::halves(1)) == HalfInt::whole(1));
  CHECK(HalfInt::halves(-3).floor() == -2);
  CHECK(HalfInt::whole(2).floor() == 2);
  CHECK_THROWS_AS(parse_half_int("1/3"), input_error);
  CHECK_THROWS_AS(parse_half_int("x"), input_error);
}

TEST_CASE("rank matches the worked example and the oracle") {
  Mat m = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 0}});
  CHECK(rank(m) == 2);
  CHECK(naive_rank(m) == 2);

  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + int(rng.next() % 7u);
    int cols = 1 + int(rng.next() % 7u);
    Mat a = random_matrix(rng, rows, cols);
    CHECK(rank(a) == naive_rank(a));
  }
}

TEST_CASE("low-rank products stay consistent with the oracle") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + int(rng.next() % 5u);
    int k = 1 + int(rng.next() % 2u);
    Mat a = random_matrix(rng, n, k);
    Mat b = random_matrix(rng, k, n);
    Mat p = a * b;
    int r = rank(p);
    CHECK(r <= k);
    CHECK(r == naive_rank(p));
  }
}

TEST_CASE("kernel basis is canonical and correct") {
  Mat m = from_rows({{1, 1}});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == 1);
  CHECK(ker[0][1] == -1);

  SplitMix64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + int(rng.next() % 6u);
    int cols = 1 + int(rng.next() % 6u);
    Mat a = random_matrix(rng, rows, cols);
    auto basis = kernel_basis(a);
    CHECK(int(basis.size()) == cols - rank(a));
    for (const auto& v : basis) {
      for (int i = 0; i < rows; ++i) {
        Rational dot = 0;
        for (int j = 0; j < cols; ++j) dot += a.at(i, j) * v[j];
        CHECK(dot == 0);
      }
    }
    // Determinism: a second computation is bit-identical.
    CHECK(kernel_basis(a) == basis);
  }
}

TEST_CASE("commutant of a nilpotent inside gl_2") {
  std::vector<Mat> gl2;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) gl2.push_back(Mat::unit(2, i, j));
  Mat e12 = Mat::unit(2, 0, 1);

  auto comm = solve_commutant(gl2, e12);
  REQUIRE(comm.size() == 2);  // span{I, E12}
  for (const Mat& z : comm) CHECK(bracket(z, e12).is_zero());
  // Both I and E12 must be reachable from the returned span.
  Mat sys(4, 2);
  auto c0 = flatten(comm[0]), c1 = flatten(comm[1]);
  for (int i = 0; i < 4; ++i) {
    sys.at(i, 0) = c0[i];
    sys.at(i, 1) = c1[i];
  }
  CHECK(rank(sys) == 2);
}

TEST_CASE("commutant in a non-closing span can be empty") {
  // {E21} against E12: [E21, E12] = E22 - E11 is never zero on the span.
  std::vector<Mat> space{Mat::unit(2, 1, 0)};
  auto comm = solve_commutant(space, Mat::unit(2, 0, 1));
  CHECK(comm.empty());
}

TEST_CASE("commutant solutions commute and stay in the span") {
  SplitMix64 rng(5150);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + int(rng.next() % 3u);
    // Random span of a few elementary matrices plus the identity.
    std::vector<Mat> space{Mat::identity(n)};
    for (int k = 0; k < n; ++k)
      space.push_back(Mat::unit(n, int(rng.next() % unsigned(n)), int(rng.next() % unsigned(n))));
    Mat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) x.at(i, j) = rat(rng.coefficient());

    auto comm = solve_commutant(space, x);
    CHECK(!comm.empty());  // identity always commutes
    for (const Mat& z : comm) {
      CHECK(bracket(z, x).is_zero());
      // Membership: appending z to the span must not raise the rank.
      Mat sys(n * n, int(space.size()) + 1);
      for (size_t c = 0; c < space.size(); ++c) {
        auto col = flatten(space[c]);
        for (int i = 0; i < n * n; ++i) sys.at(i, int(c)) = col[i];
      }
      auto zc = flatten(z);
      for (int i = 0; i < n * n; ++i) sys.at(i, int(space.size())) = zc[i];
      Mat without(n * n, int(space.size()));
      for (size_t c = 0; c < space.size(); ++c)
        for (int i = 0; i < n * n; ++i) without.at(i, int(c)) = sys.at(i, int(c));
      CHECK(rank(sys) == rank(without));
    }
  }
}

TEST_CASE("pair commutant is the intersection of single commutants") {
  std::vector<Mat> gl3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gl3.push_back(Mat::unit(3, i, j));
  Mat x = Mat::unit(3, 0, 1);
  Mat y = Mat::unit(3, 1, 2);
  auto both = solve_commutant(gl3, std::vector<Mat>{x, y});
  for (const Mat& z : both) {
    CHECK(bracket(z, x).is_zero());
    CHECK(bracket(z, y).is_zero());
  }
  // Joint commutant is span{I, E13}: commuting with x and y separately is
  // stricter than commuting with x + y.
  CHECK(both.size() == 2);
  CHECK(solve_commutant(gl3, x + y).size() == 3);  // {I, N, N^2}
}
