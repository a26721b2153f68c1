// matrix.hpp
// Dense exact-rational matrices with the three linear-algebra primitives the
// rest of the library is built on: rank, canonical kernel bases, and
// commutant solving inside a spanned subspace.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "vogan/numeric.hpp"

namespace vogan {

class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Rational(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  // Elementary matrix with a single entry, 0-based indices.
  static Mat unit(int n, int row, int col, const Rational& v = Rational(1)) {
    Mat m(n, n);
    m.at(row, col) = v;
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
  }
  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Mat transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    VOGAN_REQUIRE(a.r_ == b.r_ && a.c_ == b.c_, "matrix shape mismatch in +");
    Mat s = a;
    for (size_t k = 0; k < s.a_.size(); ++k) s.a_[k] += b.a_[k];
    return s;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    VOGAN_REQUIRE(a.r_ == b.r_ && a.c_ == b.c_, "matrix shape mismatch in -");
    Mat s = a;
    for (size_t k = 0; k < s.a_.size(); ++k) s.a_[k] -= b.a_[k];
    return s;
  }
  friend Mat operator*(const Rational& c, const Mat& a) {
    Mat s = a;
    for (auto& x : s.a_) x *= c;
    return s;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    VOGAN_REQUIRE(a.c_ == b.r_, "matrix shape mismatch in *");
    Mat p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.c_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj != 0) p.at(i, j) += aik * bkj;
        }
      }
    return p;
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < r_; ++i) {
      out += i == 0 ? "[" : " ";
      out += "[";
      for (int j = 0; j < c_; ++j) {
        out += to_string(at(i, j));
        if (j + 1 < c_) out += " ";
      }
      out += "]";
      out += i + 1 < r_ ? "\n" : "]";
    }
    return out;
  }

 private:
  int r_, c_;
  std::vector<Rational> a_;
};

inline Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

// Rank by fraction-free (Bareiss) elimination over the integers after
// clearing denominators row by row; intermediate entries stay polynomially
// bounded, unlike naive rational elimination.
inline int rank(const Mat& m) {
  int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpq_class scaled = m.at(i, j) * Rational(lcm);
      VOGAN_REQUIRE(scaled.get_den() == 1, "denominator clearing failed");
      a[i][j] = scaled.get_num();
    }
  }
  int rk = 0;
  mpz_class prev = 1;
  for (int col = 0; col < cols && rk < rows; ++col) {
    int piv = -1;
    for (int i = rk; i < rows; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[rk], a[piv]);
    for (int i = rk + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class num = a[i][j] * a[rk][col] - a[i][col] * a[rk][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref_in_place(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(piv, j));
    Rational inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Canonical kernel basis: the unique basis whose matrix of row vectors is in
// reduced echelon form with leading coefficient 1. Size is cols - rank.
inline std::vector<std::vector<Rational>> kernel_basis(const Mat& m) {
  Mat r = m;
  std::vector<int> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(int(k), f);
    basis.push_back(std::move(v));
  }
  // Echelonize the kernel rows themselves so the output is basis-canonical
  // (leading entries 1, zeros above and below each leading column).
  if (!basis.empty()) {
    Mat k(int(basis.size()), m.cols());
    for (size_t i = 0; i < basis.size(); ++i)
      for (int j = 0; j < m.cols(); ++j) k.at(int(i), j) = basis[i][j];
    rref_in_place(k);
    for (size_t i = 0; i < basis.size(); ++i)
      for (int j = 0; j < m.cols(); ++j) basis[i][j] = k.at(int(i), j);
  }
  return basis;
}

inline std::vector<Rational> flatten(const Mat& m) {
  std::vector<Rational> v;
  v.reserve(size_t(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

// Basis of {z in span(space_basis) : [z, x] = 0 for all x in xs}, canonical
// in the coordinates of space_basis. Set up as a kernel problem for the
// linear map c |-> [sum c_i b_i, x] flattened over all x.
inline std::vector<Mat> solve_commutant(const std::vector<Mat>& space_basis,
                                        const std::vector<Mat>& xs) {
  if (space_basis.empty()) return {};
  int n = space_basis.front().rows();
  int cols = int(space_basis.size());
  int rows = int(xs.size()) * n * n;
  Mat sys(rows, cols);
  for (int j = 0; j < cols; ++j) {
    VOGAN_REQUIRE(space_basis[j].rows() == n && space_basis[j].cols() == n,
                  "commutant basis element has wrong shape");
    int off = 0;
    for (const Mat& x : xs) {
      std::vector<Rational> col = flatten(bracket(space_basis[j], x));
      for (int i = 0; i < n * n; ++i) sys.at(off + i, j) = col[i];
      off += n * n;
    }
  }
  std::vector<Mat> out;
  for (const auto& combo : kernel_basis(sys)) {
    Mat z(n, n);
    for (int j = 0; j < cols; ++j)
      if (combo[j] != 0) z = z + combo[j] * space_basis[j];
    out.push_back(std::move(z));
  }
  return out;
}

inline std::vector<Mat> solve_commutant(const std::vector<Mat>& space_basis, const Mat& x) {
  return solve_commutant(space_basis, std::vector<Mat>{x});
}

}  // namespace vogan
