// lie_algebra.hpp
// Matrix models of the dual Lie algebras gl_n, so_m, sp_2n, realized with an
// antidiagonal bilinear form so that diagonal weights sit in the dual torus
// and upper-triangular entries raise degree.
#pragma once

#include <string>
#include <vector>

#include "vogan/matrix.hpp"

namespace vogan {

enum class GroupKind { GL, SOodd, Sp, SOeven };

// n is the size in the group's own name: GL(n), SO_odd(2k+1), Sp(2k),
// SO_even(2k). The dual algebra acts on a space of dimension dual_dim().
struct GroupType {
  GroupKind kind = GroupKind::GL;
  int n = 1;

  bool is_classical() const { return kind != GroupKind::GL; }

  int dual_dim() const {
    switch (kind) {
      case GroupKind::GL: return n;          // gl_n
      case GroupKind::SOodd: return n - 1;   // sp_{n-1}
      case GroupKind::Sp: return n + 1;      // so_{n+1}
      case GroupKind::SOeven: return n;      // so_n
    }
    return 0;
  }

  // Parity of the Jordan blocks a self-dual simple summand must have to be
  // of the dual algebra's own type: even for sp duals, odd for so duals.
  bool dual_is_symplectic() const { return kind == GroupKind::SOodd; }

  std::string str() const {
    switch (kind) {
      case GroupKind::GL: return "GL(" + std::to_string(n) + ")";
      case GroupKind::SOodd: return "SO_odd(" + std::to_string(n) + ")";
      case GroupKind::Sp: return "Sp(" + std::to_string(n) + ")";
      case GroupKind::SOeven: return "SO_even(" + std::to_string(n) + ")";
    }
    return "?";
  }

  bool operator==(const GroupType&) const = default;
};

inline GroupType make_group(GroupKind kind, int n) {
  GroupType g{kind, n};
  switch (kind) {
    case GroupKind::GL:
      if (n < 1) throw input_error("GL(n) needs n >= 1");
      break;
    case GroupKind::SOodd:
      if (n < 3 || n % 2 == 0) throw input_error("SO_odd(n) needs odd n >= 3");
      break;
    case GroupKind::Sp:
      if (n < 2 || n % 2 != 0) throw input_error("Sp(n) needs even n >= 2");
      break;
    case GroupKind::SOeven:
      if (n < 2 || n % 2 != 0) throw input_error("SO_even(n) needs even n >= 2");
      break;
  }
  return g;
}

enum class FormKind { None, Symmetric, Alternating };

struct LieAlgebraModel {
  GroupType group;
  int ambient = 0;  // matrices act on an ambient space of this dimension
  FormKind form_kind = FormKind::None;
  Mat form;                 // empty for gl
  std::vector<int> epsilon; // form signs on the antidiagonal; all +1 for so
  std::vector<Mat> basis;

  // Sign ratio in the membership relation
  //   z[r][c] = -(eps[N-1-c]/eps[N-1-r]) * z[N-1-c][N-1-r]
  // (0-based); for gl there is no relation.
  int mirror_ratio(int r, int c) const {
    return epsilon[size_t(ambient - 1 - r)] * epsilon[size_t(ambient - 1 - c)];
  }
};

// Expected dimensions: gl_n = n^2, so_m = m(m-1)/2, sp_2n = n(2n+1).
inline LieAlgebraModel build_dual_lie_algebra(GroupType g) {
  LieAlgebraModel m;
  m.group = g;
  int N = g.dual_dim();
  m.ambient = N;

  if (g.kind == GroupKind::GL) {
    m.form_kind = FormKind::None;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) m.basis.push_back(Mat::unit(N, i, j));
    return m;
  }

  bool symplectic = g.dual_is_symplectic();
  m.form_kind = symplectic ? FormKind::Alternating : FormKind::Symmetric;
  m.epsilon.assign(size_t(N), 1);
  if (symplectic)
    for (int i = N / 2; i < N; ++i) m.epsilon[size_t(i)] = -1;
  m.form = Mat(N, N);
  for (int i = 0; i < N; ++i) m.form.at(i, N - 1 - i) = rat(m.epsilon[size_t(i)]);

  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      int rm = N - 1 - c, cm = N - 1 - r;  // mirror position, same degree
      if (std::pair(r, c) > std::pair(rm, cm)) continue;  // one element per pair
      if (r == rm && c == cm) {
        // Self-mirrored entry: free exactly when the sign relation is z = z.
        if (-m.mirror_ratio(r, c) == 1) m.basis.push_back(Mat::unit(N, r, c));
        continue;
      }
      Mat b = Mat::unit(N, r, c);
      // Partner coefficient forced by the membership relation.
      b.at(rm, cm) = rat(-m.mirror_ratio(rm, cm));
      m.basis.push_back(std::move(b));
    }
  return m;
}

// Membership: for so/sp the span condition is equivalent to the form
// condition z^T J + J z = 0, which is what gets checked.
inline bool contains(const LieAlgebraModel& m, const Mat& z) {
  if (z.rows() != m.ambient || z.cols() != m.ambient) return false;
  if (m.form_kind == FormKind::None) return true;
  return (z.transpose() * m.form + m.form * z).is_zero();
}

}  // namespace vogan
