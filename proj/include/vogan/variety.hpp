// variety.hpp
// Infinitesimal parameters, the graded decomposition of the ambient space,
// dominant sorting with a symmetry-compatible permutation, and the Vogan
// variety (the Ad-eigenvalue q^{+1} subspace of the dual algebra, with its
// partner q^{-1} subspace and the degree-0 stabilizer algebra).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vogan/lie_algebra.hpp"

namespace vogan {

// Dominant (non-increasing) exponents of Frobenius; for classical groups the
// multiset must be closed under negation so the diagonal lies in the dual
// group's torus.
struct InfinitesimalParameter {
  GroupType group;
  std::vector<HalfInt> exponents;
};

inline InfinitesimalParameter make_infinitesimal(GroupType g, std::vector<HalfInt> exps) {
  if (int(exps.size()) != g.dual_dim())
    throw input_error("expected " + std::to_string(g.dual_dim()) + " exponents for " + g.str() +
                      ", got " + std::to_string(exps.size()));
  for (size_t i = 1; i < exps.size(); ++i)
    if (exps[i - 1] < exps[i]) throw input_error("exponents are not in dominant (non-increasing) order");
  if (g.is_classical()) {
    std::vector<long long> t;
    for (auto e : exps) t.push_back(e.twice);
    std::vector<long long> neg;
    for (auto v : t) neg.push_back(-v);
    std::sort(neg.begin(), neg.end(), std::greater<>());
    if (neg != t) throw input_error("classical exponent multiset must be closed under negation");
  }
  return InfinitesimalParameter{g, std::move(exps)};
}

// Eigenvalue multiplicities q^e -> d_e with slot ranges in the dominant
// layout. Pieces are strictly descending; integer and half-integer exponent
// cosets can both occur but never interact through degree-1 maps.
struct GradedPiece {
  HalfInt e;
  int mult = 0;
  int begin = 0;  // first slot of the block, 0-based
};

struct GradedDecomposition {
  std::vector<GradedPiece> pieces;
  int total = 0;

  const GradedPiece* find(HalfInt e) const {
    for (const auto& p : pieces)
      if (p.e == e) return &p;
    return nullptr;
  }
  int mult_of(HalfInt e) const {
    const auto* p = find(e);
    return p ? p->mult : 0;
  }
  int begin_of(HalfInt e) const {
    const auto* p = find(e);
    VOGAN_REQUIRE(p != nullptr, "no graded piece at requested exponent");
    return p->begin;
  }
};

inline GradedDecomposition graded_pieces(const InfinitesimalParameter& lambda) {
  GradedDecomposition g;
  g.total = int(lambda.exponents.size());
  for (int i = 0; i < g.total;) {
    int j = i;
    while (j < g.total && lambda.exponents[j] == lambda.exponents[i]) ++j;
    g.pieces.push_back(GradedPiece{lambda.exponents[i], j - i, i});
    i = j;
  }
  return g;
}

namespace detail {

// Slot assignment for a list of weighted items subject to the mirror
// constraint slot[i] + slot[mirror[i]] = N - 1. mirror is an involution
// negating weights; a fixed point must have weight 0 and takes the central
// slot. Positive weights are filled stably in item order; this is what makes
// already-dominant inputs come out as the identity permutation.
inline std::vector<int> assign_symmetric_slots(const std::vector<HalfInt>& w,
                                               const std::vector<int>& mirror,
                                               const GradedDecomposition& layout) {
  int M = int(w.size());
  VOGAN_REQUIRE(M == layout.total, "item count does not match layout");
  const int N = layout.total;
  std::vector<int> slot(size_t(M), -1);
  for (int i = 0; i < M; ++i) {
    VOGAN_REQUIRE(mirror[size_t(i)] >= 0 && mirror[size_t(i)] < M, "mirror out of range");
    VOGAN_REQUIRE(mirror[size_t(mirror[size_t(i)])] == i, "mirror is not an involution");
    VOGAN_REQUIRE(w[size_t(mirror[size_t(i)])] == -w[size_t(i)], "mirror does not negate weight");
  }

  for (const auto& piece : layout.pieces) {
    if (piece.e.twice <= 0) continue;
    int next = piece.begin;
    for (int i = 0; i < M; ++i)
      if (w[size_t(i)] == piece.e) slot[size_t(i)] = next++;
    VOGAN_REQUIRE(next == piece.begin + piece.mult, "weight class does not fill its block");
  }

  if (const auto* zero = layout.find(HalfInt(0))) {
    // The zero block is always centrally placed in a symmetric layout.
    VOGAN_REQUIRE(2 * zero->begin + zero->mult == N, "zero block is not centered");
    std::vector<bool> used(size_t(zero->mult), false);
    auto take = [&](int local) {
      VOGAN_REQUIRE(!used[size_t(local)], "zero slot assigned twice");
      used[size_t(local)] = true;
      return zero->begin + local;
    };
    for (int i = 0; i < M; ++i) {
      if (w[size_t(i)].twice != 0 || slot[size_t(i)] >= 0) continue;
      int m = mirror[size_t(i)];
      if (m == i) {
        VOGAN_REQUIRE(zero->mult % 2 == 1, "self-mirrored item needs a central slot");
        slot[size_t(i)] = take((zero->mult - 1) / 2);
      } else {
        int local = 0;
        while (used[size_t(local)]) ++local;
        slot[size_t(i)] = take(local);
        slot[size_t(m)] = take(zero->mult - 1 - local);
      }
    }
  }

  for (const auto& piece : layout.pieces) {
    if (piece.e.twice >= 0) continue;
    for (int i = 0; i < M; ++i) {
      if (w[size_t(i)] != piece.e) continue;
      int ms = slot[size_t(mirror[size_t(i)])];
      VOGAN_REQUIRE(ms >= 0, "mirror slot not yet assigned");
      slot[size_t(i)] = N - 1 - ms;
    }
  }

  std::vector<bool> seen(size_t(N), false);
  for (int i = 0; i < M; ++i) {
    int s = slot[size_t(i)];
    VOGAN_REQUIRE(s >= 0 && s < N && !seen[size_t(s)], "slot assignment is not a bijection");
    seen[size_t(s)] = true;
  }
  return slot;
}

// Plain stable assignment (general linear case: no mirror constraint).
inline std::vector<int> assign_stable_slots(const std::vector<HalfInt>& w,
                                            const GradedDecomposition& layout) {
  int M = int(w.size());
  std::vector<int> slot(size_t(M), -1);
  for (const auto& piece : layout.pieces) {
    int next = piece.begin;
    for (int i = 0; i < M; ++i)
      if (w[size_t(i)] == piece.e) slot[size_t(i)] = next++;
    VOGAN_REQUIRE(next == piece.begin + piece.mult, "weight class does not fill its block");
  }
  return slot;
}

// A maximal run of exponents descending by exactly 1.
struct Chain {
  HalfInt top;
  int len = 0;
  HalfInt center() const { return HalfInt(top.twice - (len - 1)); }
  HalfInt level(int idx) const { return top.plus_whole(-idx); }
  bool has_level(HalfInt e) const {
    long long diff = top.twice - e.twice;
    return diff >= 0 && diff % 2 == 0 && diff / 2 < len;
  }
  int index_of(HalfInt e) const { return int((top.twice - e.twice) / 2); }
};

// Pair chains so that the pairing negates centers. Nonzero centers need an
// exact (center, length) partner. Center-0 chains follow the form parity:
// for a symplectic dual even-length chains are self-dual and self-pair; for
// an orthogonal dual odd-length chains pair equal lengths first and the
// leftovers cross-pair longest-with-shortest, a possible middle chain going
// through the central slot. Wrong-parity chains pair only in equal-length
// couples; a leftover is a parity obstruction (strict mode throws, lenient
// mode pairs the stragglers anyway since slot assignment still works).
enum class PairMode { Lenient, Strict };

inline bool pair_chains(const std::vector<Chain>& chains, bool symplectic_dual, PairMode mode,
                        std::vector<int>& partner) {
  int K = int(chains.size());
  partner.assign(size_t(K), -1);
  auto couple = [&](int a, int b) {
    partner[size_t(a)] = b;
    partner[size_t(b)] = a;
  };

  std::map<std::pair<long long, int>, std::vector<int>> groups;
  for (int k = 0; k < K; ++k) {
    HalfInt c = chains[size_t(k)].center();
    if (c.twice < 0) groups[{c.twice, chains[size_t(k)].len}].push_back(k);
  }
  for (int k = 0; k < K; ++k) {
    HalfInt c = chains[size_t(k)].center();
    if (c.twice <= 0) continue;
    auto it = groups.find({-c.twice, chains[size_t(k)].len});
    if (it == groups.end() || it->second.empty()) {
      if (mode == PairMode::Strict)
        throw input_error("summand multiset is not closed under duality");
      return false;
    }
    couple(k, it->second.back());  // last unclaimed partner keeps sorted input fixed
    it->second.pop_back();
  }
  for (auto& [key, left] : groups) {
    (void)key;
    if (!left.empty()) {
      if (mode == PairMode::Strict)
        throw input_error("summand multiset is not closed under duality");
      return false;
    }
  }

  // Center-0 chains, split by Jordan-length parity against the form.
  std::map<int, std::vector<int>> right_by_len, wrong_by_len;
  for (int k = 0; k < K; ++k) {
    if (chains[size_t(k)].center().twice != 0) continue;
    bool even = chains[size_t(k)].len % 2 == 0;
    bool right = symplectic_dual ? even : !even;
    (right ? right_by_len : wrong_by_len)[chains[size_t(k)].len].push_back(k);
  }

  std::vector<int> stragglers;
  for (auto& [len, ks] : wrong_by_len) {
    (void)len;
    size_t i = 0, j = ks.size();
    while (j - i >= 2) couple(ks[i++], ks[--j]);
    if (i < j) stragglers.push_back(ks[i]);
  }
  if (!stragglers.empty() && mode == PairMode::Strict)
    throw input_error("parity obstruction: self-dual summand of length " +
                      std::to_string(chains[size_t(stragglers.front())].len) +
                      " has the wrong parity for the form");

  if (symplectic_dual) {
    for (auto& [len, ks] : right_by_len) {
      (void)len;
      for (int k : ks) partner[size_t(k)] = k;  // even chains are self-mirrored
    }
  } else {
    std::vector<int> leftovers;
    for (auto& [len, ks] : right_by_len) {
      (void)len;
      size_t i = 0, j = ks.size();
      while (j - i >= 2) couple(ks[i++], ks[--j]);
      if (i < j) leftovers.push_back(ks[i]);
    }
    // Distinct odd lengths: longest pairs with shortest, middle self-pairs.
    std::stable_sort(leftovers.begin(), leftovers.end(), [&](int a, int b) {
      return chains[size_t(a)].len > chains[size_t(b)].len;
    });
    size_t i = 0, j = leftovers.size();
    while (j - i >= 2) couple(leftovers[i++], leftovers[--j]);
    if (i < j) partner[size_t(leftovers[i])] = leftovers[i];
  }

  // Lenient stragglers still get mirror-consistent slots.
  size_t i = 0, j = stragglers.size();
  while (j - i >= 2) couple(stragglers[i++], stragglers[--j]);
  if (i < j) partner[size_t(stragglers[i])] = stragglers[i];
  return true;
}

struct ChainSlots {
  std::vector<Chain> chains;
  std::vector<int> partner;
  std::vector<std::vector<int>> slots;  // slots[k][level index]
};

// Mirror of one chain level: the partner chain at the negated level when it
// reaches that far, else the same chain (exclusive levels of the longer
// chain in an unequal center-0 pair are self-mirrored).
inline std::pair<int, HalfInt> mirror_level(const std::vector<Chain>& chains,
                                            const std::vector<int>& partner, int k, HalfInt e) {
  int p = partner[size_t(k)];
  if (p != k && chains[size_t(p)].has_level(-e)) return {p, -e};
  VOGAN_REQUIRE(chains[size_t(k)].has_level(-e), "no mirror level available");
  return {k, -e};
}

inline ChainSlots assign_chain_slots(std::vector<Chain> chains, std::vector<int> partner,
                                     const GradedDecomposition& layout, bool classical) {
  int K = int(chains.size());
  std::vector<HalfInt> w;
  std::vector<std::pair<int, int>> item_of;  // (chain, level index)
  std::vector<std::vector<int>> item_at(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k)
    for (int idx = 0; idx < chains[size_t(k)].len; ++idx) {
      item_at[size_t(k)].push_back(int(w.size()));
      item_of.emplace_back(k, idx);
      w.push_back(chains[size_t(k)].level(idx));
    }

  std::vector<int> slot;
  if (!classical) {
    slot = assign_stable_slots(w, layout);
  } else {
    std::vector<int> mirror(w.size());
    for (size_t t = 0; t < w.size(); ++t) {
      auto [k, idx] = item_of[t];
      auto [mk, me] = mirror_level(chains, partner, k, chains[size_t(k)].level(idx));
      mirror[t] = item_at[size_t(mk)][size_t(chains[size_t(mk)].index_of(me))];
    }
    slot = assign_symmetric_slots(w, mirror, layout);
  }

  ChainSlots out;
  out.chains = std::move(chains);
  out.partner = std::move(partner);
  out.slots.resize(size_t(K));
  for (size_t t = 0; t < w.size(); ++t) {
    auto [k, idx] = item_of[t];
    (void)idx;
    out.slots[size_t(k)].push_back(slot[t]);
  }
  return out;
}

inline GradedDecomposition layout_of_multiset(std::vector<HalfInt> values) {
  std::sort(values.begin(), values.end(),
            [](HalfInt a, HalfInt b) { return a.twice > b.twice; });
  GradedDecomposition g;
  g.total = int(values.size());
  for (int i = 0; i < g.total;) {
    int j = i;
    while (j < g.total && values[size_t(j)] == values[size_t(i)]) ++j;
    g.pieces.push_back(GradedPiece{values[size_t(i)], j - i, i});
    i = j;
  }
  return g;
}

}  // namespace detail

struct DominantSortResult {
  InfinitesimalParameter lambda;
  std::vector<int> slot_of;  // raw position -> slot in the dominant layout
};

// Sorts raw exponents into dominant order. For classical groups the
// permutation is chosen so mirrored raw positions land in mirrored slots
// (slot[i] + slot[mirror of i] = N - 1), which keeps the conjugated point
// inside the form algebra; already-dominant input yields the identity.
inline DominantSortResult dominant_sort(GroupType g, const std::vector<HalfInt>& raw) {
  if (int(raw.size()) != g.dual_dim())
    throw input_error("expected " + std::to_string(g.dual_dim()) + " exponents for " + g.str());
  GradedDecomposition layout = detail::layout_of_multiset(raw);

  if (std::is_sorted(raw.begin(), raw.end(),
                     [](HalfInt a, HalfInt b) { return a.twice > b.twice; })) {
    // Already dominant: the identity permutation is mirror-compatible
    // because slot i and slot N-1-i carry negated exponents.
    std::vector<int> identity(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) identity[i] = int(i);
    return DominantSortResult{make_infinitesimal(g, raw), std::move(identity)};
  }

  std::vector<int> slot_of(raw.size(), -1);
  if (!g.is_classical()) {
    slot_of = detail::assign_stable_slots(raw, layout);
  } else {
    // Decompose into maximal runs descending by exactly 1; runs are the
    // simple-summand chains when the raw list is a concatenation of them.
    std::vector<detail::Chain> chains;
    std::vector<int> start;
    for (int i = 0; i < int(raw.size());) {
      int j = i + 1;
      while (j < int(raw.size()) && raw[size_t(j)].twice == raw[size_t(j - 1)].twice - 2) ++j;
      chains.push_back(detail::Chain{raw[size_t(i)], j - i});
      start.push_back(i);
      i = j;
    }
    std::vector<int> partner;
    if (!detail::pair_chains(chains, g.dual_is_symplectic(), detail::PairMode::Lenient,
                             partner)) {
      // Entrywise fallback: singleton chains, j-th occurrence of e mirrored
      // with the j-th-from-last occurrence of -e. Always succeeds on a
      // negation-closed multiset.
      chains.clear();
      start.clear();
      for (int i = 0; i < int(raw.size()); ++i) {
        chains.push_back(detail::Chain{raw[size_t(i)], 1});
        start.push_back(i);
      }
      std::map<long long, std::vector<int>> occ;
      for (int i = 0; i < int(raw.size()); ++i) occ[raw[size_t(i)].twice].push_back(i);
      partner.assign(raw.size(), -1);
      for (int i = 0; i < int(raw.size()); ++i) {
        const auto& mine = occ[raw[size_t(i)].twice];
        const auto& theirs = occ.at(-raw[size_t(i)].twice);
        VOGAN_REQUIRE(mine.size() == theirs.size(), "exponent multiset is not negation-closed");
        int j = int(std::find(mine.begin(), mine.end(), i) - mine.begin());
        partner[size_t(i)] = theirs[size_t(mine.size() - 1 - size_t(j))];
      }
    }
    auto cs = detail::assign_chain_slots(chains, partner, layout, /*classical=*/true);
    for (size_t k = 0; k < cs.chains.size(); ++k)
      for (int idx = 0; idx < cs.chains[k].len; ++idx)
        slot_of[size_t(start[k] + idx)] = cs.slots[k][size_t(idx)];
  }

  std::vector<HalfInt> dominant(raw.size(), HalfInt(0));
  for (size_t i = 0; i < raw.size(); ++i) dominant[size_t(slot_of[i])] = raw[i];
  return DominantSortResult{make_infinitesimal(g, std::move(dominant)), std::move(slot_of)};
}

// P x P^{-1} for the permutation sending raw basis vector i to slot[i].
inline Mat conjugate_point(const Mat& x, const std::vector<int>& slot_of) {
  int n = x.rows();
  VOGAN_REQUIRE(x.cols() == n && int(slot_of.size()) == n, "permutation size mismatch");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.at(i, j) != 0) out.at(slot_of[size_t(i)], slot_of[size_t(j)]) = x.at(i, j);
  return out;
}

// The graded pieces of the dual algebra under Ad of the diagonal parameter:
// V = degree +1 (entries raising the Frobenius eigenvalue by one), V* =
// degree -1, LieH = degree 0.
struct VoganVariety {
  InfinitesimalParameter lambda;
  GradedDecomposition graded;
  LieAlgebraModel model;
  std::map<long long, std::vector<Mat>> ad_graded;  // twice-degree -> basis
  std::vector<Mat> basis_V, basis_Vstar, basis_LieH;

  int dim_V() const { return int(basis_V.size()); }
  int dim_H() const { return int(basis_LieH.size()); }
  HalfInt exponent_at(int slot) const { return lambda.exponents[size_t(slot)]; }
};

inline VoganVariety build_vogan_variety(const InfinitesimalParameter& lambda) {
  VoganVariety vv;
  vv.lambda = lambda;
  vv.graded = graded_pieces(lambda);
  vv.model = build_dual_lie_algebra(lambda.group);
  VOGAN_REQUIRE(vv.model.ambient == vv.graded.total, "ambient dimension mismatch");

  for (const Mat& b : vv.model.basis) {
    std::optional<long long> deg;
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(i, j) == 0) continue;
        long long d = lambda.exponents[size_t(i)].twice - lambda.exponents[size_t(j)].twice;
        VOGAN_REQUIRE(!deg || *deg == d, "basis element is not degree-homogeneous");
        deg = d;
      }
    VOGAN_REQUIRE(deg.has_value(), "zero basis element");
    vv.ad_graded[*deg].push_back(b);
  }
  if (auto it = vv.ad_graded.find(2); it != vv.ad_graded.end()) vv.basis_V = it->second;
  if (auto it = vv.ad_graded.find(-2); it != vv.ad_graded.end()) vv.basis_Vstar = it->second;
  if (auto it = vv.ad_graded.find(0); it != vv.ad_graded.end()) vv.basis_LieH = it->second;
  return vv;
}

}  // namespace vogan
