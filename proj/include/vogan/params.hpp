// params.hpp
// Langlands and Arthur parameter combinatorics: structured parameters as
// multisets of (center, length) summands, their base points inside the
// Vogan variety, and the ladder decompositions of Arthur type.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "vogan/variety.hpp"

namespace vogan {

// One irreducible unramified summand: the twist by q^center tensored with
// the length-dimensional representation of the Frobenius SL2. Its exponents
// are center + (length-1)/2 down to center - (length-1)/2.
struct Summand {
  HalfInt center;
  int length = 1;
  bool operator==(const Summand&) const = default;
};

struct StructuredParameter {
  GroupType group;
  std::vector<Summand> summands;  // canonical order: length desc, center desc
};

inline bool summand_before(const Summand& a, const Summand& b) {
  if (a.length != b.length) return a.length > b.length;
  return a.center.twice > b.center.twice;
}

inline std::vector<HalfInt> summand_levels(const Summand& s) {
  std::vector<HalfInt> levels;
  for (int i = 0; i < s.length; ++i)
    levels.push_back(HalfInt(s.center.twice + (s.length - 1) - 2 * i));
  return levels;
}

inline StructuredParameter make_structured(GroupType g, std::vector<Summand> summands) {
  long long total = 0;
  for (const auto& s : summands) {
    if (s.length < 1) throw input_error("summand length must be at least 1");
    total += s.length;
  }
  if (total != g.dual_dim())
    throw input_error("summand lengths sum to " + std::to_string(total) + ", expected " +
                      std::to_string(g.dual_dim()) + " for " + g.str());
  if (g.is_classical()) {
    std::multiset<std::pair<long long, int>> plain, negated;
    for (const auto& s : summands) {
      plain.insert({s.center.twice, s.length});
      negated.insert({-s.center.twice, s.length});
    }
    if (plain != negated)
      throw input_error("classical summand multiset must be closed under center negation");
  }
  std::sort(summands.begin(), summands.end(), summand_before);
  return StructuredParameter{g, std::move(summands)};
}

inline std::vector<HalfInt> parameter_exponents(const StructuredParameter& p) {
  std::vector<HalfInt> exps;
  for (const auto& s : p.summands)
    for (auto e : summand_levels(s)) exps.push_back(e);
  return exps;
}

// Discrete parameters arise from partitions into distinct parts of the
// parity matching the dual form (even parts for sp duals, odd for so duals).
inline StructuredParameter discrete_from_partition(GroupType g, std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  long long total = 0;
  for (int part : parts) total += part;
  if (total != g.dual_dim())
    throw input_error("partition sums to " + std::to_string(total) + ", expected " +
                      std::to_string(g.dual_dim()) + " for " + g.str());
  if (g.kind == GroupKind::GL) {
    if (parts.size() != 1)
      throw input_error("general linear discrete parameters have a single summand");
  } else {
    for (size_t i = 1; i < parts.size(); ++i)
      if (parts[i] == parts[i - 1])
        throw input_error("discrete partition parts must be distinct, got repeated " +
                          std::to_string(parts[i]));
    bool want_even = g.dual_is_symplectic();
    for (int part : parts)
      if ((part % 2 == 0) != want_even)
        throw input_error("discrete partition part " + std::to_string(part) + " has the wrong parity for " +
                          g.str() + (want_even ? " (needs even parts)" : " (needs odd parts)"));
  }
  std::vector<Summand> summands;
  for (int part : parts) summands.push_back(Summand{HalfInt(0), part});
  return make_structured(g, std::move(summands));
}

// A base point: the diagonal Frobenius parameter together with the degree +1
// nilpotent, plus the commuting degree -1 partner for Arthur points.
struct ParameterPoint {
  InfinitesimalParameter lambda;
  Mat N;
  std::optional<Mat> y;
};

namespace detail {

// Fill coefficients for a set of matrix entry positions so that the result
// lies in the form algebra: each mirror pair gets +1 on its first member and
// the forced partner value on the other; self-mirrored entries get +1 (only
// legal when the form relation is trivial there, which the caller verifies).
inline Mat signed_entries(const LieAlgebraModel& model,
                          std::vector<std::pair<int, int>> positions) {
  int n = model.ambient;
  std::sort(positions.begin(), positions.end());
  for (size_t i = 1; i < positions.size(); ++i)
    VOGAN_REQUIRE(positions[i] != positions[i - 1], "duplicate matrix entry position");
  Mat z(n, n);
  if (model.form_kind == FormKind::None) {
    for (auto [r, c] : positions) z.at(r, c) = 1;
    return z;
  }
  std::map<std::pair<int, int>, bool> assigned;
  for (auto pos : positions) assigned[pos] = false;
  for (auto [r, c] : positions) {
    if (assigned[{r, c}]) continue;
    std::pair<int, int> mir{n - 1 - c, n - 1 - r};
    if (mir == std::pair{r, c}) {
      z.at(r, c) = 1;
      assigned[{r, c}] = true;
      continue;
    }
    auto it = assigned.find(mir);
    VOGAN_REQUIRE(it != assigned.end(), "mirror entry missing from the support");
    z.at(r, c) = 1;
    z.at(mir.first, mir.second) = rat(-model.mirror_ratio(r, c));
    assigned[{r, c}] = true;
    it->second = true;
  }
  return z;
}

// rank(x^j) for the x of Jordan type `lengths` is sum over parts of
// max(part - j, 0); checking all j pins the type exactly.
inline bool jordan_type_matches(const Mat& x, std::vector<int> lengths) {
  int max_len = 0;
  for (int len : lengths) max_len = std::max(max_len, len);
  Mat power = x;
  for (int j = 1; j <= max_len; ++j) {
    long long expect = 0;
    for (int len : lengths) expect += std::max(len - j, 0);
    if (rank(power) != expect) return false;
    power = power * x;
  }
  return power.is_zero();
}

struct EmbeddedChains {
  ChainSlots cs;
  InfinitesimalParameter lambda;
};

inline EmbeddedChains embed_summand_chains(GroupType g, const std::vector<Summand>& summands,
                                           PairMode mode) {
  std::vector<Chain> chains;
  std::vector<HalfInt> exps;
  for (const auto& s : summands) {
    chains.push_back(Chain{HalfInt(s.center.twice + (s.length - 1)), s.length});
    for (auto e : summand_levels(s)) exps.push_back(e);
  }
  GradedDecomposition layout = layout_of_multiset(exps);
  std::vector<int> partner(chains.size(), -1);
  if (g.is_classical()) {
    bool ok = pair_chains(chains, g.dual_is_symplectic(), mode, partner);
    VOGAN_REQUIRE(ok, "strict chain pairing returned instead of throwing");
  }
  EmbeddedChains out{assign_chain_slots(chains, partner, layout, g.is_classical()),
                     InfinitesimalParameter{}};
  std::vector<HalfInt> dominant(exps.size(), HalfInt(0));
  for (size_t k = 0; k < out.cs.chains.size(); ++k)
    for (int idx = 0; idx < out.cs.chains[k].len; ++idx)
      dominant[size_t(out.cs.slots[k][size_t(idx)])] = out.cs.chains[k].level(idx);
  out.lambda = make_infinitesimal(g, std::move(dominant));
  return out;
}

}  // namespace detail

// The canonical base point of a structured parameter: Frobenius exponents in
// dominant order and the direct sum of Jordan chains, mirror-paired and
// signed so the matrix lies in the form algebra. Throws input_error when a
// self-dual summand has the wrong parity for the form.
inline ParameterPoint parameter_to_point(const StructuredParameter& p) {
  auto emb = detail::embed_summand_chains(p.group, p.summands, detail::PairMode::Strict);
  const auto& cs = emb.cs;
  LieAlgebraModel model = build_dual_lie_algebra(p.group);

  std::vector<std::pair<int, int>> positions;
  for (size_t k = 0; k < cs.chains.size(); ++k)
    for (int idx = 0; idx + 1 < cs.chains[k].len; ++idx)
      positions.emplace_back(cs.slots[k][size_t(idx)], cs.slots[k][size_t(idx + 1)]);
  // Unequal self-dual pairs share levels only up to the shorter top; the
  // Jordan structure needs cross entries bridging the exclusive levels.
  for (size_t k = 0; k < cs.chains.size(); ++k) {
    int m = cs.partner[k];
    if (int(k) >= m) continue;  // one bridge per pair
    const auto& ck = cs.chains[k];
    const auto& cm = cs.chains[size_t(m)];
    if (ck.center().twice != 0 || cm.center().twice != 0 || ck.len == cm.len) continue;
    const auto& longer = ck.len > cm.len ? ck : cm;
    const auto& shorter = ck.len > cm.len ? cm : ck;
    const auto& slots_long = ck.len > cm.len ? cs.slots[k] : cs.slots[size_t(m)];
    const auto& slots_short = ck.len > cm.len ? cs.slots[size_t(m)] : cs.slots[k];
    HalfInt h = shorter.level(0);  // top of the shorter chain
    positions.emplace_back(slots_long[size_t(longer.index_of(h.plus_whole(1)))],
                           slots_short[size_t(shorter.index_of(h))]);
    positions.emplace_back(slots_short[size_t(shorter.index_of(-h))],
                           slots_long[size_t(longer.index_of(HalfInt(-h.twice).plus_whole(-1)))]);
  }

  Mat x = detail::signed_entries(model, std::move(positions));

  for (int r = 0; r < model.ambient; ++r)
    for (int c = 0; c < model.ambient; ++c)
      if (x.at(r, c) != 0)
        VOGAN_REQUIRE(emb.lambda.exponents[size_t(r)] == emb.lambda.exponents[size_t(c)].plus_whole(1),
                      "point entry does not raise degree by one");
  VOGAN_REQUIRE(contains(model, x), "constructed point left the form algebra");
  std::vector<int> lengths;
  for (const auto& s : p.summands) lengths.push_back(s.length);
  VOGAN_REQUIRE(detail::jordan_type_matches(x, lengths),
                "constructed point has the wrong Jordan type");
  return ParameterPoint{std::move(emb.lambda), std::move(x), std::nullopt};
}

// One Arthur factor: twist by q^center tensor Sym^{a-1} (Frobenius SL2)
// tensor Sym^{b-1} (Arthur SL2).
struct Ladder {
  HalfInt center;
  int a = 1;
  int b = 1;
  bool operator==(const Ladder&) const = default;
};

struct ArthurParameterData {
  GroupType group;
  std::vector<Ladder> ladders;
};

inline ArthurParameterData make_arthur(GroupType g, std::vector<Ladder> ladders) {
  long long total = 0;
  for (const auto& l : ladders) {
    if (l.a < 1 || l.b < 1) throw input_error("ladder dimensions must be at least 1");
    total += (long long)l.a * l.b;
  }
  if (total != g.dual_dim())
    throw input_error("ladder dimensions sum to " + std::to_string(total) + ", expected " +
                      std::to_string(g.dual_dim()) + " for " + g.str());
  if (g.is_classical()) {
    std::multiset<std::tuple<long long, int, int>> plain, negated;
    for (const auto& l : ladders) {
      plain.insert({l.center.twice, l.a, l.b});
      negated.insert({-l.center.twice, l.a, l.b});
    }
    if (plain != negated)
      throw input_error("classical ladder multiset must be closed under center negation");
  }
  std::sort(ladders.begin(), ladders.end(), [](const Ladder& x, const Ladder& y) {
    if (x.a != y.a) return x.a > y.a;
    if (x.b != y.b) return x.b > y.b;
    return x.center.twice > y.center.twice;
  });
  return ArthurParameterData{g, std::move(ladders)};
}

// Restriction to the diagonal SL2: the (c,a,b) factor spreads into b
// summands of length a centered at c + (b-1)/2 - j.
inline StructuredParameter phi_of_psi(const ArthurParameterData& psi) {
  std::vector<Summand> summands;
  for (const auto& l : psi.ladders)
    for (int j = 0; j < l.b; ++j)
      summands.push_back(Summand{HalfInt(l.center.twice + (l.b - 1) - 2 * j), l.a});
  return make_structured(psi.group, std::move(summands));
}

inline bool is_tempered(const StructuredParameter& p) {
  return std::all_of(p.summands.begin(), p.summands.end(),
                     [](const Summand& s) { return s.center.twice == 0; });
}

// A parameter is of Arthur type when each length class of centers splits
// into symmetric blocks {M, M-1, ..., -M}; extracting the maximal center
// greedily is forced, so failure of the greedy pass is a proof of failure.
inline std::optional<ArthurParameterData> is_arthur_type(const StructuredParameter& p) {
  std::map<int, std::multiset<long long>> classes;  // length -> center twices
  for (const auto& s : p.summands) classes[s.length].insert(s.center.twice);
  std::vector<Ladder> ladders;
  for (auto& [len, centers] : classes) {
    while (!centers.empty()) {
      long long top = *centers.rbegin();
      if (top < 0) return std::nullopt;  // bounded pieces have center 0
      for (long long c = top; c >= -top; c -= 2) {
        auto it = centers.find(c);
        if (it == centers.end()) return std::nullopt;
        centers.erase(it);
      }
      ladders.push_back(Ladder{HalfInt(0), len, int(top) + 1});
    }
  }
  return make_arthur(p.group, std::move(ladders));
}

// Necessary form-parity condition for a classical Arthur embedding: every
// self-dual ladder shape left unpaired must carry an invariant form of the
// dual algebra's type. Sym^{a-1} x Sym^{b-1} is orthogonal iff a = b mod 2.
inline bool arthur_form_compatible(const ArthurParameterData& psi) {
  if (!psi.group.is_classical()) return true;
  std::map<std::tuple<int, int>, int> zero_mult;
  for (const auto& l : psi.ladders)
    if (l.center.twice == 0) ++zero_mult[{l.a, l.b}];
  for (const auto& [shape, mult] : zero_mult) {
    if (mult % 2 == 0) continue;
    auto [a, b] = shape;
    bool orthogonal_factor = (a % 2) == (b % 2);
    if (orthogonal_factor == psi.group.dual_is_symplectic()) return false;
  }
  return true;
}

inline bool is_discrete(const StructuredParameter& p) {
  if (p.group.kind == GroupKind::GL)
    return p.summands.size() == 1 && p.summands.front().center.twice == 0;
  if (!is_tempered(p)) return false;
  bool want_even = p.group.dual_is_symplectic();
  for (size_t i = 0; i < p.summands.size(); ++i) {
    if ((p.summands[i].length % 2 == 0) != want_even) return false;
    if (i > 0 && p.summands[i].length == p.summands[i - 1].length) return false;
  }
  return true;
}

// Base point of an Arthur parameter: x lowers the Frobenius grading by the
// first SL2, y raises it back by the second, and [x, y] = 0 because they act
// on different tensor factors. For classical groups ladders are mirror
// paired like chains; equal self-dual shapes pair up, a single leftover uses
// its internal mirror when the form permits.
inline ParameterPoint arthur_to_point(const ArthurParameterData& psi) {
  bool all_b_one = std::all_of(psi.ladders.begin(), psi.ladders.end(),
                               [](const Ladder& l) { return l.b == 1; });
  if (all_b_one) {
    // Tempered shape: the Arthur SL2 acts trivially and the base point is
    // the structured parameter's own, with vanishing lowering part.
    ParameterPoint pt = parameter_to_point(phi_of_psi(psi));
    pt.y = Mat(pt.N.rows(), pt.N.cols());
    return pt;
  }

  const auto& ladders = psi.ladders;
  int K = int(ladders.size());
  std::vector<int> partner(size_t(K), -1);
  if (psi.group.is_classical()) {
    std::map<std::tuple<long long, int, int>, std::vector<int>> groups;
    for (int k = 0; k < K; ++k)
      if (ladders[size_t(k)].center.twice < 0)
        groups[{ladders[size_t(k)].center.twice, ladders[size_t(k)].a, ladders[size_t(k)].b}]
            .push_back(k);
    std::map<std::pair<int, int>, std::vector<int>> zero_groups;
    for (int k = 0; k < K; ++k) {
      const auto& l = ladders[size_t(k)];
      if (l.center.twice == 0) {
        zero_groups[{l.a, l.b}].push_back(k);
        continue;
      }
      if (l.center.twice < 0) continue;
      auto it = groups.find({-l.center.twice, l.a, l.b});
      if (it == groups.end() || it->second.empty())
        throw input_error("ladder multiset is not closed under duality");
      partner[size_t(k)] = it->second.back();
      partner[size_t(it->second.back())] = k;
      it->second.pop_back();
    }
    int odd_odd_leftovers = 0;
    for (auto& [shape, ks] : zero_groups) {
      size_t i = 0, j = ks.size();
      while (j - i >= 2) {
        partner[size_t(ks[i])] = ks[j - 1];
        partner[size_t(ks[j - 1])] = ks[i];
        ++i;
        --j;
      }
      if (i < j) {
        partner[size_t(ks[i])] = ks[i];
        if (shape.first % 2 == 1 && shape.second % 2 == 1) ++odd_odd_leftovers;
      }
    }
    if (odd_odd_leftovers > 1)
      throw input_error(
          "unsupported classical Arthur embedding: multiple self-paired odd-by-odd factors");
  } else {
    for (int k = 0; k < K; ++k) partner[size_t(k)] = k;  // unused for gl
  }

  // Tensor basis items (k, i, j) of weight c + (a-1)/2 - i + (b-1)/2 - j.
  std::vector<HalfInt> w;
  std::vector<std::vector<std::vector<int>>> item_at(static_cast<size_t>(K));
  for (int k = 0; k < K; ++k) {
    const auto& l = ladders[size_t(k)];
    item_at[size_t(k)].assign(size_t(l.a), std::vector<int>(size_t(l.b), -1));
    for (int i = 0; i < l.a; ++i)
      for (int j = 0; j < l.b; ++j) {
        item_at[size_t(k)][size_t(i)][size_t(j)] = int(w.size());
        w.push_back(HalfInt(l.center.twice + (l.a - 1) - 2 * i + (l.b - 1) - 2 * j));
      }
  }
  GradedDecomposition layout = detail::layout_of_multiset(w);

  std::vector<int> slot;
  if (!psi.group.is_classical()) {
    slot = detail::assign_stable_slots(w, layout);
  } else {
    std::vector<int> mirror(w.size(), -1);
    for (int k = 0; k < K; ++k) {
      const auto& l = ladders[size_t(k)];
      int m = partner[size_t(k)];
      for (int i = 0; i < l.a; ++i)
        for (int j = 0; j < l.b; ++j)
          mirror[size_t(item_at[size_t(k)][size_t(i)][size_t(j)])] =
              item_at[size_t(m)][size_t(l.a - 1 - i)][size_t(l.b - 1 - j)];
    }
    slot = detail::assign_symmetric_slots(w, mirror, layout);
  }

  LieAlgebraModel model = build_dual_lie_algebra(psi.group);
  std::vector<std::pair<int, int>> x_pos, y_pos;
  for (int k = 0; k < K; ++k) {
    const auto& l = ladders[size_t(k)];
    for (int i = 1; i < l.a; ++i)
      for (int j = 0; j < l.b; ++j)
        x_pos.emplace_back(slot[size_t(item_at[size_t(k)][size_t(i - 1)][size_t(j)])],
                           slot[size_t(item_at[size_t(k)][size_t(i)][size_t(j)])]);
    for (int i = 0; i < l.a; ++i)
      for (int j = 0; j + 1 < l.b; ++j)
        y_pos.emplace_back(slot[size_t(item_at[size_t(k)][size_t(i)][size_t(j + 1)])],
                           slot[size_t(item_at[size_t(k)][size_t(i)][size_t(j)])]);
  }

  std::vector<HalfInt> dominant(w.size(), HalfInt(0));
  for (size_t t = 0; t < w.size(); ++t) dominant[size_t(slot[t])] = w[t];
  InfinitesimalParameter lambda = make_infinitesimal(psi.group, std::move(dominant));

  Mat x, y;
  try {
    x = detail::signed_entries(model, std::move(x_pos));
    y = detail::signed_entries(model, std::move(y_pos));
  } catch (const invariant_error&) {
    throw input_error("unsupported classical Arthur embedding for these factors");
  }

  std::vector<int> x_lengths, y_lengths;
  for (const auto& l : ladders) {
    for (int j = 0; j < l.b; ++j) x_lengths.push_back(l.a);
    for (int i = 0; i < l.a; ++i) y_lengths.push_back(l.b);
  }
  bool good = contains(model, x) && contains(model, y) && bracket(x, y).is_zero() &&
              detail::jordan_type_matches(x, x_lengths) &&
              detail::jordan_type_matches(y, y_lengths);
  for (int r = 0; r < model.ambient && good; ++r)
    for (int c = 0; c < model.ambient; ++c) {
      if (x.at(r, c) != 0 && lambda.exponents[size_t(r)] != lambda.exponents[size_t(c)].plus_whole(1))
        good = false;
      if (y.at(r, c) != 0 && lambda.exponents[size_t(r)] != lambda.exponents[size_t(c)].plus_whole(-1))
        good = false;
    }
  if (!good) throw input_error("unsupported classical Arthur embedding for these factors");
  return ParameterPoint{std::move(lambda), std::move(x), std::move(y)};
}

}  // namespace vogan
