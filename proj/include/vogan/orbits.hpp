// orbits.hpp
// Orbit geometry inside the Vogan variety: composite-rank invariants, the
// type A multisegment dictionary, dimensions via stabilizers, openness by
// two independent criteria, closure order, and orbit duality computed two
// ways (conormal sampling and the combinatorial involution).
#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vogan/params.hpp"
#include "vogan/sampling.hpp"

namespace vogan {

// Segment [start, end] of consecutive exponents; start <= end, same coset.
struct Segment {
  HalfInt start, end;
  bool operator==(const Segment&) const = default;
  int length() const { return int((end.twice - start.twice) / 2) + 1; }
  HalfInt center() const { return HalfInt((start.twice + end.twice) / 2); }
  std::string str() const { return "[" + start.str() + "," + end.str() + "]"; }
};

struct Multisegment {
  std::vector<Segment> segments;  // canonically sorted
  bool operator==(const Multisegment&) const = default;

  std::string str() const {
    std::string out = "{";
    for (const auto& s : segments) out += " " + s.str();
    return out + " }";
  }
};

inline Multisegment make_multisegment(std::vector<Segment> segs) {
  for (const auto& s : segs) {
    if (s.start.twice > s.end.twice) throw input_error("segment start exceeds end");
    if ((s.end.twice - s.start.twice) % 2 != 0)
      throw input_error("segment endpoints are in different cosets");
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
    if (a.start.twice != b.start.twice) return a.start.twice < b.start.twice;
    return a.end.twice < b.end.twice;
  });
  return Multisegment{std::move(segs)};
}

inline Multisegment multisegment_of_parameter(const StructuredParameter& p) {
  std::vector<Segment> segs;
  for (const auto& s : p.summands)
    segs.push_back(Segment{HalfInt(s.center.twice - (s.length - 1)),
                           HalfInt(s.center.twice + (s.length - 1))});
  return make_multisegment(std::move(segs));
}

inline StructuredParameter parameter_of_multisegment(GroupType g, const Multisegment& m) {
  std::vector<Summand> summands;
  for (const auto& s : m.segments) summands.push_back(Summand{s.center(), s.length()});
  return make_structured(g, std::move(summands));
}

// Composite ranks R(e, ell) = rank of E_e -> E_{e+ell} under the ell-th
// power; the ell = 0 row stores the multiplicities d_e themselves. These
// generate all conjugation invariants of a graded nilpotent in type A.
struct RankTriangle {
  std::map<std::pair<long long, int>, long long> r;  // (twice e, ell) -> rank

  long long at(HalfInt e, int ell) const {
    auto it = r.find({e.twice, ell});
    return it == r.end() ? 0 : it->second;
  }
  bool operator==(const RankTriangle&) const = default;

  std::string str() const {
    std::string out;
    for (const auto& [key, v] : r) {
      if (!out.empty()) out += " ";
      out += "R(" + HalfInt(key.first).str() + "," + std::to_string(key.second) + ")=" +
             std::to_string(v);
    }
    return out;
  }
};

namespace detail {

// Rank of the block of `power` mapping the slots of exponent `from` into the
// slots of exponent `to`.
inline long long block_rank(const VoganVariety& vv, const Mat& power, HalfInt from, HalfInt to) {
  const GradedPiece* pf = vv.graded.find(from);
  const GradedPiece* pt = vv.graded.find(to);
  if (!pf || !pt) return 0;
  Mat block(pt->mult, pf->mult);
  for (int i = 0; i < pt->mult; ++i)
    for (int j = 0; j < pf->mult; ++j) block.at(i, j) = power.at(pt->begin + i, pf->begin + j);
  return rank(block);
}

inline RankTriangle rank_triangle(const VoganVariety& vv, const Mat& x, bool lowering) {
  RankTriangle t;
  for (const auto& piece : vv.graded.pieces) t.r[{piece.e.twice, 0}] = piece.mult;
  Mat power = x;
  int max_span = int(vv.graded.pieces.size());
  for (int ell = 1; ell <= max_span && !power.is_zero(); ++ell) {
    for (const auto& piece : vv.graded.pieces) {
      HalfInt from = piece.e;
      HalfInt to = from.plus_whole(ell);
      if (!vv.graded.find(to)) continue;
      long long rk = lowering ? block_rank(vv, power, to, from) : block_rank(vv, power, from, to);
      if (rk != 0) t.r[{from.twice, ell}] = rk;  // keep the map canonical
    }
    power = power * x;
  }
  return t;
}

}  // namespace detail

// Invariants of a degree +1 point: all composite ranks E_e -> E_{e+ell}.
inline RankTriangle rank_invariants(const VoganVariety& vv, const Mat& N) {
  return detail::rank_triangle(vv, N, /*lowering=*/false);
}

// Same dictionary for a degree -1 point; R(e, ell) is the rank of the
// composite E_{e+ell} -> E_e, so triangles on both sides are comparable.
inline RankTriangle rank_invariants_lowering(const VoganVariety& vv, const Mat& y) {
  return detail::rank_triangle(vv, y, /*lowering=*/true);
}

// Inverts the dictionary: the multiplicity of [a,b] by inclusion-exclusion
// over the corner sums S(e, ell) = #{segments containing e and e + ell}.
inline Multisegment triangle_to_multisegment(const RankTriangle& t) {
  std::vector<Segment> segs;
  std::vector<long long> support;
  for (const auto& [key, v] : t.r)
    if (key.second == 0) support.push_back(key.first);
  auto S = [&](long long twice_e, int ell) { return t.at(HalfInt(twice_e), ell); };
  for (long long a : support)
    for (long long b : support) {
      if (b < a || (b - a) % 2 != 0) continue;
      int len = int((b - a) / 2);
      long long mult = S(a, len) - S(a, len + 1) - S(a - 2, len + 1) + S(a - 2, len + 2);
      if (mult < 0) throw input_error("rank pattern is not realizable by any multisegment");
      for (long long k = 0; k < mult; ++k)
        segs.push_back(Segment{HalfInt(a), HalfInt(b)});
    }
  return make_multisegment(std::move(segs));
}

inline long long orbit_dimension(const VoganVariety& vv, const Mat& N) {
  return vv.dim_H() - static_cast<long long>(solve_commutant(vv.basis_LieH, N).size());
}

// Conormal fiber at N: the annihilator {y in V* : [N, y] = 0}.
inline std::vector<Mat> conormal_fiber(const VoganVariety& vv, const Mat& N) {
  return solve_commutant(vv.basis_Vstar, N);
}

// Openness by both criteria: full orbit dimension and vanishing conormal
// fiber. They must agree; disagreement is an internal invariant breach.
inline bool is_open(const VoganVariety& vv, const Mat& N) {
  bool by_dim = orbit_dimension(vv, N) == vv.dim_V();
  bool by_fiber = conormal_fiber(vv, N).empty();
  VOGAN_REQUIRE(by_dim == by_fiber, "openness criteria disagree");
  return by_dim;
}

struct OrbitRecord {
  RankTriangle triangle;          // orientation-normalized composite ranks
  Multisegment m;                 // type A dictionary of the underlying gl orbit
  long long commutant_dim = 0;    // stabilizer dimension inside LieH
  long long dim = 0;
  bool open = false;
  bool closed = false;
  bool dual_side = false;  // orbit lives in V* rather than V
  Mat rep{0, 0};           // the representative the record was built from
};

inline OrbitRecord make_orbit_record(const VoganVariety& vv, const Mat& z, bool dual_side) {
  OrbitRecord rec;
  rec.dual_side = dual_side;
  rec.rep = z;
  rec.triangle = dual_side ? rank_invariants_lowering(vv, z) : rank_invariants(vv, z);
  rec.m = triangle_to_multisegment(rec.triangle);
  rec.commutant_dim = static_cast<long long>(solve_commutant(vv.basis_LieH, z).size());
  rec.dim = vv.dim_H() - rec.commutant_dim;
  rec.closed = z.is_zero();
  VOGAN_REQUIRE(rec.closed == (rec.dim == 0), "zero orbit dimension must mean zero point");
  long long ambient_dim = static_cast<long long>(dual_side ? vv.basis_Vstar.size()
                                                           : vv.basis_V.size());
  bool by_dim = rec.dim == ambient_dim;
  bool by_fiber = solve_commutant(dual_side ? vv.basis_V : vv.basis_Vstar, z).empty();
  VOGAN_REQUIRE(by_dim == by_fiber, "openness criteria disagree");
  rec.open = by_dim;
  return rec;
}

// Canonical point of a multisegment in the general linear layout.
inline ParameterPoint multisegment_to_point(GroupType g, const Multisegment& m) {
  if (g.kind != GroupKind::GL)
    throw input_error("multisegment points are general linear only");
  return parameter_to_point(parameter_of_multisegment(g, m));
}

// All orbits of a general linear Vogan variety: every multisegment over the
// multiplicity vector, generated canonically (top exponent first, starts
// non-increasing within an end class).
inline std::vector<Multisegment> enumerate_multisegments(const GradedDecomposition& graded) {
  std::map<long long, int> d;
  for (const auto& piece : graded.pieces) d[piece.e.twice] = piece.mult;
  std::vector<Multisegment> out;
  std::vector<Segment> current;

  auto top_exponent = [&]() -> std::optional<long long> {
    for (auto it = d.rbegin(); it != d.rend(); ++it)
      if (it->second > 0) return it->first;
    return std::nullopt;
  };

  std::function<void(long long, long long)> rec = [&](long long last_end, long long last_start) {
    auto top = top_exponent();
    if (!top) {
      out.push_back(make_multisegment(current));
      return;
    }
    long long b = *top;
    long long start_cap = (b == last_end) ? last_start : b;
    for (long long a = start_cap; ; a -= 2) {
      if (d.find(a) == d.end()) break;
      // A segment [a, b] consumes one slot at every level it spans; when the
      // canonical same-end rule jumps the walk below b, the skipped levels
      // still need capacity.
      bool fits = true;
      for (long long e = a; e <= b && fits; e += 2) fits = d[e] > 0;
      if (!fits) break;
      for (long long e = a; e <= b; e += 2) --d[e];
      current.push_back(Segment{HalfInt(a), HalfInt(b)});
      rec(b, a);
      current.pop_back();
      for (long long e = a; e <= b; e += 2) ++d[e];
    }
  };
  rec(std::numeric_limits<long long>::max(), std::numeric_limits<long long>::max());
  return out;
}

inline std::vector<OrbitRecord> enumerate_orbits(const VoganVariety& vv) {
  if (vv.lambda.group.kind != GroupKind::GL)
    throw input_error("orbit enumeration is general linear only");
  std::vector<OrbitRecord> out;
  int opens = 0, closeds = 0;
  for (const auto& m : enumerate_multisegments(vv.graded)) {
    auto pt = multisegment_to_point(vv.lambda.group, m);
    VOGAN_REQUIRE(pt.lambda.exponents == vv.lambda.exponents, "multisegment off the grading");
    OrbitRecord rec = make_orbit_record(vv, pt.N, /*dual_side=*/false);
    VOGAN_REQUIRE(rec.m == m, "rank dictionary does not invert the enumeration");
    opens += rec.open;
    closeds += rec.closed;
    out.push_back(std::move(rec));
  }
  VOGAN_REQUIRE(opens == 1 && closeds == 1, "expected exactly one open and one closed orbit");
  return out;
}

// a lies in the closure of b: same multiplicities, all composite ranks <=.
inline bool closure_leq(const RankTriangle& a, const RankTriangle& b) {
  for (const auto& [key, v] : a.r) {
    auto it = b.r.find(key);
    if (key.second == 0) {
      if (it == b.r.end() || it->second != v) throw input_error("triangles on different gradings");
      continue;
    }
    long long bv = it == b.r.end() ? 0 : it->second;
    if (v > bv) return false;
  }
  for (const auto& [key, v] : b.r)
    if (key.second > 0 && v != 0 && a.r.find({key.first, 0}) == a.r.end())
      throw input_error("triangles on different gradings");
  return true;
}

// Duality via the conormal variety: sample the annihilator fiber over z,
// score each sample (componentwise ranks for gl, exact orbit dimension for
// so/sp; both lower semicontinuous, so the maximum is the generic orbit of
// the fiber), and return the best orbit found. Deterministic in (seed,
// budget). `from_dual_side` runs the same construction from V* back into V.
inline OrbitRecord pyasetskii_dual(const VoganVariety& vv, const Mat& z, uint64_t seed,
                                   int budget = 32, bool from_dual_side = false) {
  const std::vector<Mat>& target = from_dual_side ? vv.basis_V : vv.basis_Vstar;
  std::vector<Mat> fiber = solve_commutant(target, z);
  int n = vv.model.ambient;
  bool winner_dual_side = !from_dual_side;
  if (fiber.empty()) return make_orbit_record(vv, Mat(n, n), winner_dual_side);

  SplitMix64 rng(seed);
  bool use_ranks = vv.lambda.group.kind == GroupKind::GL;
  Mat best(n, n);
  long long best_score = -1;
  long long full = static_cast<long long>(target.size());
  for (int t = 0; t < budget; ++t) {
    Mat y(n, n);
    for (const Mat& w : fiber) {
      long coeff = rng.coefficient();
      if (coeff != 0) y = y + rat(coeff) * w;
    }
    long long score;
    if (use_ranks) {
      RankTriangle tri =
          winner_dual_side ? rank_invariants_lowering(vv, y) : rank_invariants(vv, y);
      score = 0;
      for (const auto& [key, v] : tri.r)
        if (key.second > 0) score += v;
    } else {
      score = orbit_dimension(vv, y);
    }
    if (score > best_score) {
      best_score = score;
      best = y;
      if (!use_ranks && score == full) break;
    }
  }
  return make_orbit_record(vv, best, winner_dual_side);
}

// Combinatorial duality on multisegments: repeatedly strip the top layer of
// the longest descending staircase. The chain starts at the maximal end with
// maximal start and extends by end-1 segments of strictly smaller start
// (again maximal); the stripped layer contributes the dual segment.
inline Multisegment mw_involution(const Multisegment& m) {
  std::vector<Segment> work = m.segments;
  std::vector<Segment> dual;
  while (!work.empty()) {
    int first = -1;
    for (int i = 0; i < int(work.size()); ++i) {
      if (first < 0 || work[size_t(i)].end.twice > work[size_t(first)].end.twice ||
          (work[size_t(i)].end.twice == work[size_t(first)].end.twice &&
           work[size_t(i)].start.twice > work[size_t(first)].start.twice))
        first = i;
    }
    std::vector<int> chain{first};
    while (true) {
      const Segment& prev = work[size_t(chain.back())];
      int next = -1;
      for (int i = 0; i < int(work.size()); ++i) {
        const Segment& s = work[size_t(i)];
        if (s.end.twice != prev.end.twice - 2 || s.start.twice >= prev.start.twice) continue;
        if (next < 0 || s.start.twice > work[size_t(next)].start.twice) next = i;
      }
      if (next < 0) break;
      chain.push_back(next);
    }
    HalfInt b = work[size_t(chain.front())].end;
    long long s = static_cast<long long>(chain.size());
    dual.push_back(Segment{HalfInt(b.twice - 2 * (s - 1)), b});
    std::sort(chain.begin(), chain.end(), std::greater<>());
    for (int idx : chain) {
      Segment& s = work[size_t(idx)];
      if (s.start == s.end)
        work.erase(work.begin() + idx);
      else
        s.end = HalfInt(s.end.twice - 2);
    }
  }
  return make_multisegment(std::move(dual));
}

// x and y must commute; strong regularity means the pair's stabilizer in
// LieH is as small as the open-orbit count forces it to be.
inline bool is_strongly_regular(const VoganVariety& vv, const Mat& x, const Mat& y) {
  if (!bracket(x, y).is_zero()) throw input_error("strong regularity needs a commuting pair");
  long long stab =
      static_cast<long long>(solve_commutant(vv.basis_LieH, std::vector<Mat>{x, y}).size());
  return vv.dim_H() - stab == vv.dim_V();
}

}  // namespace vogan
