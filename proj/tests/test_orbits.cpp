// test_orbits.cpp
// Orbit invariants, enumeration, closure order, duality and strong
// regularity. Composite ranks are checked against an independent
// segment-containment count, and the sampled geometric duality is
// cross-validated against the combinatorial involution.
#include <catch2/catch_amalgamated.hpp>

#include "vogan/orbits.hpp"

using namespace vogan;

namespace {

Segment sg(long long twice_start, long long twice_end) {
  return Segment{HalfInt(twice_start), HalfInt(twice_end)};
}

// Independent oracle: the composite rank of the canonical point of a
// multisegment counts the segments containing both endpoints of the hop.
long long containment_count(const Multisegment& m, long long twice_e, int ell) {
  long long c = 0;
  for (const auto& s : m.segments)
    if (s.start.twice <= twice_e && s.end.twice >= twice_e + 2 * ell) ++c;
  return c;
}

VoganVariety variety_of_multisegment(GroupType g, const Multisegment& m) {
  auto p = parameter_of_multisegment(g, m);
  auto exps = parameter_exponents(p);
  std::sort(exps.begin(), exps.end(), [](HalfInt a, HalfInt b) { return a.twice > b.twice; });
  return build_vogan_variety(make_infinitesimal(g, exps));
}

VoganVariety gl_chain_variety(int n) {
  std::vector<HalfInt> exps;
  for (int i = 0; i < n; ++i) exps.push_back(HalfInt(n - 1 - 2 * i));
  return build_vogan_variety(make_infinitesimal(make_group(GroupKind::GL, n), exps));
}

std::vector<long long> sorted_dims(const std::vector<OrbitRecord>& orbits) {
  std::vector<long long> dims;
  for (const auto& rec : orbits) dims.push_back(rec.dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

std::map<long long, int> multiplicity_vector(const Multisegment& m) {
  std::map<long long, int> d;
  for (const auto& s : m.segments)
    for (long long e = s.start.twice; e <= s.end.twice; e += 2) ++d[e];
  return d;
}

}  // namespace

TEST_CASE("multisegment construction and parameter round trip") {
  CHECK_THROWS_AS(make_multisegment({sg(2, 0)}), input_error);
  CHECK_THROWS_AS(make_multisegment({sg(1, 2)}), input_error);

  auto m = make_multisegment({sg(0, 2), sg(-2, 2), sg(0, 0)});
  CHECK(m.segments == std::vector<Segment>{sg(-2, 2), sg(0, 0), sg(0, 2)});
  CHECK(m.segments[0].length() == 3);
  CHECK(m.segments[2].center() == HalfInt(1));

  auto gl = make_group(GroupKind::GL, 6);
  auto p = parameter_of_multisegment(gl, m);
  CHECK(multisegment_of_parameter(p) == m);
}

TEST_CASE("composite ranks count segment containments") {
  auto cases = std::vector<Multisegment>{
      make_multisegment({sg(-2, 0), sg(0, 2)}),
      make_multisegment({sg(-2, 2), sg(0, 0), sg(0, 2)}),
      make_multisegment({sg(-1, 1), sg(-1, 1)}),
      make_multisegment({sg(-3, 3), sg(-1, 1), sg(-1, -1)}),
      make_multisegment({sg(-1, 1), sg(1, 1), sg(-1, -1)}),
  };
  for (const auto& m : cases) {
    INFO("multisegment with " << m.segments.size() << " segments");
    GroupType g = make_group(GroupKind::GL, [&] {
      int n = 0;
      for (const auto& s : m.segments) n += s.length();
      return n;
    }());
    auto vv = variety_of_multisegment(g, m);
    auto pt = multisegment_to_point(g, m);
    auto tri = rank_invariants(vv, pt.N);
    for (const auto& piece : vv.graded.pieces)
      for (int ell = 0; ell < int(vv.graded.pieces.size()); ++ell) {
        INFO("e=" << piece.e.str() << " ell=" << ell);
        CHECK(tri.at(piece.e, ell) == containment_count(m, piece.e.twice, ell));
      }
    CHECK(triangle_to_multisegment(tri) == m);
  }
}

TEST_CASE("unrealizable rank patterns are rejected") {
  RankTriangle t;
  t.r[{0, 0}] = 1;
  t.r[{2, 0}] = 1;
  t.r[{0, 1}] = 2;  // more hops than vectors
  CHECK_THROWS_AS(triangle_to_multisegment(t), input_error);
}

TEST_CASE("orbit enumeration matches pinned counts and dimensions") {
  SECTION("three step grading: four orbits") {
    auto vv = gl_chain_variety(3);
    auto orbits = enumerate_orbits(vv);
    REQUIRE(orbits.size() == 4);
    CHECK(sorted_dims(orbits) == std::vector<long long>{0, 1, 1, 2});
    int opens = 0, closeds = 0;
    for (const auto& rec : orbits) {
      opens += rec.open;
      closeds += rec.closed;
      CHECK(rec.dim == vv.dim_H() - rec.commutant_dim);
    }
    CHECK(opens == 1);
    CHECK(closeds == 1);
  }

  SECTION("single exponent class: the variety is a point") {
    auto g = make_group(GroupKind::GL, 2);
    auto vv = build_vogan_variety(make_infinitesimal(g, {HalfInt(0), HalfInt(0)}));
    auto orbits = enumerate_orbits(vv);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].open);
    CHECK(orbits[0].closed);
    CHECK(orbits[0].dim == 0);
  }

  SECTION("four step grading: eight orbits, one per set of cuts") {
    auto orbits = enumerate_orbits(gl_chain_variety(4));
    CHECK(orbits.size() == 8);
  }

  SECTION("multiplicity two in the middle: five orbits") {
    auto g = make_group(GroupKind::GL, 4);
    auto vv = build_vogan_variety(
        make_infinitesimal(g, {HalfInt(2), HalfInt(0), HalfInt(0), HalfInt(-2)}));
    auto orbits = enumerate_orbits(vv);
    REQUIRE(orbits.size() == 5);
    CHECK(vv.dim_V() == 4);
    for (const auto& rec : orbits)
      if (rec.open) CHECK(rec.dim == 4);
  }

  SECTION("mixed cosets factor: two orbits") {
    // Exponents 1/2, 0, 0, -1/2: the integer block is rigid, the
    // half-integer block is a two step chain.
    auto g = make_group(GroupKind::GL, 4);
    auto vv = build_vogan_variety(
        make_infinitesimal(g, {HalfInt(1), HalfInt(0), HalfInt(0), HalfInt(-1)}));
    CHECK(vv.dim_V() == 1);
    CHECK(enumerate_orbits(vv).size() == 2);
  }

  SECTION("repeated ends cannot span exhausted middle levels: eight orbits") {
    // Multiplicities (2,1,1,2) on a four step chain: a second copy of the
    // full chain would need a second slot at the middle levels.
    auto g = make_group(GroupKind::GL, 6);
    auto vv = build_vogan_variety(make_infinitesimal(
        g, {HalfInt(0), HalfInt(0), HalfInt(-2), HalfInt(-4), HalfInt(-6), HalfInt(-6)}));
    auto orbits = enumerate_orbits(vv);
    REQUIRE(orbits.size() == 8);
    for (const auto& rec : orbits) {
      int total = 0;
      for (const auto& s : rec.m.segments) total += s.length();
      CHECK(total == 6);
    }
  }

  SECTION("classical groups are rejected") {
    auto pt = parameter_to_point(discrete_from_partition(make_group(GroupKind::SOodd, 7), {2, 4}));
    auto vv = build_vogan_variety(pt.lambda);
    CHECK_THROWS_AS(enumerate_orbits(vv), input_error);
    CHECK_THROWS_AS(multisegment_to_point(vv.lambda.group, make_multisegment({sg(0, 0)})),
                    input_error);
  }
}

TEST_CASE("closure order on the three step grading") {
  auto vv = gl_chain_variety(3);
  auto orbits = enumerate_orbits(vv);
  const OrbitRecord* zero = nullptr;
  const OrbitRecord* open = nullptr;
  std::vector<const OrbitRecord*> middle;
  for (const auto& rec : orbits) {
    if (rec.closed) zero = &rec;
    else if (rec.open) open = &rec;
    else middle.push_back(&rec);
  }
  REQUIRE(zero != nullptr);
  REQUIRE(open != nullptr);
  REQUIRE(middle.size() == 2);
  for (const auto& rec : orbits) {
    CHECK(closure_leq(zero->triangle, rec.triangle));
    CHECK(closure_leq(rec.triangle, open->triangle));
    CHECK(closure_leq(rec.triangle, rec.triangle));
  }
  CHECK_FALSE(closure_leq(middle[0]->triangle, middle[1]->triangle));
  CHECK_FALSE(closure_leq(middle[1]->triangle, middle[0]->triangle));
  CHECK_FALSE(closure_leq(open->triangle, zero->triangle));

  auto other = gl_chain_variety(4);
  auto other_orbits = enumerate_orbits(other);
  CHECK_THROWS_AS(closure_leq(zero->triangle, other_orbits[0].triangle), input_error);
}

TEST_CASE("duality involution on multisegments: pinned values") {
  // One length two segment splits into its endpoints and back.
  auto st = make_multisegment({sg(-1, 1)});
  auto split = make_multisegment({sg(-1, -1), sg(1, 1)});
  CHECK(mw_involution(st) == split);
  CHECK(mw_involution(split) == st);

  // Middle orbits of the three step grading swap with each other.
  CHECK(mw_involution(make_multisegment({sg(-2, 0), sg(2, 2)})) ==
        make_multisegment({sg(-2, -2), sg(0, 2)}));
  CHECK(mw_involution(make_multisegment({sg(0, 2), sg(-2, -2)})) ==
        make_multisegment({sg(2, 2), sg(-2, 0)}));

  // Full chain and the zero orbit exchange.
  CHECK(mw_involution(make_multisegment({sg(-3, 3)})) ==
        make_multisegment({sg(-3, -3), sg(-1, -1), sg(1, 1), sg(3, 3)}));

  // With a repeated exponent the staircase strips one layer at a time.
  CHECK(mw_involution(make_multisegment({sg(-2, -2), sg(0, 0), sg(0, 0), sg(2, 2)})) ==
        make_multisegment({sg(-2, 2), sg(0, 0)}));
}

TEST_CASE("duality involution properties over whole orbit sets") {
  auto gradings = std::vector<std::vector<HalfInt>>{
      {HalfInt(2), HalfInt(0), HalfInt(-2)},
      {HalfInt(3), HalfInt(1), HalfInt(-1), HalfInt(-3)},
      {HalfInt(2), HalfInt(0), HalfInt(0), HalfInt(-2)},
      {HalfInt(1), HalfInt(1), HalfInt(-1), HalfInt(-1)},
  };
  for (const auto& exps : gradings) {
    auto g = make_group(GroupKind::GL, int(exps.size()));
    auto vv = build_vogan_variety(make_infinitesimal(g, exps));
    for (const auto& rec : enumerate_orbits(vv)) {
      auto dual = mw_involution(rec.m);
      CHECK(mw_involution(dual) == rec.m);
      CHECK(multiplicity_vector(dual) == multiplicity_vector(rec.m));
    }
  }
}

TEST_CASE("sampled conormal duality agrees with the involution") {
  auto gradings = std::vector<std::vector<HalfInt>>{
      {HalfInt(2), HalfInt(0), HalfInt(-2)},
      {HalfInt(3), HalfInt(1), HalfInt(-1), HalfInt(-3)},
      {HalfInt(2), HalfInt(0), HalfInt(0), HalfInt(-2)},
  };
  for (const auto& exps : gradings) {
    auto g = make_group(GroupKind::GL, int(exps.size()));
    auto vv = build_vogan_variety(make_infinitesimal(g, exps));
    for (const auto& rec : enumerate_orbits(vv)) {
      auto dual = pyasetskii_dual(vv, rec.rep, /*seed=*/1);
      CHECK(dual.dual_side);
      CHECK(dual.m == mw_involution(rec.m));
      CHECK(dual.open == rec.closed);
      CHECK(dual.closed == rec.open);

      // Riding the fiber back recovers the original orbit.
      auto back = pyasetskii_dual(vv, dual.rep, /*seed=*/1, 32, /*from_dual_side=*/true);
      CHECK_FALSE(back.dual_side);
      CHECK(back.m == rec.m);
    }
  }
}

TEST_CASE("sampled duality is deterministic and seed independent here") {
  auto vv = gl_chain_variety(4);
  auto orbits = enumerate_orbits(vv);
  for (const auto& rec : orbits) {
    auto a = pyasetskii_dual(vv, rec.rep, 0);
    auto b = pyasetskii_dual(vv, rec.rep, 0);
    CHECK(a.triangle == b.triangle);
    CHECK(a.rep == b.rep);
    for (uint64_t seed : {uint64_t(1), uint64_t(7), uint64_t(42)}) {
      auto c = pyasetskii_dual(vv, rec.rep, seed);
      CHECK(c.triangle == a.triangle);
    }
  }
}

TEST_CASE("openness on pinned classical examples") {
  SECTION("odd orthogonal rank three, partition 2 + 4") {
    auto pt = parameter_to_point(discrete_from_partition(make_group(GroupKind::SOodd, 7), {2, 4}));
    auto vv = build_vogan_variety(pt.lambda);
    CHECK(vv.dim_V() == 5);
    CHECK(orbit_dimension(vv, pt.N) == 5);
    CHECK(is_open(vv, pt.N));

    Mat zero(vv.model.ambient, vv.model.ambient);
    CHECK(orbit_dimension(vv, zero) == 0);
    CHECK_FALSE(is_open(vv, zero));

    // Duality exchanges the open point with the zero orbit and back.
    auto dual_of_open = pyasetskii_dual(vv, pt.N, 0);
    CHECK(dual_of_open.closed);
    CHECK_FALSE(dual_of_open.open);
    auto dual_of_zero = pyasetskii_dual(vv, zero, 0);
    CHECK(dual_of_zero.open);
    CHECK_FALSE(dual_of_zero.closed);
    CHECK(dual_of_zero.dim == 5);
    CHECK(dual_of_zero.m == make_multisegment({sg(-3, 3), sg(-1, 1)}));
    for (uint64_t seed : {uint64_t(1), uint64_t(2), uint64_t(3)}) {
      auto again = pyasetskii_dual(vv, zero, seed);
      CHECK(again.triangle == dual_of_zero.triangle);
      CHECK(again.commutant_dim == dual_of_zero.commutant_dim);
    }
  }

  SECTION("symplectic rank seven, partition 7 + 5 + 3") {
    auto pt = parameter_to_point(
        discrete_from_partition(make_group(GroupKind::Sp, 14), {7, 5, 3}));
    auto vv = build_vogan_variety(pt.lambda);
    CHECK(vv.dim_V() == 17);
    CHECK(orbit_dimension(vv, pt.N) == 17);
    CHECK(is_open(vv, pt.N));
  }

  SECTION("odd orthogonal non discrete tempered parameter") {
    auto p = make_structured(make_group(GroupKind::SOodd, 9),
                             {Summand{HalfInt(0), 3}, Summand{HalfInt(0), 3},
                              Summand{HalfInt(0), 2}});
    auto pt = parameter_to_point(p);
    auto vv = build_vogan_variety(pt.lambda);
    CHECK(is_open(vv, pt.N));
  }
}

TEST_CASE("distinct classical orbits get distinct fingerprints") {
  auto pt = parameter_to_point(discrete_from_partition(make_group(GroupKind::SOodd, 7), {2, 4}));
  auto vv = build_vogan_variety(pt.lambda);
  auto base = make_orbit_record(vv, pt.N, false);
  auto zero = make_orbit_record(vv, Mat(vv.model.ambient, vv.model.ambient), false);
  CHECK(base.triangle != zero.triangle);
  CHECK(base.commutant_dim != zero.commutant_dim);
  CHECK(base.m != zero.m);
}

TEST_CASE("strong regularity of commuting pairs") {
  SECTION("square ladder pair is strongly regular") {
    auto psi = make_arthur(make_group(GroupKind::GL, 4), {Ladder{HalfInt(0), 2, 2}});
    auto pt = arthur_to_point(psi);
    REQUIRE(pt.y.has_value());
    auto vv = build_vogan_variety(pt.lambda);
    CHECK(is_strongly_regular(vv, pt.N, *pt.y));
  }

  SECTION("zero pair on a zero variety is strongly regular") {
    auto g = make_group(GroupKind::GL, 2);
    auto vv = build_vogan_variety(make_infinitesimal(g, {HalfInt(0), HalfInt(0)}));
    Mat zero(2, 2);
    CHECK(is_strongly_regular(vv, zero, zero));
  }

  SECTION("zero pair on a positive dimensional variety is not") {
    auto g = make_group(GroupKind::GL, 2);
    auto vv = build_vogan_variety(make_infinitesimal(g, {HalfInt(1), HalfInt(-1)}));
    Mat zero(2, 2);
    CHECK_FALSE(is_strongly_regular(vv, zero, zero));
  }

  SECTION("non commuting pairs are rejected") {
    auto g = make_group(GroupKind::GL, 2);
    auto vv = build_vogan_variety(make_infinitesimal(g, {HalfInt(1), HalfInt(-1)}));
    CHECK_THROWS_AS(is_strongly_regular(vv, Mat::unit(2, 0, 1), Mat::unit(2, 1, 0)), input_error);
  }
}
