// test_lfactor.cpp
// Adjoint local factors: pinned small cases, the graded sum property
// against the full centralizer, and the equivalence of regularity at
// s = 1 with orbit openness across whole orbit sets.
#include <catch2/catch_amalgamated.hpp>

#include "vogan/lfactor.hpp"

using namespace vogan;

namespace {

VoganVariety gl_variety(std::vector<long long> twice_exps) {
  std::vector<HalfInt> exps;
  for (long long t : twice_exps) exps.push_back(HalfInt(t));
  return build_vogan_variety(
      make_infinitesimal(make_group(GroupKind::GL, int(exps.size())), exps));
}

}  // namespace

TEST_CASE("adjoint factor of the one dimensional group") {
  auto vv = gl_variety({0});
  auto lf = adjoint_lfactor(vv, Mat(1, 1));
  CHECK(lf.exponents == std::vector<AdjointExponent>{{0, 1}});
  CHECK(lf.pole_order_at_1 == 0);
  CHECK(lf.regular_at_1());
  CHECK(lf.total_dim == 1);
  CHECK(lf.display() == "(1 - q^{-s})^{-1}");
}

TEST_CASE("adjoint factor of the two dimensional special cases") {
  SECTION("open orbit on exponents 1/2, -1/2") {
    auto vv = gl_variety({1, -1});
    auto lf = adjoint_lfactor(vv, Mat::unit(2, 0, 1));
    CHECK(lf.exponents == std::vector<AdjointExponent>{{0, 1}, {2, 1}});
    CHECK(lf.pole_order_at_1 == 0);
    CHECK(lf.regular_at_1());
    CHECK(lf.display() == "(1 - q^{-s})^{-1} (1 - q^{-1-s})^{-1}");
  }

  SECTION("zero orbit on exponents 1/2, -1/2 has a simple pole") {
    auto vv = gl_variety({1, -1});
    auto lf = adjoint_lfactor(vv, Mat(2, 2));
    CHECK(lf.exponents ==
          std::vector<AdjointExponent>{{-2, 1}, {0, 2}, {2, 1}});
    CHECK(lf.pole_order_at_1 == 1);
    CHECK_FALSE(lf.regular_at_1());
    CHECK(lf.display() ==
          "(1 - q^{1-s})^{-1} (1 - q^{-s})^{-2} (1 - q^{-1-s})^{-1}");
  }

  SECTION("equal exponents give a rigid point") {
    auto vv = gl_variety({0, 0});
    auto lf = adjoint_lfactor(vv, Mat(2, 2));
    CHECK(lf.exponents == std::vector<AdjointExponent>{{0, 4}});
    CHECK(lf.regular_at_1());
  }

  SECTION("exponents 1/2, 0 put weight at half integers") {
    auto vv = gl_variety({1, 0});
    auto lf = adjoint_lfactor(vv, Mat(2, 2));
    CHECK(lf.exponents ==
          std::vector<AdjointExponent>{{-1, 1}, {0, 2}, {1, 1}});
    CHECK(lf.pole_order_at_1 == 0);  // no weight at exponent -1
    CHECK(lf.display() ==
          "(1 - q^{1/2-s})^{-1} (1 - q^{-s})^{-2} (1 - q^{-1/2-s})^{-1}");
  }
}

TEST_CASE("graded centralizer dimensions sum to the full centralizer") {
  auto check_sum = [](const VoganVariety& vv, const Mat& N) {
    auto lf = adjoint_lfactor(vv, N);
    long long full = static_cast<long long>(solve_commutant(vv.model.basis, N).size());
    CHECK(lf.total_dim == full);
  };

  for (auto&& exps : {std::vector<long long>{2, 0, -2},
                      std::vector<long long>{3, 1, -1, -3},
                      std::vector<long long>{2, 0, 0, -2}}) {
    auto vv = gl_variety(exps);
    for (const auto& rec : enumerate_orbits(vv)) check_sum(vv, rec.rep);
  }

  auto pt = parameter_to_point(discrete_from_partition(make_group(GroupKind::SOodd, 7), {2, 4}));
  auto vv = build_vogan_variety(pt.lambda);
  check_sum(vv, pt.N);
  check_sum(vv, Mat(vv.model.ambient, vv.model.ambient));
}

TEST_CASE("regularity at s = 1 is openness, orbit by orbit") {
  for (auto&& exps : {std::vector<long long>{2, 0, -2},
                      std::vector<long long>{3, 1, -1, -3},
                      std::vector<long long>{2, 0, 0, -2},
                      std::vector<long long>{1, 1, -1, -1}}) {
    auto vv = gl_variety(exps);
    for (const auto& rec : enumerate_orbits(vv)) {
      auto lf = adjoint_lfactor(vv, rec.rep);
      CHECK(lf.regular_at_1() == rec.open);
      CHECK(lf.pole_order_at_1 == vv.dim_V() - rec.dim);
    }
  }
}

TEST_CASE("adjoint factor of the pinned odd orthogonal example") {
  auto pt = parameter_to_point(discrete_from_partition(make_group(GroupKind::SOodd, 7), {2, 4}));
  auto vv = build_vogan_variety(pt.lambda);
  auto lf = adjoint_lfactor(vv, pt.N);
  // The centralizer of a nilpotent of type (4, 2) in the rank three
  // symplectic algebra is five dimensional.
  CHECK(lf.total_dim == 5);
  CHECK(lf.regular_at_1());
  CHECK(lf.mult_at(0) == 0);  // discrete: no torus in the centralizer

  auto zero = adjoint_lfactor(vv, Mat(vv.model.ambient, vv.model.ambient));
  CHECK(zero.pole_order_at_1 == vv.dim_V());
  CHECK(zero.total_dim == 21);
}
