// lfactor.hpp
// The adjoint local factor of a parameter point: Frobenius eigenvalues on
// the centralizer of N in the dual Lie algebra, graded by the semisimple
// part. The degree k piece of the centralizer contributes the factor
// (1 - q^{-k-s})^{-dim}; the pole order at s = 1 is the dimension in
// degree -1, which is also the conormal fiber dimension over N.
#pragma once

#include <string>
#include <vector>

#include "vogan/orbits.hpp"

namespace vogan {

struct AdjointExponent {
  long long twice_m = 0;  // doubled Frobenius exponent
  long long mult = 0;
  bool operator==(const AdjointExponent&) const = default;
};

struct AdjointLFactor {
  std::vector<AdjointExponent> exponents;  // ascending in twice_m, zero mults omitted
  long long pole_order_at_1 = 0;
  long long total_dim = 0;  // dimension of the full centralizer

  bool regular_at_1() const { return pole_order_at_1 == 0; }

  long long mult_at(long long twice_m) const {
    for (const auto& e : exponents)
      if (e.twice_m == twice_m) return e.mult;
    return 0;
  }

  // Product of factors (1 - q^{-m-s})^{-mult}, ascending in m.
  std::string display() const {
    if (exponents.empty()) return "1";
    std::string out;
    for (const auto& e : exponents) {
      if (!out.empty()) out += " ";
      std::string qexp = e.twice_m == 0 ? "" : HalfInt(-e.twice_m).str();
      out += "(1 - q^{" + qexp + "-s})^{-" + std::to_string(e.mult) + "}";
    }
    return out;
  }
};

inline AdjointLFactor adjoint_lfactor(const VoganVariety& vv, const Mat& N) {
  AdjointLFactor lf;
  for (const auto& [twice_deg, basis] : vv.ad_graded) {
    long long mult = static_cast<long long>(solve_commutant(basis, N).size());
    if (mult == 0) continue;
    lf.exponents.push_back(AdjointExponent{twice_deg, mult});
    lf.total_dim += mult;
  }
  lf.pole_order_at_1 = lf.mult_at(-2);

  long long fiber = static_cast<long long>(conormal_fiber(vv, N).size());
  VOGAN_REQUIRE(lf.pole_order_at_1 == fiber,
                "pole order at s = 1 must equal the conormal fiber dimension");
  return lf;
}

}  // namespace vogan
