// numeric.hpp
// Exact scalars: arbitrary-precision rationals and half-integers.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace vogan {

// Always reduced, denominator positive; mpq_class maintains both under
// arithmetic provided raw constructions are canonicalized.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Errors are ranked by CLI exit code: bad input (1), a verification sweep
// that found a counterexample (2), an internal invariant breach (3).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

#define VOGAN_REQUIRE(cond, msg) \
  do {                           \
    if (!(cond)) throw ::vogan::invariant_error(msg); \
  } while (0)

// Element of (1/2)Z stored as twice its value, so equality and ordering are
// exact and hashing is trivial.
struct HalfInt {
  long long twice = 0;

  HalfInt() = default;
  constexpr explicit HalfInt(long long t) : twice(t) {}
  static constexpr HalfInt whole(long long n) { return HalfInt(2 * n); }
  static constexpr HalfInt halves(long long t) { return HalfInt(t); }

  bool is_integer() const { return twice % 2 == 0; }
  long long floor() const {
    // floor(twice/2) with rounding toward minus infinity.
    return (twice >= 0) ? twice / 2 : -((-twice + 1) / 2);
  }
  Rational as_rational() const { return rat(twice, 2); }

  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice + b.twice); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice - b.twice); }
  friend HalfInt operator-(HalfInt a) { return HalfInt(-a.twice); }
  HalfInt plus_whole(long long n) const { return HalfInt(twice + 2 * n); }
  auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
  }
};

// Accepts "3", "-2", "3/2", "-1/2"; denominator must be 1 or 2.
inline HalfInt parse_half_int(const std::string& s) {
  auto bad = [&] { throw input_error("cannot parse half-integer: '" + s + "'"); };
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      size_t pos = 0;
      long long v = std::stoll(s, &pos);
      if (pos != s.size()) bad();
      return HalfInt::whole(v);
    }
    size_t pos = 0;
    long long num = std::stoll(s.substr(0, slash), &pos);
    if (pos != slash) bad();
    long long den = std::stoll(s.substr(slash + 1), &pos);
    if (pos != s.size() - slash - 1) bad();
    if (den == 1) return HalfInt::whole(num);
    if (den == 2) return HalfInt::halves(num);
    bad();
  } catch (const std::invalid_argument&) {
    bad();
  } catch (const std::out_of_range&) {
    bad();
  }
  return HalfInt();  // unreachable
}

}  // namespace vogan
