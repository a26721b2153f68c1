// report.hpp
// Job specifications (JSON in), the full classification pipeline, and
// deterministic report rendering (table or JSON out). Every classify call
// re-asserts the theorems the flags encode: open iff the adjoint factor is
// regular at s = 1, tempered implies open and Arthur type, discrete implies
// tempered. A violated assertion throws verification_error.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vogan/lfactor.hpp"
#include "vogan/orbits.hpp"

namespace vogan {

using ordered_json = nlohmann::ordered_json;

struct JobSpec {
  GroupType group = make_group(GroupKind::GL, 1);
  std::optional<std::vector<Summand>> segments;
  std::optional<std::vector<int>> discrete_partition;
  std::optional<std::vector<Ladder>> arthur;
  std::optional<std::vector<HalfInt>> raw_exponents;
  std::optional<Mat> point;
  uint64_t seed = 0;
};

namespace detail {

inline HalfInt half_int_from_json(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return HalfInt::whole(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_half_int(v.get<std::string>());
    } catch (const input_error& e) {
      throw input_error(where + ": " + e.what());
    }
  }
  throw input_error(where + ": expected an integer or a half-integer string like \"3/2\"");
}

inline Rational rational_from_json(const ordered_json& v, const std::string& where) {
  if (v.is_number_integer()) return rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      Rational r(v.get<std::string>());
      if (r.get_den() == 0) throw input_error(where + ": zero denominator");
      r.canonicalize();
      return r;
    } catch (const input_error&) {
      throw;
    } catch (const std::exception&) {
      throw input_error(where + ": expected an integer or a rational string like \"2/3\"");
    }
  }
  throw input_error(where + ": expected an integer or a rational string like \"2/3\"");
}

inline long long int_from_json(const ordered_json& v, const std::string& where) {
  if (!v.is_number_integer()) throw input_error(where + ": expected an integer");
  return v.get<long long>();
}

inline GroupType group_from_json(const ordered_json& v) {
  if (!v.is_object() || !v.contains("kind") || !v.contains("n"))
    throw input_error("spec.group: expected {\"kind\": ..., \"n\": ...}");
  if (!v["kind"].is_string()) throw input_error("spec.group.kind: expected a string");
  std::string kind = v["kind"].get<std::string>();
  long long n = int_from_json(v["n"], "spec.group.n");
  GroupKind k;
  if (kind == "GL") k = GroupKind::GL;
  else if (kind == "SO_odd") k = GroupKind::SOodd;
  else if (kind == "Sp") k = GroupKind::Sp;
  else if (kind == "SO_even") k = GroupKind::SOeven;
  else throw input_error("spec.group.kind: unknown kind \"" + kind +
                         "\" (expected GL, SO_odd, Sp or SO_even)");
  for (const auto& [key, value] : v.items()) {
    (void)value;
    if (key != "kind" && key != "n")
      throw input_error("spec.group: unknown field \"" + key + "\"");
  }
  return make_group(k, static_cast<int>(n));
}

inline std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL: return "GL";
    case GroupKind::SOodd: return "SO_odd";
    case GroupKind::Sp: return "Sp";
    case GroupKind::SOeven: return "SO_even";
  }
  return "?";
}

}  // namespace detail

inline JobSpec parse_spec(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw input_error("spec must be a JSON object");

  static const std::vector<std::string> known = {"group",  "segments", "discrete_partition",
                                                 "arthur", "raw_exponents", "point", "seed"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw input_error("spec: unknown field \"" + key + "\"");
  }
  if (!j.contains("group")) throw input_error("spec.group is required");

  JobSpec spec;
  spec.group = detail::group_from_json(j["group"]);

  if (j.contains("seed")) spec.seed = uint64_t(detail::int_from_json(j["seed"], "spec.seed"));

  int descriptions = 0;
  if (j.contains("segments")) {
    ++descriptions;
    const auto& arr = j["segments"];
    if (!arr.is_array() || arr.empty()) throw input_error("spec.segments: expected a non-empty array");
    std::vector<Summand> segs;
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string where = "spec.segments[" + std::to_string(i) + "]";
      const auto& s = arr[i];
      if (s.is_object()) {
        if (!s.contains("center") || !s.contains("length"))
          throw input_error(where + ": expected {\"center\": ..., \"length\": ...}");
        segs.push_back(Summand{detail::half_int_from_json(s["center"], where + ".center"),
                               int(detail::int_from_json(s["length"], where + ".length"))});
      } else if (s.is_array() && s.size() == 2) {
        segs.push_back(Summand{detail::half_int_from_json(s[0], where + "[0]"),
                               int(detail::int_from_json(s[1], where + "[1]"))});
      } else {
        throw input_error(where + ": expected an object or a [center, length] pair");
      }
    }
    make_structured(spec.group, segs);  // surface symmetry/total violations now
    spec.segments = std::move(segs);
  }
  if (j.contains("discrete_partition")) {
    ++descriptions;
    const auto& arr = j["discrete_partition"];
    if (!arr.is_array() || arr.empty())
      throw input_error("spec.discrete_partition: expected a non-empty array");
    std::vector<int> parts;
    for (size_t i = 0; i < arr.size(); ++i)
      parts.push_back(int(detail::int_from_json(
          arr[i], "spec.discrete_partition[" + std::to_string(i) + "]")));
    discrete_from_partition(spec.group, parts);  // surface parity/distinctness violations now
    spec.discrete_partition = std::move(parts);
  }
  if (j.contains("arthur")) {
    ++descriptions;
    const auto& arr = j["arthur"];
    if (!arr.is_array() || arr.empty()) throw input_error("spec.arthur: expected a non-empty array");
    std::vector<Ladder> ladders;
    for (size_t i = 0; i < arr.size(); ++i) {
      std::string where = "spec.arthur[" + std::to_string(i) + "]";
      const auto& s = arr[i];
      if (s.is_object()) {
        if (!s.contains("center") || !s.contains("a") || !s.contains("b"))
          throw input_error(where + ": expected {\"center\": ..., \"a\": ..., \"b\": ...}");
        ladders.push_back(Ladder{detail::half_int_from_json(s["center"], where + ".center"),
                                 int(detail::int_from_json(s["a"], where + ".a")),
                                 int(detail::int_from_json(s["b"], where + ".b"))});
      } else if (s.is_array() && s.size() == 3) {
        ladders.push_back(Ladder{detail::half_int_from_json(s[0], where + "[0]"),
                                 int(detail::int_from_json(s[1], where + "[1]")),
                                 int(detail::int_from_json(s[2], where + "[2]"))});
      } else {
        throw input_error(where + ": expected an object or a [center, a, b] triple");
      }
    }
    make_arthur(spec.group, ladders);  // surface closure/total violations now
    spec.arthur = std::move(ladders);
  }
  if (j.contains("raw_exponents") || j.contains("point")) {
    ++descriptions;
    if (!j.contains("raw_exponents") || !j.contains("point"))
      throw input_error("spec: raw_exponents and point must be given together");
    const auto& exps = j["raw_exponents"];
    if (!exps.is_array()) throw input_error("spec.raw_exponents: expected an array");
    std::vector<HalfInt> lambda;
    for (size_t i = 0; i < exps.size(); ++i)
      lambda.push_back(detail::half_int_from_json(
          exps[i], "spec.raw_exponents[" + std::to_string(i) + "]"));
    int n = int(lambda.size());
    const auto& rows = j["point"];
    if (!rows.is_array() || int(rows.size()) != n)
      throw input_error("spec.point: expected a " + std::to_string(n) + " by " +
                        std::to_string(n) + " array of rows");
    Mat x(n, n);
    for (int r = 0; r < n; ++r) {
      const auto& row = rows[size_t(r)];
      if (!row.is_array() || int(row.size()) != n)
        throw input_error("spec.point[" + std::to_string(r) + "]: expected a row of length " +
                          std::to_string(n));
      for (int c = 0; c < n; ++c)
        x.at(r, c) = detail::rational_from_json(
            row[size_t(c)], "spec.point[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    make_infinitesimal(spec.group, lambda);  // surface dominance/symmetry violations now
    spec.raw_exponents = std::move(lambda);
    spec.point = std::move(x);
  }

  if (descriptions != 1)
    throw input_error(
        "spec must contain exactly one of: segments, discrete_partition, arthur, "
        "raw_exponents + point");
  return spec;
}

struct CheckResult {
  std::string name;
  std::string statement;
  bool pass = false;
};

struct Report {
  GroupType group = make_group(GroupKind::GL, 1);
  std::vector<HalfInt> exponents;
  long long dim_V = 0;
  long long orbit_dim = 0;
  bool open = false, closed = false, tempered = false, arthur = false, discrete = false;
  std::optional<std::vector<Ladder>> arthur_witness;
  OrbitRecord dual;
  AdjointLFactor lfactor;
  std::vector<std::array<int, 2>> support;  // 1-based nonzero positions of the point
  bool has_y = false;
  std::vector<std::array<int, 2>> y_support;  // 1-based, only when has_y
  std::vector<CheckResult> checks;
};

namespace detail {

inline std::vector<std::array<int, 2>> one_based_support(const Mat& x) {
  std::vector<std::array<int, 2>> out;
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c)
      if (x.at(r, c) != 0) out.push_back({r + 1, c + 1});
  return out;
}

// Recover the structured parameter of a raw degree +1 point from its
// composite rank invariants.
inline StructuredParameter structured_of_point(const VoganVariety& vv, const Mat& x) {
  auto m = triangle_to_multisegment(rank_invariants(vv, x));
  return parameter_of_multisegment(vv.lambda.group, m);
}

inline void require_degree_one(const VoganVariety& vv, const Mat& x) {
  for (int r = 0; r < x.rows(); ++r)
    for (int c = 0; c < x.cols(); ++c)
      if (x.at(r, c) != 0 &&
          vv.exponent_at(r).twice != vv.exponent_at(c).twice + 2)
        throw input_error("point entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                          ") does not raise the exponent by one");
}

}  // namespace detail

inline Report classify(const JobSpec& spec) {
  Report rep;
  rep.group = spec.group;

  // Resolve the parameter description to a structured parameter and a point.
  StructuredParameter p = [&] {
    if (spec.segments) return make_structured(spec.group, *spec.segments);
    if (spec.discrete_partition) return discrete_from_partition(spec.group, *spec.discrete_partition);
    if (spec.arthur) return phi_of_psi(make_arthur(spec.group, *spec.arthur));
    // Raw point: a placeholder; replaced after the variety is built.
    return StructuredParameter{spec.group, {}};
  }();

  ParameterPoint pt = [&] {
    if (spec.arthur) return arthur_to_point(make_arthur(spec.group, *spec.arthur));
    if (spec.raw_exponents) {
      ParameterPoint raw{make_infinitesimal(spec.group, *spec.raw_exponents), *spec.point,
                         std::nullopt};
      return raw;
    }
    return parameter_to_point(p);
  }();

  auto vv = build_vogan_variety(pt.lambda);
  if (spec.raw_exponents) {
    if (!contains(vv.model, pt.N))
      throw input_error("point does not lie in the dual Lie algebra");
    detail::require_degree_one(vv, pt.N);
    p = detail::structured_of_point(vv, pt.N);
  }

  rep.exponents = pt.lambda.exponents;
  rep.dim_V = vv.dim_V();

  OrbitRecord rec = make_orbit_record(vv, pt.N, /*dual_side=*/false);
  VOGAN_REQUIRE(rec.m == multisegment_of_parameter(p),
                "point invariants disagree with the parameter's segments");
  rep.orbit_dim = rec.dim;
  rep.open = rec.open;
  rep.closed = rec.closed;
  rep.support = detail::one_based_support(pt.N);
  if (pt.y) {
    rep.has_y = true;
    rep.y_support = detail::one_based_support(*pt.y);
  }

  rep.tempered = is_tempered(p);
  auto witness = is_arthur_type(p);
  rep.arthur = witness.has_value() &&
               (spec.group.kind == GroupKind::GL || arthur_form_compatible(*witness));
  if (rep.arthur) rep.arthur_witness = witness->ladders;
  rep.discrete = is_discrete(p);

  rep.lfactor = adjoint_lfactor(vv, pt.N);
  rep.dual = pyasetskii_dual(vv, pt.N, spec.seed);

  // The theorems the report encodes, re-checked on every call.
  rep.checks.push_back(
      {"open-equals-regular",
       "the point lies in the open orbit if and only if the adjoint factor is regular at s = 1",
       rep.open == rep.lfactor.regular_at_1()});
  rep.checks.push_back({"pole-equals-fiber",
                        "the pole order at s = 1 equals the conormal fiber dimension",
                        rep.lfactor.pole_order_at_1 == rep.dim_V - rep.orbit_dim});
  rep.checks.push_back({"tempered-implies-open-and-arthur",
                        "a tempered parameter is open and of Arthur type",
                        !rep.tempered || (rep.open && rep.arthur)});
  rep.checks.push_back({"discrete-implies-tempered", "a discrete parameter is tempered",
                        !rep.discrete || rep.tempered});
  rep.checks.push_back({"dual-exchanges-open-closed",
                        "orbit duality exchanges the open and the closed orbit",
                        rep.dual.open == rep.closed && rep.dual.closed == rep.open});
  if (rep.has_y) {
    bool y_zero = !rep.has_y || rep.y_support.empty();
    bool sr = is_strongly_regular(vv, pt.N, *pt.y);
    rep.checks.push_back({"tempered-pairs-are-strongly-regular",
                          "a tempered pair has vanishing lowering part and is strongly regular",
                          !rep.tempered || (y_zero && sr)});
  }
  for (const auto& c : rep.checks)
    if (!c.pass) throw verification_error("theorem check failed: " + c.name);
  return rep;
}

// ---------------------------------------------------------------------------
// Rendering. Identical (spec, seed) inputs produce byte-identical output.

namespace detail {

inline std::string support_str(const std::vector<std::array<int, 2>>& support) {
  if (support.empty()) return "(none)";
  std::string out;
  for (const auto& rc : support) {
    if (!out.empty()) out += ",";
    out += "(" + std::to_string(rc[0]) + "," + std::to_string(rc[1]) + ")";
  }
  return out;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

inline std::string ladders_str(const std::vector<Ladder>& ladders) {
  std::string out;
  for (const auto& l : ladders) {
    if (!out.empty()) out += " ";
    out += "(" + l.center.str() + "," + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
  }
  return out;
}

}  // namespace detail

inline ordered_json report_to_json(const Report& rep) {
  ordered_json j;
  j["group"] = {{"kind", detail::group_kind_name(rep.group.kind)}, {"n", rep.group.n}};
  j["exponents"] = ordered_json::array();
  for (const auto& e : rep.exponents) j["exponents"].push_back(e.twice);
  j["dimV"] = rep.dim_V;
  j["orbit_dim"] = rep.orbit_dim;
  j["flags"] = {{"open", rep.open},
                {"closed", rep.closed},
                {"tempered", rep.tempered},
                {"arthur", rep.arthur},
                {"discrete", rep.discrete}};
  if (rep.arthur_witness) {
    j["arthur_witness"] = ordered_json::array();
    for (const auto& l : *rep.arthur_witness)
      j["arthur_witness"].push_back(
          {{"center", l.center.str()}, {"a", l.a}, {"b", l.b}});
  } else {
    j["arthur_witness"] = nullptr;
  }
  j["dual_invariant"] = {{"multisegment", ordered_json::array()},
                         {"dim", rep.dual.dim},
                         {"open", rep.dual.open},
                         {"closed", rep.dual.closed},
                         {"commutant_dim", rep.dual.commutant_dim}};
  for (const auto& s : rep.dual.m.segments)
    j["dual_invariant"]["multisegment"].push_back(s.str());
  j["adjoint_exponents"] = ordered_json::array();
  for (const auto& e : rep.lfactor.exponents)
    j["adjoint_exponents"].push_back({e.twice_m, e.mult});
  j["pole_order"] = rep.lfactor.pole_order_at_1;
  j["lfactor"] = rep.lfactor.display();
  j["support"] = ordered_json::array();
  for (const auto& rc : rep.support) j["support"].push_back({rc[0], rc[1]});
  j["checks"] = ordered_json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back({{"name", c.name}, {"statement", c.statement}, {"pass", c.pass}});
  return j;
}

inline std::string render_report(const Report& rep, const std::string& format) {
  if (format == "json") return report_to_json(rep).dump(2) + "\n";
  if (format != "table") throw input_error("unknown format \"" + format + "\" (table or json)");

  std::string out;
  out += "group: " + rep.group.str() + "\n";
  out += "lambda:";
  for (const auto& e : rep.exponents) out += " " + e.str();
  out += "\n";
  if (rep.dim_V == 0) out += "V = 0; orbit open = closed = true\n";
  out += "dim V: " + std::to_string(rep.dim_V) + "\n";
  out += "orbit dim: " + std::to_string(rep.orbit_dim) + "\n";
  out += "x_phi support: " + detail::support_str(rep.support) + "\n";
  if (rep.has_y) out += "y_psi support: " + detail::support_str(rep.y_support) + "\n";
  out += "flags: open=" + detail::bool_str(rep.open) + " closed=" + detail::bool_str(rep.closed) +
         " tempered=" + detail::bool_str(rep.tempered) + " arthur=" + detail::bool_str(rep.arthur) +
         " discrete=" + detail::bool_str(rep.discrete) + "\n";
  if (rep.arthur_witness)
    out += "arthur witness (center,a,b): " + detail::ladders_str(*rep.arthur_witness) + "\n";
  out += "dual orbit: multisegment " + rep.dual.m.str() + " dim " + std::to_string(rep.dual.dim) +
         (rep.dual.open ? " open" : rep.dual.closed ? " closed" : "") + "\n";
  out += "L-factor: " + rep.lfactor.display() + "\n";
  out += "pole order at s=1: " + std::to_string(rep.lfactor.pole_order_at_1) + "\n";
  out += "packet contains generic <=> open: " + detail::bool_str(rep.open) + "\n";
  out += "checks:";
  for (const auto& c : rep.checks) out += " " + c.name + "=" + (c.pass ? "pass" : "FAIL");
  out += "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Orbit tables (general linear only).

struct OrbitTable {
  std::vector<OrbitRecord> orbits;               // sorted by (dim, multisegment)
  std::vector<Multisegment> duals;               // combinatorial dual per orbit
  std::vector<std::array<int, 2>> hasse;         // covering pairs (lower, upper), 0-based
};

inline OrbitTable orbit_table(const VoganVariety& vv) {
  OrbitTable table;
  table.orbits = enumerate_orbits(vv);
  std::sort(table.orbits.begin(), table.orbits.end(), [](const OrbitRecord& a, const OrbitRecord& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.m.str() < b.m.str();
  });
  for (const auto& rec : table.orbits) table.duals.push_back(mw_involution(rec.m));

  int k = int(table.orbits.size());
  auto leq = [&](int i, int j) {
    return closure_leq(table.orbits[size_t(i)].triangle, table.orbits[size_t(j)].triangle);
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !leq(i, j) || leq(j, i)) continue;
      bool covering = true;
      for (int mid = 0; mid < k && covering; ++mid) {
        if (mid == i || mid == j) continue;
        if (leq(i, mid) && !leq(mid, i) && leq(mid, j) && !leq(j, mid)) covering = false;
      }
      if (covering) table.hasse.push_back({i, j});
    }
  return table;
}

inline std::string render_orbit_table(const VoganVariety& vv, const std::string& format) {
  OrbitTable table = orbit_table(vv);
  if (format == "json") {
    ordered_json j;
    j["group"] = {{"kind", detail::group_kind_name(vv.lambda.group.kind)},
                  {"n", vv.lambda.group.n}};
    j["exponents"] = ordered_json::array();
    for (const auto& e : vv.lambda.exponents) j["exponents"].push_back(e.twice);
    j["dimV"] = vv.dim_V();
    j["orbits"] = ordered_json::array();
    for (size_t i = 0; i < table.orbits.size(); ++i) {
      const auto& rec = table.orbits[i];
      ordered_json row;
      row["index"] = i;
      row["multisegment"] = ordered_json::array();
      for (const auto& s : rec.m.segments) row["multisegment"].push_back(s.str());
      row["dim"] = rec.dim;
      row["open"] = rec.open;
      row["closed"] = rec.closed;
      row["dual"] = ordered_json::array();
      for (const auto& s : table.duals[i].segments) row["dual"].push_back(s.str());
      j["orbits"].push_back(row);
    }
    j["hasse"] = ordered_json::array();
    for (const auto& e : table.hasse) j["hasse"].push_back({e[0], e[1]});
    return j.dump(2) + "\n";
  }
  if (format != "table") throw input_error("unknown format \"" + format + "\" (table or json)");

  std::string out;
  out += "group: " + vv.lambda.group.str() + "\n";
  out += "lambda:";
  for (const auto& e : vv.lambda.exponents) out += " " + e.str();
  out += "\n";
  out += "dim V: " + std::to_string(vv.dim_V()) + "\n";
  out += "orbits: " + std::to_string(table.orbits.size()) + "\n";
  for (size_t i = 0; i < table.orbits.size(); ++i) {
    const auto& rec = table.orbits[i];
    out += "  [" + std::to_string(i) + "] dim " + std::to_string(rec.dim) + " " + rec.m.str() +
           (rec.open ? " open" : "") + (rec.closed ? " closed" : "") +
           " dual " + table.duals[i].str() + "\n";
  }
  out += "closure (lower < upper):";
  if (table.hasse.empty()) out += " (none)";
  for (const auto& e : table.hasse)
    out += " " + std::to_string(e[0]) + "<" + std::to_string(e[1]);
  out += "\n";
  return out;
}

}  // namespace vogan
