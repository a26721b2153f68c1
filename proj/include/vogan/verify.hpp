// verify.hpp
// Exhaustive desk-scale verification suites for the theorems the library
// encodes. Each suite enumerates a bounded family of instances, fans them
// across a worker pool, and reports per-instance failures with enough
// detail to reproduce. Output is canonicalized so parallelism never
// changes bytes.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "vogan/lfactor.hpp"
#include "vogan/orbits.hpp"

namespace vogan {

struct Bounds {
  int gl_n = 6;        // max dual rank for general linear sweeps
  int spread = 5;      // max exponent spread for general linear sweeps
  int dimv = 12;       // max dim V admitted in the duality suite
  int classical = 15;  // max dual rank for classical partition sweeps
  int arthur = 8;      // max total a*b for Arthur data sweeps
  int union_n = 8;     // max combined dual rank for union instances
  int seeds = 8;       // seed count for sampling stability checks
};

inline Bounds parse_bounds(const std::vector<std::string>& overrides) {
  Bounds b;
  for (const auto& item : overrides) {
    size_t start = 0;
    while (start <= item.size()) {
      size_t comma = item.find(',', start);
      std::string kv = item.substr(start, comma == std::string::npos ? comma : comma - start);
      start = comma == std::string::npos ? item.size() + 1 : comma + 1;
      if (kv.empty()) continue;
      size_t eq = kv.find('=');
      if (eq == std::string::npos) throw input_error("bounds override \"" + kv + "\" is not key=value");
      std::string key = kv.substr(0, eq);
      int value;
      try {
        value = std::stoi(kv.substr(eq + 1));
      } catch (const std::exception&) {
        throw input_error("bounds override \"" + kv + "\" has a non-integer value");
      }
      if (key == "gl_n") b.gl_n = value;
      else if (key == "spread") b.spread = value;
      else if (key == "dimv") b.dimv = value;
      else if (key == "classical") b.classical = value;
      else if (key == "arthur") b.arthur = value;
      else if (key == "union_n") b.union_n = value;
      else if (key == "seeds") b.seeds = value;
      else throw input_error("unknown bounds key \"" + key + "\"");
    }
  }
  return b;
}

struct VerifySummary {
  std::string suite;
  long long instances = 0;
  long long checks = 0;
  std::vector<std::string> failures;  // canonical order
  bool ok() const { return failures.empty(); }

  std::string str() const {
    std::string out;
    out += "suite: " + suite + "\n";
    out += "instances: " + std::to_string(instances) + "\n";
    out += "checks: " + std::to_string(checks) + "\n";
    out += "failures: " + std::to_string(failures.size()) + "\n";
    for (const auto& f : failures) out += "  " + f + "\n";
    out += ok() ? "PASS\n" : "FAIL\n";
    return out;
  }
};

namespace detail {

// One unit of suite work: runs checks, counts them, reports failures.
struct Task {
  std::string label;
  std::function<void(long long& checks, std::vector<std::string>& failures)> run;
};

inline VerifySummary run_tasks(const std::string& suite, std::vector<Task> tasks, int jobs) {
  VerifySummary summary;
  summary.suite = suite;
  summary.instances = static_cast<long long>(tasks.size());
  if (jobs < 1) jobs = 1;

  struct Slot {
    long long checks = 0;
    std::vector<std::string> failures;
  };
  std::vector<Slot> slots(tasks.size());
  std::atomic<size_t> next{0};
  std::mutex first_error_mu;
  std::exception_ptr first_error;

  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        tasks[i].run(slots[i].checks, slots[i].failures);
      } catch (const std::exception& e) {
        slots[i].failures.push_back(tasks[i].label + ": exception: " + e.what());
      } catch (...) {
        std::lock_guard<std::mutex> lock(first_error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (jobs == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, int(tasks.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  for (size_t i = 0; i < slots.size(); ++i) {
    summary.checks += slots[i].checks;
    for (const auto& f : slots[i].failures)
      summary.failures.push_back(tasks[i].label + ": " + f);
  }
  return summary;
}

inline void expect(long long& checks, std::vector<std::string>& failures, bool cond,
                   const std::string& message) {
  ++checks;
  if (!cond) failures.push_back(message);
}

// --- instance generators -------------------------------------------------

// All dominant integer exponent multisets of size 1..max_n with maximum 0
// and spread at most `spread`, one representative per translation class.
inline std::vector<std::vector<HalfInt>> gl_lambda_family(int max_n, int spread) {
  std::vector<std::vector<HalfInt>> out;
  std::vector<long long> current;  // exponent drops below the maximum, non-decreasing
  std::function<void(int)> gen = [&](int n) {
    if (int(current.size()) == n) {
      if (current.front() == 0) {
        std::vector<HalfInt> exps;
        for (long long v : current) exps.push_back(HalfInt(-2 * v));
        out.push_back(std::move(exps));
      }
      return;
    }
    long long lo = current.empty() ? 0 : current.back();
    for (long long v = lo; v <= spread; ++v) {
      current.push_back(v);
      gen(n);
      current.pop_back();
    }
  };
  for (int n = 1; n <= max_n; ++n) {
    current.clear();
    gen(n);
  }
  return out;
}

inline std::string lambda_label(const std::vector<HalfInt>& exps) {
  std::string s = "lambda=(";
  for (size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + exps[i].str();
  return s + ")";
}

inline std::string partition_label(const std::vector<int>& parts) {
  std::string s = "{";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "}";
}

inline std::vector<std::vector<int>> partitions_of(int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(total, total);
  return out;
}

// Tempered multisets for a classical dual form: parts of the wrong-parity
// class must appear an even number of times.
inline bool form_admissible(const std::vector<int>& parts, bool dual_symplectic) {
  std::map<int, int> counts;
  for (int part : parts) ++counts[part];
  for (const auto& [part, count] : counts) {
    bool self_dual_ok = dual_symplectic ? (part % 2 == 0) : (part % 2 == 1);
    if (!self_dual_ok && count % 2 != 0) return false;
  }
  return true;
}

inline std::vector<std::vector<int>> tempered_partitions(int total, bool dual_symplectic) {
  std::vector<std::vector<int>> out;
  for (auto& p : partitions_of(total))
    if (form_admissible(p, dual_symplectic)) out.push_back(std::move(p));
  return out;
}

inline std::vector<std::vector<int>> discrete_partitions(int total, bool even_parts) {
  std::vector<std::vector<int>> out;
  for (auto& p : partitions_of(total)) {
    bool good = true;
    for (size_t i = 0; i < p.size() && good; ++i) {
      if ((p[i] % 2 == 0) != even_parts) good = false;
      if (i + 1 < p.size() && p[i] == p[i + 1]) good = false;
    }
    if (good) out.push_back(std::move(p));
  }
  return out;
}

// Classical groups with dual rank `total` and the given form.
inline std::optional<GroupType> classical_group_for(int total, bool dual_symplectic) {
  if (dual_symplectic) {
    if (total % 2 != 0) return std::nullopt;
    return make_group(GroupKind::SOodd, total + 1);
  }
  if (total % 2 == 1) {
    if (total < 3) return std::nullopt;  // Sp(n) needs n >= 2
    return make_group(GroupKind::Sp, total - 1);
  }
  return make_group(GroupKind::SOeven, total);
}

inline StructuredParameter tempered_parameter(GroupType g, const std::vector<int>& parts) {
  std::vector<Summand> summands;
  for (int part : parts) summands.push_back(Summand{HalfInt(0), part});
  return make_structured(g, std::move(summands));
}

// All multisets of ladder shapes (a, b) with total a*b between 1 and the
// budget; canonical non-increasing order over an enumerated shape list.
inline std::vector<std::vector<Ladder>> arthur_shape_family(int budget) {
  std::vector<std::pair<int, int>> shapes;
  for (int a = 1; a <= budget; ++a)
    for (int b = 1; a * b <= budget; ++b) shapes.emplace_back(a, b);
  std::vector<std::vector<Ladder>> out;
  std::vector<Ladder> current;
  std::function<void(size_t, int)> rec = [&](size_t idx, int remaining) {
    if (!current.empty()) out.push_back(current);
    for (size_t i = idx; i < shapes.size(); ++i) {
      auto [a, b] = shapes[i];
      if (a * b > remaining) continue;
      current.push_back(Ladder{HalfInt(0), a, b});
      rec(i, remaining - a * b);
      current.pop_back();
    }
  };
  rec(0, budget);
  return out;
}

inline std::string ladder_label(const std::vector<Ladder>& ladders) {
  std::string s = "psi=";
  for (const auto& l : ladders)
    s += "(" + l.center.str() + "," + std::to_string(l.a) + "," + std::to_string(l.b) + ")";
  return s;
}

}  // namespace detail

// --- suites ---------------------------------------------------------------

// For every orbit, the conormal fiber dimension is dim V minus the orbit
// dimension.
inline VerifySummary verify_fiber_dimension(const Bounds& b, int jobs) {
  std::vector<detail::Task> tasks;
  for (const auto& exps : detail::gl_lambda_family(b.gl_n, b.spread)) {
    tasks.push_back(detail::Task{
        detail::lambda_label(exps),
        [exps](long long& checks, std::vector<std::string>& failures) {
          auto g = make_group(GroupKind::GL, int(exps.size()));
          auto vv = build_vogan_variety(make_infinitesimal(g, exps));
          for (const auto& rec : enumerate_orbits(vv)) {
            long long fiber = static_cast<long long>(conormal_fiber(vv, rec.rep).size());
            detail::expect(checks, failures, fiber == vv.dim_V() - rec.dim,
                           "orbit " + rec.m.str() + ": fiber " + std::to_string(fiber) +
                               " != dimV - dim = " + std::to_string(vv.dim_V() - rec.dim));
          }
        }});
  }
  return detail::run_tasks("fiber-dimension", std::move(tasks), jobs);
}

// Openness is equivalent to regularity of the adjoint factor at s = 1, over
// every general linear orbit and every classical tempered or discrete point.
inline VerifySummary verify_open_equals_regular(const Bounds& b, int jobs) {
  std::vector<detail::Task> tasks;
  for (const auto& exps : detail::gl_lambda_family(b.gl_n, b.spread)) {
    tasks.push_back(detail::Task{
        "gl " + detail::lambda_label(exps),
        [exps](long long& checks, std::vector<std::string>& failures) {
          auto g = make_group(GroupKind::GL, int(exps.size()));
          auto vv = build_vogan_variety(make_infinitesimal(g, exps));
          for (const auto& rec : enumerate_orbits(vv)) {
            auto lf = adjoint_lfactor(vv, rec.rep);
            detail::expect(checks, failures, lf.regular_at_1() == rec.open,
                           "orbit " + rec.m.str() + ": regular=" +
                               (lf.regular_at_1() ? "true" : "false") +
                               " open=" + (rec.open ? "true" : "false"));
          }
        }});
  }
  for (int total = 1; total <= b.classical; ++total) {
    for (bool dual_symplectic : {true, false}) {
      auto group = detail::classical_group_for(total, dual_symplectic);
      if (!group) continue;
      for (const auto& parts : detail::tempered_partitions(total, dual_symplectic)) {
        tasks.push_back(detail::Task{
            group->str() + " " + detail::partition_label(parts),
            [group, parts](long long& checks, std::vector<std::string>& failures) {
              auto pt = parameter_to_point(detail::tempered_parameter(*group, parts));
              auto vv = build_vogan_variety(pt.lambda);
              bool open = is_open(vv, pt.N);
              auto lf = adjoint_lfactor(vv, pt.N);
              detail::expect(checks, failures, lf.regular_at_1() == open,
                             std::string("regular=") + (lf.regular_at_1() ? "true" : "false") +
                                 " open=" + (open ? "true" : "false"));
            }});
      }
    }
  }
  return detail::run_tasks("open-equals-regular", std::move(tasks), jobs);
}

// The sampled conormal duality is seed-stable, matches the combinatorial
// involution, exchanges open and closed, and squares to the identity.
inline VerifySummary verify_duality_involution(const Bounds& b, uint64_t seed_base, int jobs) {
  std::vector<detail::Task> tasks;
  for (const auto& exps : detail::gl_lambda_family(b.gl_n, b.spread)) {
    int dimv_cap = b.dimv;
    int seeds = b.seeds;
    tasks.push_back(detail::Task{
        detail::lambda_label(exps),
        [exps, dimv_cap, seeds, seed_base](long long& checks, std::vector<std::string>& failures) {
          auto g = make_group(GroupKind::GL, int(exps.size()));
          auto vv = build_vogan_variety(make_infinitesimal(g, exps));
          if (vv.dim_V() > dimv_cap) return;
          for (const auto& rec : enumerate_orbits(vv)) {
            auto expected = mw_involution(rec.m);
            detail::expect(checks, failures, mw_involution(expected) == rec.m,
                           "orbit " + rec.m.str() + ": involution does not square to identity");
            auto first = pyasetskii_dual(vv, rec.rep, seed_base);
            detail::expect(checks, failures, first.m == expected,
                           "orbit " + rec.m.str() + ": sampled dual " + first.m.str() +
                               " != involution " + expected.str());
            detail::expect(checks, failures,
                           first.open == rec.closed && first.closed == rec.open,
                           "orbit " + rec.m.str() + ": open/closed not exchanged");
            for (int s = 1; s < seeds; ++s) {
              auto again = pyasetskii_dual(vv, rec.rep, seed_base + uint64_t(s));
              detail::expect(checks, failures,
                             again.triangle == first.triangle && again.m == first.m,
                             "orbit " + rec.m.str() + ": seed " + std::to_string(s) +
                                 " changed the dual");
            }
            auto back = pyasetskii_dual(vv, first.rep, seed_base, 32, /*from_dual_side=*/true);
            detail::expect(checks, failures, back.m == rec.m,
                           "orbit " + rec.m.str() + ": double dual " + back.m.str() +
                               " != original");
          }
        }});
  }
  return detail::run_tasks("duality-involution", std::move(tasks), jobs);
}

// Temperedness is openness plus Arthur type; tempered pairs have vanishing
// lowering part and are strongly regular.
inline VerifySummary verify_tempered_iff_open_and_arthur(const Bounds& b, int jobs) {
  std::vector<detail::Task> tasks;

  // Arthur data sweeps: the parameter of every shape multiset must be of
  // Arthur type, and tempered exactly when every b is one.
  for (const auto& ladders : detail::arthur_shape_family(b.arthur)) {
    tasks.push_back(detail::Task{
        detail::ladder_label(ladders),
        [ladders](long long& checks, std::vector<std::string>& failures) {
          int total = 0;
          for (const auto& l : ladders) total += l.a * l.b;
          auto psi = make_arthur(make_group(GroupKind::GL, total), ladders);
          auto phi = phi_of_psi(psi);
          auto witness = is_arthur_type(phi);
          detail::expect(checks, failures, witness.has_value(),
                         "parameter of Arthur data not recognized as Arthur type");
          auto pt = arthur_to_point(psi);
          auto vv = build_vogan_variety(pt.lambda);
          bool tempered = is_tempered(phi);
          bool open = is_open(vv, pt.N);
          detail::expect(checks, failures, tempered == open,
                         std::string("tempered=") + (tempered ? "true" : "false") +
                             " open=" + (open ? "true" : "false"));
          if (tempered) {
            bool y_zero = !pt.y || pt.y->is_zero();
            detail::expect(checks, failures, y_zero, "tempered point has nonzero lowering part");
            detail::expect(checks, failures,
                           is_strongly_regular(vv, pt.N, pt.y ? *pt.y : Mat(pt.N.rows(), pt.N.cols())),
                           "tempered pair is not strongly regular");
          }
        }});
  }

  // General linear parameter sweeps: the full equivalence on every orbit.
  for (const auto& exps : detail::gl_lambda_family(b.gl_n, b.spread)) {
    tasks.push_back(detail::Task{
        "gl " + detail::lambda_label(exps),
        [exps](long long& checks, std::vector<std::string>& failures) {
          auto g = make_group(GroupKind::GL, int(exps.size()));
          auto vv = build_vogan_variety(make_infinitesimal(g, exps));
          for (const auto& rec : enumerate_orbits(vv)) {
            auto p = parameter_of_multisegment(g, rec.m);
            bool tempered = is_tempered(p);
            bool arthur = is_arthur_type(p).has_value();
            detail::expect(checks, failures, tempered == (rec.open && arthur),
                           "orbit " + rec.m.str() + ": tempered=" + (tempered ? "true" : "false") +
                               " open=" + (rec.open ? "true" : "false") +
                               " arthur=" + (arthur ? "true" : "false"));
          }
        }});
  }

  // Classical tempered points: open, of compatible Arthur type, strongly
  // regular with vanishing lowering part.
  for (int total = 1; total <= b.classical; ++total) {
    for (bool dual_symplectic : {true, false}) {
      auto group = detail::classical_group_for(total, dual_symplectic);
      if (!group) continue;
      for (const auto& parts : detail::tempered_partitions(total, dual_symplectic)) {
        tasks.push_back(detail::Task{
            group->str() + " " + detail::partition_label(parts),
            [group, parts](long long& checks, std::vector<std::string>& failures) {
              auto p = detail::tempered_parameter(*group, parts);
              auto pt = parameter_to_point(p);
              auto vv = build_vogan_variety(pt.lambda);
              detail::expect(checks, failures, is_open(vv, pt.N), "tempered point not open");
              auto witness = is_arthur_type(p);
              bool arthur = witness.has_value() && arthur_form_compatible(*witness);
              detail::expect(checks, failures, arthur, "tempered point not of Arthur type");
              Mat zero(pt.N.rows(), pt.N.cols());
              detail::expect(checks, failures, is_strongly_regular(vv, pt.N, zero),
                             "tempered pair is not strongly regular");
            }});
      }
    }
  }
  return detail::run_tasks("tempered-iff-open-and-arthur", std::move(tasks), jobs);
}

// Every discrete parameter point is open.
inline VerifySummary verify_discrete_implies_open(const Bounds& b, int jobs) {
  std::vector<detail::Task> tasks;
  auto add = [&tasks](GroupType g, std::vector<int> parts) {
    tasks.push_back(detail::Task{
        g.str() + " " + detail::partition_label(parts),
        [g, parts](long long& checks, std::vector<std::string>& failures) {
          auto p = discrete_from_partition(g, parts);
          detail::expect(checks, failures, is_discrete(p), "partition not recognized as discrete");
          auto pt = parameter_to_point(p);
          auto vv = build_vogan_variety(pt.lambda);
          detail::expect(checks, failures, is_open(vv, pt.N), "discrete point not open");
        }});
  };
  for (int total = 2; total <= b.classical - 1; total += 2)
    for (const auto& parts : detail::discrete_partitions(total, /*even_parts=*/true))
      add(make_group(GroupKind::SOodd, total + 1), parts);
  for (int total = 3; total <= b.classical; total += 2)
    for (const auto& parts : detail::discrete_partitions(total, /*even_parts=*/false))
      add(make_group(GroupKind::Sp, total - 1), parts);
  for (int total = 2; total <= b.classical - 1; total += 2)
    for (const auto& parts : detail::discrete_partitions(total, /*even_parts=*/false))
      add(make_group(GroupKind::SOeven, total), parts);
  for (int n = 1; n <= b.gl_n; ++n) add(make_group(GroupKind::GL, n), {n});
  return detail::run_tasks("discrete-implies-open", std::move(tasks), jobs);
}

// Unions of open tempered parameters stay open: general linear sums, same
// form classical sums, and classical sums with doubled general linear parts.
inline VerifySummary verify_tempered_union_open(const Bounds& b, int jobs) {
  std::vector<detail::Task> tasks;

  auto check_open = [](long long& checks, std::vector<std::string>& failures, GroupType g,
                       const std::vector<int>& parts, const std::string& what) {
    auto pt = parameter_to_point(detail::tempered_parameter(g, parts));
    auto vv = build_vogan_variety(pt.lambda);
    detail::expect(checks, failures, is_open(vv, pt.N), what + " not open");
  };

  // General linear unions.
  for (int n1 = 1; n1 <= b.union_n - 1; ++n1)
    for (int n2 = n1; n1 + n2 <= b.union_n; ++n2)
      for (const auto& p1 : detail::partitions_of(n1))
        for (const auto& p2 : detail::partitions_of(n2)) {
          tasks.push_back(detail::Task{
              "gl " + detail::partition_label(p1) + " + " + detail::partition_label(p2),
              [p1, p2, check_open](long long& checks, std::vector<std::string>& failures) {
                std::vector<int> joint = p1;
                joint.insert(joint.end(), p2.begin(), p2.end());
                int total = 0;
                for (int part : joint) total += part;
                check_open(checks, failures, make_group(GroupKind::GL, total), joint, "union");
              }});
        }

  // Same form classical unions (doubled general linear parts arise as the
  // admissible multisets with every part repeated).
  for (bool dual_symplectic : {true, false}) {
    for (int c1 = 1; c1 <= b.union_n - 1; ++c1) {
      auto g1 = detail::classical_group_for(c1, dual_symplectic);
      if (!g1) continue;
      for (int c2 = c1; c1 + c2 <= b.union_n; ++c2) {
        auto g2 = detail::classical_group_for(c2, dual_symplectic);
        auto gu = detail::classical_group_for(c1 + c2, dual_symplectic);
        if (!g2 || !gu) continue;
        for (const auto& p1 : detail::tempered_partitions(c1, dual_symplectic))
          for (const auto& p2 : detail::tempered_partitions(c2, dual_symplectic)) {
            tasks.push_back(detail::Task{
                g1->str() + " " + detail::partition_label(p1) + " + " + g2->str() + " " +
                    detail::partition_label(p2) + " -> " + gu->str(),
                [g1, g2, gu, p1, p2, check_open](long long& checks,
                                                 std::vector<std::string>& failures) {
                  check_open(checks, failures, *g1, p1, "first component");
                  check_open(checks, failures, *g2, p2, "second component");
                  std::vector<int> joint = p1;
                  joint.insert(joint.end(), p2.begin(), p2.end());
                  check_open(checks, failures, *gu, joint, "union");
                }});
          }
      }
    }
  }
  return detail::run_tasks("tempered-union-open", std::move(tasks), jobs);
}

inline VerifySummary run_suite(const std::string& name, const Bounds& b, uint64_t seed, int jobs) {
  if (name == "fiber-dimension") return verify_fiber_dimension(b, jobs);
  if (name == "open-equals-regular") return verify_open_equals_regular(b, jobs);
  if (name == "duality-involution") return verify_duality_involution(b, seed, jobs);
  if (name == "tempered-iff-open-and-arthur") return verify_tempered_iff_open_and_arthur(b, jobs);
  if (name == "discrete-implies-open") return verify_discrete_implies_open(b, jobs);
  if (name == "tempered-union-open") return verify_tempered_union_open(b, jobs);
  throw input_error(
      "unknown suite \"" + name +
      "\" (expected fiber-dimension, open-equals-regular, duality-involution, "
      "tempered-iff-open-and-arthur, discrete-implies-open or tempered-union-open)");
}

inline std::vector<std::string> all_suites() {
  return {"fiber-dimension",
          "open-equals-regular",
          "duality-involution",
          "tempered-iff-open-and-arthur",
          "discrete-implies-open",
          "tempered-union-open"};
}

}  // namespace vogan
