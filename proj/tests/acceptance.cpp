// acceptance.cpp
// End-to-end acceptance run: the two worked replays, the desk anchor, and
// the six verification suites at their full bounds. One line per criterion;
// nonzero exit if any fails or overruns its time budget.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "vogan/report.hpp"
#include "vogan/verify.hpp"

using namespace vogan;

namespace {

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

std::string twice_list(const std::vector<HalfInt>& exps) {
  std::string s = "(";
  for (size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + std::to_string(exps[i].twice);
  return s + ")";
}

bool expect(std::string& detail, bool cond, const std::string& what) {
  if (!cond) detail += (detail.empty() ? "" : "; ") + what;
  return cond;
}

// Row-by-column shapes of the raising maps between adjacent non-negative
// eigenvalue levels, top level first.
std::vector<std::array<int, 2>> positive_block_shapes(const std::vector<HalfInt>& exps) {
  std::map<long long, int, std::greater<>> mult;
  for (const auto& e : exps) ++mult[e.twice];
  std::vector<std::array<int, 2>> shapes;
  for (const auto& [t, count] : mult) {
    if (t < 0) continue;
    auto above = mult.find(t + 2);
    if (above != mult.end()) shapes.push_back({above->second, count});
  }
  return shapes;
}

bool odd_orthogonal_rank7_replay(std::string& detail) {
  Report rep = classify(parse_spec(R"({"group":{"kind":"SO_odd","n":7},"discrete_partition":[2,4]})"));
  bool ok = true;
  ok &= expect(detail, twice_list(rep.exponents) == "(3,1,1,-1,-1,-3)",
               "exponents " + twice_list(rep.exponents));
  std::vector<std::array<int, 2>> want_support = {{1, 2}, {2, 5}, {3, 4}, {5, 6}};
  ok &= expect(detail, rep.support == want_support,
               "support " + detail::support_str(rep.support));
  ok &= expect(detail, rep.open, "not open");
  ok &= expect(detail, rep.tempered && rep.discrete, "not tempered discrete");
  ok &= expect(detail, rep.lfactor.pole_order_at_1 == 0,
               "pole order " + std::to_string(rep.lfactor.pole_order_at_1));
  return ok;
}

bool symplectic_rank14_replay(std::string& detail) {
  Report rep = classify(parse_spec(R"({"group":{"kind":"Sp","n":14},"discrete_partition":[7,5,3]})"));
  bool ok = true;
  ok &= expect(detail, twice_list(rep.exponents) == "(6,4,4,2,2,2,0,0,0,-2,-2,-2,-4,-4,-6)",
               "exponents " + twice_list(rep.exponents));
  std::vector<std::array<int, 2>> want_shapes = {{1, 2}, {2, 3}, {3, 3}};
  ok &= expect(detail, positive_block_shapes(rep.exponents) == want_shapes, "block shapes differ");
  ok &= expect(detail, rep.open, "not open");
  ok &= expect(detail, rep.lfactor.pole_order_at_1 == 0,
               "pole order " + std::to_string(rep.lfactor.pole_order_at_1));
  return ok;
}

bool rank2_anchor(std::string& detail) {
  auto g = make_group(GroupKind::GL, 2);
  auto pt = parameter_to_point(make_structured(g, {Summand{HalfInt(0), 2}}));
  auto vv = build_vogan_variety(pt.lambda);
  auto lf = adjoint_lfactor(vv, pt.N);
  bool ok = true;
  ok &= expect(detail, lf.exponents.size() == 2 && lf.mult_at(0) == 1 && lf.mult_at(2) == 1,
               "exponent multiset is not {0, +1}");
  ok &= expect(detail, lf.display() == "(1 - q^{-s})^{-1} (1 - q^{-1-s})^{-1}",
               "display " + lf.display());
  ok &= expect(detail, lf.regular_at_1(), "not regular at s = 1");
  auto zero = adjoint_lfactor(vv, Mat(pt.N.rows(), pt.N.cols()));
  ok &= expect(detail, zero.pole_order_at_1 == 1,
               "zero point pole order " + std::to_string(zero.pole_order_at_1));
  return ok;
}

bool run_suite_criterion(const std::string& name, std::string& detail) {
  VerifySummary s = run_suite(name, Bounds{}, 0, worker_count());
  if (!s.ok()) {
    size_t shown = std::min<size_t>(3, s.failures.size());
    for (size_t i = 0; i < shown; ++i) detail += (i ? "; " : "") + s.failures[i];
    if (s.failures.size() > shown)
      detail += "; and " + std::to_string(s.failures.size() - shown) + " more";
    return false;
  }
  detail = std::to_string(s.instances) + " instances, " + std::to_string(s.checks) + " checks";
  return true;
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"odd orthogonal rank 7 replay", 1.0, odd_orthogonal_rank7_replay},
      {"symplectic rank 14 replay", 1.0, symplectic_rank14_replay},
      {"fiber-dimension suite", 300.0,
       [](std::string& d) { return run_suite_criterion("fiber-dimension", d); }},
      {"open-equals-regular suite", 300.0,
       [](std::string& d) { return run_suite_criterion("open-equals-regular", d); }},
      {"duality-involution suite", 300.0,
       [](std::string& d) { return run_suite_criterion("duality-involution", d); }},
      {"tempered-iff-open-and-arthur suite", 120.0,
       [](std::string& d) { return run_suite_criterion("tempered-iff-open-and-arthur", d); }},
      {"discrete-implies-open suite", 60.0,
       [](std::string& d) { return run_suite_criterion("discrete-implies-open", d); }},
      {"rank 2 adjoint factor anchor", 1.0, rank2_anchor},
      {"tempered-union-open suite", 60.0,
       [](std::string& d) { return run_suite_criterion("tempered-union-open", d); }},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail += (detail.empty() ? "" : "; ") + std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over budget of ") +
                std::to_string(c.budget_seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2f s", seconds);
    std::cout << "[" << (i + 1) << "] " << (ok ? "PASS" : "FAIL") << "  " << c.name << "  ("
              << timing << (detail.empty() ? "" : "; " + detail) << ")\n";
    if (!ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
