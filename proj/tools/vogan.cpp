// vogan: classify parameters, enumerate orbits, compute duals and adjoint
// factors, and run the verification suites from the command line.
//
// Exit codes: 0 success, 1 input error, 2 verification failure,
// 3 internal invariant breach.
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vogan/report.hpp"
#include "vogan/verify.hpp"

namespace {

using namespace vogan;

std::string read_spec_text(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw input_error("cannot open spec file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

JobSpec load_spec(const std::string& path, const std::optional<uint64_t>& seed_flag) {
  JobSpec spec = parse_spec(read_spec_text(path));
  if (seed_flag) spec.seed = *seed_flag;
  return spec;
}

void require_format(const std::string& format) {
  if (format != "table" && format != "json")
    throw input_error("unknown format \"" + format + "\" (expected table or json)");
}

int effective_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

// The infinitesimal parameter a spec resolves to, matching classify's
// resolution order.
InfinitesimalParameter lambda_of_spec(const JobSpec& spec) {
  if (spec.raw_exponents) return make_infinitesimal(spec.group, *spec.raw_exponents);
  if (spec.arthur) return arthur_to_point(make_arthur(spec.group, *spec.arthur)).lambda;
  StructuredParameter p = spec.segments
                              ? make_structured(spec.group, *spec.segments)
                              : discrete_from_partition(spec.group, *spec.discrete_partition);
  return parameter_to_point(p).lambda;
}

// --- focused renderings ----------------------------------------------------

std::string orbit_line(const OrbitRecord& rec) {
  return rec.m.str() + " dim " + std::to_string(rec.dim) + " open=" +
         (rec.open ? "true" : "false") + " closed=" + (rec.closed ? "true" : "false");
}

ordered_json orbit_json(const OrbitRecord& rec) {
  ordered_json j;
  j["multisegment"] = rec.m.str();
  j["dim"] = rec.dim;
  j["open"] = rec.open;
  j["closed"] = rec.closed;
  j["commutant_dim"] = rec.commutant_dim;
  return j;
}

std::string render_dual(const Report& rep, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["group"] = {{"kind", detail::group_kind_name(rep.group.kind)}, {"n", rep.group.n}};
    ordered_json orbit;
    orbit["dim"] = rep.orbit_dim;
    orbit["open"] = rep.open;
    orbit["closed"] = rep.closed;
    j["orbit"] = orbit;
    j["dual"] = orbit_json(rep.dual);
    return j.dump(2) + "\n";
  }
  std::string out;
  out += "group: " + rep.group.str() + "\n";
  out += "orbit: dim " + std::to_string(rep.orbit_dim) + " open=" +
         (rep.open ? "true" : "false") + " closed=" + (rep.closed ? "true" : "false") + "\n";
  out += "dual orbit: " + orbit_line(rep.dual) + "\n";
  out += "dual commutant dim: " + std::to_string(rep.dual.commutant_dim) + "\n";
  return out;
}

std::string render_lfactor(const Report& rep, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["group"] = {{"kind", detail::group_kind_name(rep.group.kind)}, {"n", rep.group.n}};
    ordered_json exps = ordered_json::array();
    for (const auto& e : rep.lfactor.exponents)
      exps.push_back(ordered_json::array({e.twice_m, e.mult}));
    j["adjoint_exponents"] = exps;
    j["lfactor"] = rep.lfactor.display();
    j["pole_order"] = rep.lfactor.pole_order_at_1;
    j["regular_at_1"] = rep.lfactor.regular_at_1();
    return j.dump(2) + "\n";
  }
  std::string out;
  out += "group: " + rep.group.str() + "\n";
  out += "L(s, phi, Ad) = " + rep.lfactor.display() + "\n";
  std::string exps;
  for (const auto& e : rep.lfactor.exponents) {
    if (!exps.empty()) exps += " ";
    exps += HalfInt(e.twice_m).str() + "x" + std::to_string(e.mult);
  }
  out += "adjoint exponents (m x mult): " + (exps.empty() ? std::string("(none)") : exps) + "\n";
  out += "pole order at s=1: " + std::to_string(rep.lfactor.pole_order_at_1) + "\n";
  out += std::string("regular at s=1: ") + (rep.lfactor.regular_at_1() ? "true" : "false") + "\n";
  return out;
}

std::string render_verify(const VerifySummary& summary, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["suite"] = summary.suite;
    j["instances"] = summary.instances;
    j["checks"] = summary.checks;
    j["failures"] = summary.failures;
    j["ok"] = summary.ok();
    return j.dump(2) + "\n";
  }
  return summary.str();
}

// --- worked example replays -------------------------------------------------

struct ReplayCheck {
  std::string name;
  bool pass = false;
  std::string expected, got;
};

std::string twice_list(const std::vector<HalfInt>& exps) {
  std::string s = "(";
  for (size_t i = 0; i < exps.size(); ++i) s += (i ? "," : "") + std::to_string(exps[i].twice);
  return s + ")";
}

std::string shapes_str(const std::vector<std::array<int, 2>>& shapes) {
  std::string s;
  for (const auto& sh : shapes) {
    if (!s.empty()) s += " ";
    s += std::to_string(sh[0]) + "x" + std::to_string(sh[1]);
  }
  return s.empty() ? "(none)" : s;
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

int run_example(const std::string& which, const std::optional<uint64_t>& seed_flag,
                const std::string& format) {
  std::string spec_text;
  if (which == "so7") {
    spec_text = R"({"group":{"kind":"SO_odd","n":7},"discrete_partition":[2,4]})";
  } else if (which == "sp14") {
    spec_text = R"({"group":{"kind":"Sp","n":14},"discrete_partition":[7,5,3]})";
  } else {
    throw input_error("unknown example \"" + which + "\" (expected so7 or sp14)");
  }
  JobSpec spec = parse_spec(spec_text);
  if (seed_flag) spec.seed = *seed_flag;
  Report rep = classify(spec);

  std::vector<ReplayCheck> diffs;
  auto expect = [&diffs](const std::string& name, const std::string& expected,
                         const std::string& got) {
    diffs.push_back(ReplayCheck{name, expected == got, expected, got});
  };

  if (which == "so7") {
    std::vector<HalfInt> want_exps = {HalfInt(3),  HalfInt(1),  HalfInt(1),
                                      HalfInt(-1), HalfInt(-1), HalfInt(-3)};
    expect("dominant exponents", twice_list(want_exps), twice_list(rep.exponents));
    std::vector<std::array<int, 2>> want_support = {{1, 2}, {2, 5}, {3, 4}, {5, 6}};
    expect("x support", detail::support_str(want_support), detail::support_str(rep.support));
    expect("open", "true", rep.open ? "true" : "false");
    expect("tempered", "true", rep.tempered ? "true" : "false");
    expect("discrete", "true", rep.discrete ? "true" : "false");
    expect("pole order at s=1", "0", std::to_string(rep.lfactor.pole_order_at_1));
  } else {
    std::vector<HalfInt> want_exps;
    for (long long t : {6, 4, 4, 2, 2, 2, 0, 0, 0, -2, -2, -2, -4, -4, -6})
      want_exps.push_back(HalfInt(t));
    expect("dominant exponents", twice_list(want_exps), twice_list(rep.exponents));
    std::vector<std::array<int, 2>> want_shapes = {{1, 2}, {2, 3}, {3, 3}};
    expect("raising block shapes", shapes_str(want_shapes),
           shapes_str(positive_block_shapes(rep.exponents)));
    expect("open", "true", rep.open ? "true" : "false");
    expect("pole order at s=1", "0", std::to_string(rep.lfactor.pole_order_at_1));
  }

  bool pass = true;
  for (const auto& d : diffs) pass = pass && d.pass;

  std::cout << render_report(rep, format);
  if (format == "table") {
    std::cout << "replay expectations:\n";
    for (const auto& d : diffs) {
      std::cout << "  " << d.name << ": " << (d.pass ? "match" : "MISMATCH") << "\n";
      if (!d.pass) {
        std::cout << "    expected: " << d.expected << "\n";
        std::cout << "    got:      " << d.got << "\n";
      }
    }
    std::cout << "replay: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  if (!pass) {
    for (const auto& d : diffs)
      if (!d.pass)
        std::cerr << "replay mismatch in " << d.name << ": expected " << d.expected << ", got "
                  << d.got << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of unramified parameters via orbit geometry"};
  app.require_subcommand(1);

  std::string spec_path, format = "table", suite, example_name, bounds_text;
  uint64_t seed_value = 0;
  bool seed_given = false;
  int jobs = 0;

  auto add_common = [&](CLI::App* cmd, bool with_spec) {
    if (with_spec)
      cmd->add_option("spec", spec_path, "spec file (JSON); omit to read standard input");
    cmd->add_option("--format", format, "output format: table or json")->capture_default_str();
    cmd->add_option("--seed", seed_value, "sampling seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });
  };

  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a parameter and report");
  add_common(classify_cmd, true);
  CLI::App* orbits_cmd =
      app.add_subcommand("orbits", "list every orbit of the parameter's variety (general linear)");
  add_common(orbits_cmd, true);
  CLI::App* dual_cmd = app.add_subcommand("dual", "sample the conormal dual of the orbit");
  add_common(dual_cmd, true);
  CLI::App* lfactor_cmd = app.add_subcommand("lfactor", "adjoint factor of the parameter point");
  add_common(lfactor_cmd, true);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification suite");
  verify_cmd->add_option("suite", suite, "suite name")->required();
  verify_cmd->add_option("--bounds", bounds_text, "bounds overrides, e.g. gl_n=5,classical=12");
  verify_cmd->add_option("--jobs", jobs, "worker count (0 = hardware)")->capture_default_str();
  verify_cmd->add_option("--format", format, "output format: table or json")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed_value, "sampling seed")
      ->each([&seed_given](const std::string&) { seed_given = true; });

  CLI::App* example_cmd =
      app.add_subcommand("example", "replay a worked example and diff the expected data");
  example_cmd->add_option("which", example_name, "so7 or sp14")->required();
  example_cmd->add_option("--format", format, "output format: table or json")
      ->capture_default_str();
  example_cmd->add_option("--seed", seed_value, "sampling seed")
      ->each([&seed_given](const std::string&) { seed_given = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    require_format(format);
    std::optional<uint64_t> seed_flag;
    if (seed_given) seed_flag = seed_value;

    if (classify_cmd->parsed()) {
      JobSpec spec = load_spec(spec_path, seed_flag);
      std::cout << render_report(classify(spec), format);
      return 0;
    }
    if (orbits_cmd->parsed()) {
      JobSpec spec = load_spec(spec_path, seed_flag);
      auto vv = build_vogan_variety(lambda_of_spec(spec));
      std::cout << render_orbit_table(vv, format);
      return 0;
    }
    if (dual_cmd->parsed()) {
      JobSpec spec = load_spec(spec_path, seed_flag);
      std::cout << render_dual(classify(spec), format);
      return 0;
    }
    if (lfactor_cmd->parsed()) {
      JobSpec spec = load_spec(spec_path, seed_flag);
      std::cout << render_lfactor(classify(spec), format);
      return 0;
    }
    if (verify_cmd->parsed()) {
      Bounds bounds = parse_bounds(bounds_text.empty() ? std::vector<std::string>{}
                                                       : std::vector<std::string>{bounds_text});
      VerifySummary summary = run_suite(suite, bounds, seed_value, effective_jobs(jobs));
      std::cout << render_verify(summary, format);
      return summary.ok() ? 0 : 2;
    }
    if (example_cmd->parsed()) {
      std::optional<uint64_t> flag;
      if (seed_given) flag = seed_value;
      return run_example(example_name, flag, format);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
