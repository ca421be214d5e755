#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aacbr/aacbr.hpp"
#include "aacbr/caacbr.hpp"
#include "aacbr/dot.hpp"
#include "aacbr/errors.hpp"
#include "aacbr/factors.hpp"
#include "aacbr/io.hpp"
#include "aacbr/nonmono.hpp"

namespace {

using namespace aacbr;

constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string casebase;
  std::string new_case;
  bool new_given = false;
  std::string engine = "aacbr";
  std::string dot;
  bool trace = false;
  std::string atoms;
  std::size_t max_cases = 0;
  bool coherent_only = false;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool expect_clean = false;
  std::string out;
  std::string audit;
  std::string json;
  std::vector<std::string> properties;
  std::size_t samples = 0;
  std::string factors;
};

EngineKind engine_kind(const Options& o) {
  const auto k = parse_engine(o.engine);
  if (!k) throw ParseError("unknown engine '" + o.engine + "' (expected aacbr or caacbr)");
  return *k;
}

/// The framework a prediction is read from, with the new case attached when given.
MinedFramework framework_for(const Options& o, const Casebase& D,
                             const std::optional<Characterisation>& n) {
  if (engine_kind(o) == EngineKind::AACBR) return mine(D, n);
  auto base = build(D).framework;
  return n ? with_new_case(std::move(base), *n) : base;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    io::write_file(path, content);
}

std::string render_set(const MinedFramework& mf, const std::vector<std::size_t>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += mf.describe(mf.framework.argument(set[i]));
  }
  return out + "}";
}

int run_predict(const Options& o) {
  const Casebase D = io::load_casebase(o.casebase);
  const Characterisation n = parse_atom_list(o.new_case);
  const MinedFramework mf = framework_for(o, D, n);
  const GroundedResult g = grounded(mf.framework);
  std::cout << D.labels()(outcome_of(g)) << "\n";
  if (o.trace) {
    for (std::size_t i = 0; i < g.trace.size(); ++i)
      std::cout << "G" << i << " = " << render_set(mf, g.trace[i]) << "\n";
    for (std::size_t i = 0; i < mf.framework.size(); ++i) {
      const char* label = g.labels[i] == Label::In ? "IN" : g.labels[i] == Label::Out ? "OUT" : "UNDEC";
      std::cout << "  " << label << " " << mf.describe(mf.framework.argument(i)) << "\n";
    }
  }
  if (!o.dot.empty()) emit(o.dot, to_dot(mf, g));
  return 0;
}

int run_build(const Options& o) {
  const Casebase D = io::load_casebase(o.casebase);
  const ConciseBuild b = build(D);
  emit(o.out, io::to_json(b.selected).dump(2) + "\n");
  if (!o.audit.empty()) emit(o.audit, io::audit_json(b).dump(2) + "\n");
  if (!o.dot.empty()) emit(o.dot, to_dot(b.framework));
  std::cerr << "selected " << b.selected.size() << " of " << D.size() << " cases\n";
  return 0;
}

int run_export_dot(const Options& o) {
  const Casebase D = io::load_casebase(o.casebase);
  std::optional<Characterisation> n;
  if (o.new_given) n = parse_atom_list(o.new_case);
  emit(o.dot, to_dot(framework_for(o, D, n)));
  return 0;
}

int run_check(const Options& o) {
  const Engine<> engine{engine_kind(o)};
  const std::vector<std::string> atoms = parse_atom_list(o.atoms).atoms();
  std::vector<Property> properties;
  for (const auto& name : o.properties) {
    const auto p = parse_property(name);
    if (!p) throw ParseError("unknown property '" + name + "'");
    properties.push_back(*p);
  }
  if (properties.empty()) properties.assign(kAllProperties.begin(), kAllProperties.end());

  bool clean = true;
  io::json out = io::json::array();
  for (Property p : properties) {
    if (o.samples > 0) {
      SearchOptions so;
      so.seed = o.seed;
      so.max_cases = o.max_cases ? o.max_cases : 8;
      so.coherent_only = o.coherent_only;
      const auto w = search_counterexample(engine, p, atoms, o.samples, so);
      std::cout << property_name(p) << ": " << (w ? "counterexample found" : "no counterexample")
                << " in " << o.samples << " samples (seed " << o.seed << ")\n";
      if (w) {
        clean = false;
        std::cout << "  casebase " << io::to_json(w->casebase).dump() << "\n";
        if (w->added) std::cout << "  added " << w->added->str(w->casebase.labels()) << "\n";
        std::cout << "  conclusion " << w->conclusion.str(w->casebase.labels()) << "\n";
      }
      out.push_back({{"property", std::string(property_name(p))},
                     {"engine", std::string(engine_name(engine.kind))},
                     {"samples", o.samples},
                     {"seed", o.seed},
                     {"witness", w ? io::to_json(*w) : io::json(nullptr)}});
      continue;
    }
    CheckOptions co;
    co.max_cases = o.max_cases;
    co.coherent_only = o.coherent_only;
    co.jobs = o.jobs;
    const PropertyReport r = check_property(engine, p, atoms, co);
    clean = clean && r.clean();
    std::cout << property_name(p) << ": " << (r.clean() ? "holds" : "fails") << " ("
              << r.casebases_examined << " casebases over " << r.universe << ", " << r.checks
              << " checks, " << r.violation_count << " violations)\n";
    if (!r.clean()) {
      const auto& w = r.violations.front();
      std::cout << "  first witness: casebase " << io::to_json(w.casebase).dump() << "\n";
      if (w.added) std::cout << "  added " << w.added->str(w.casebase.labels()) << "\n";
      std::cout << "  conclusion " << w.conclusion.str(w.casebase.labels()) << "\n";
    }
    out.push_back(io::to_json(r));
  }
  if (!o.json.empty()) emit(o.json, out.dump(2) + "\n");
  return (o.expect_clean && !clean) ? kExitViolations : 0;
}

int run_case_study(const Options& o) {
  using factors::fixture;
  const auto P = Outcome::NonDefault;
  Casebase F = fixture();
  if (!o.factors.empty()) {
    const auto expanded = factors::expand_casebase(io::load_factor_cases(o.factors));
    for (const auto& w : expanded.warnings) std::cerr << "warning: " << w << "\n";
    F = expanded.casebase;
    std::cout << "expanded " << F.size() << " cases from " << o.factors << "\n";
  }
  const auto n1 = factors::fixture_n1();
  const auto n2 = factors::fixture_n2();
  const auto& L = F.labels();
  const Case added{"N1", n1, P};
  const Casebase F1 = F.with(added);
  std::cout << "N1 = " << n1.str() << "\n";
  std::cout << "N2 = " << n2.str() << "\n";
  std::cout << "predict(D, N1) = " << L(predict(F, n1)) << "\n";
  std::cout << "predict(D, N2) = " << L(predict(F, n2)) << "\n";
  std::cout << "predict(D + (N1," << L(P) << "), N2) = " << L(predict(F1, n2)) << "\n";
  std::cout << "predict_c(D + (N1," << L(P) << "), N2) = " << L(predict_c(F1, n2)) << "\n";
  std::cout << "(N1," << L(P) << ") includable w.r.t. D: "
            << (is_includable(added, F) ? "yes" : "no") << "\n";
  if (!o.dot.empty()) emit(o.dot, to_dot(mine(F, n1)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argumentation-based case-based reasoning"};
  app.require_subcommand(1, 1);
  Options o;

  auto engine_opt = [&](CLI::App* sub) {
    sub->add_option("--engine", o.engine, "aacbr or caacbr")->capture_default_str();
  };

  auto* predict = app.add_subcommand("predict", "Predict the outcome of a new case");
  predict->add_option("--casebase", o.casebase, "Casebase JSON")->required();
  predict->add_option("--new", o.new_case, "Comma-separated atoms of the new case")->required();
  engine_opt(predict);
  predict->add_flag("--trace", o.trace, "Print the grounded construction");
  predict->add_option("--dot", o.dot, "Write the framework as DOT");

  auto* build_cmd = app.add_subcommand("build", "Select the cumulative casebase");
  build_cmd->add_option("--casebase", o.casebase, "Casebase JSON")->required();
  build_cmd->add_option("--out", o.out, "Selected casebase JSON (default stdout)");
  build_cmd->add_option("--audit", o.audit, "Audit JSON");
  build_cmd->add_option("--dot", o.dot, "Framework DOT");

  auto* check = app.add_subcommand("check", "Check non-monotonicity properties");
  engine_opt(check);
  check->add_option("--property", o.properties, "Property name (repeatable; default all)");
  check->add_option("--atoms", o.atoms, "Comma-separated atom universe")->required();
  check->add_option("--max-cases", o.max_cases, "Largest casebase enumerated (0 = no bound)");
  check->add_flag("--coherent-only", o.coherent_only, "Skip incoherent casebases");
  check->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_option("--samples", o.samples, "Random search with this many casebases");
  check->add_option("--seed", o.seed, "Seed for random search");
  check->add_option("--json", o.json, "Write the report as JSON");
  check->add_flag("--expect-clean", o.expect_clean, "Exit 1 if any violation is found");

  auto* dot = app.add_subcommand("export-dot", "Write the mined framework as DOT");
  dot->add_option("--casebase", o.casebase, "Casebase JSON")->required();
  auto* dot_new = dot->add_option("--new", o.new_case, "Comma-separated atoms of a new case");
  engine_opt(dot);
  dot->add_option("--dot", o.dot, "Output path (default stdout)");

  auto* study = app.add_subcommand("case-study", "Run the Trade Secrets fixture");
  study->add_option("--factors", o.factors, "Factor casebase JSON to use instead of the fixture");
  study->add_option("--dot", o.dot, "Write the framework with N1 as DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  o.new_given = dot_new->count() > 0;

  try {
    if (predict->parsed()) return run_predict(o);
    if (build_cmd->parsed()) return run_build(o);
    if (check->parsed()) return run_check(o);
    if (dot->parsed()) return run_export_dot(o);
    if (study->parsed()) return run_case_study(o);
  } catch (const aacbr::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
