// mtopos: analyze the points, ideal lattice and topologies of a finite monoid.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtopos/analysis.hpp"
#include "mtopos/fixtures.hpp"
#include "mtopos/json_io.hpp"
#include "mtopos/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

mtopos::FiniteMonoid monoid_from_gen_spec(const std::vector<std::string>& spec) {
  using namespace mtopos;
  if (spec.empty()) fail(ErrorKind::ParseError, "empty --gen spec");
  const std::string& kind = spec[0];
  auto arg = [&](const char* what) -> std::string {
    if (spec.size() < 2) fail(ErrorKind::ParseError, std::string("gen ") + kind + " needs " + what);
    return spec[1];
  };
  if (kind == "t") {
    int n = std::stoi(arg("a degree"));
    if (n < 1 || n > 4) fail(ErrorKind::OrderTooLarge, "gen t n supports n <= 4");
    return fixture_full_transformation(n);
  }
  if (kind == "cyclic") return fixture_cyclic(std::stoi(arg("an order")));
  if (kind == "fixture") return fixture_by_name(arg("a name"));
  fail(ErrorKind::ParseError, "unknown gen kind: " + kind + " (use t | cyclic | fixture)");
}

int run(int argc, char** argv) {
  using namespace mtopos;
  CLI::App app{"points and localising subcategories of the topos of M-sets"};
  app.require_subcommand(1);

  // validate
  std::string validate_path;
  auto* cmd_validate = app.add_subcommand("validate", "check the monoid laws of a file");
  cmd_validate->add_option("path", validate_path, "monoid or transformation JSON")->required();

  // analyze
  std::string analyze_path, json_out, dot_lattice_out, dot_poset_out;
  std::vector<std::string> analyze_gen;
  auto* cmd_analyze = app.add_subcommand("analyze", "full points/lattice/topology report");
  cmd_analyze->add_option("path", analyze_path, "monoid or transformation JSON");
  cmd_analyze->add_option("--gen", analyze_gen, "generate instead of reading a file, e.g. t 3")
      ->expected(1, 2);
  cmd_analyze->add_option("--json", json_out, "write the full JSON report here");
  cmd_analyze->add_option("--dot-lattice", dot_lattice_out, "write a lattice Hasse diagram");
  cmd_analyze->add_option("--dot-poset", dot_poset_out, "write a J-order Hasse diagram");

  // gen
  std::vector<std::string> gen_spec;
  auto* cmd_gen = app.add_subcommand("gen", "emit a monoid as JSON (t n | cyclic n | fixture name)");
  cmd_gen->add_option("spec", gen_spec, "what to generate")->expected(1, 2);

  // check
  int max_order = 4;
  bool with_fixtures = false;
  bool timing = false;
  std::string check_json_out;
  auto* cmd_check = app.add_subcommand("check", "run the theorem suite over a corpus");
  cmd_check->add_option("--max-order", max_order, "enumerate all monoids up to this order");
  cmd_check->add_flag("--fixtures", with_fixtures, "include the named fixtures");
  cmd_check->add_flag("--timing", timing, "include timings in the JSON report");
  cmd_check->add_option("--json", check_json_out, "write the suite report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_validate->parsed()) {
      try {
        FiniteMonoid m = monoid_from_file(validate_path);
        std::cout << "OK: monoid with " << m.size() << " elements\n";
        return kExitOk;
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::ParseError) throw;
        std::cout << err.what() << "\n";
        return kExitMathFailure;
      }
    }

    if (cmd_analyze->parsed()) {
      if (analyze_path.empty() == analyze_gen.empty())
        fail(ErrorKind::ParseError, "analyze needs a path or --gen, not both");
      FiniteMonoid m = analyze_gen.empty() ? monoid_from_file(analyze_path)
                                           : monoid_from_gen_spec(analyze_gen);
      AnalysisReport report = analyze_monoid(m);
      std::cout << analysis_summary(report);
      if (!json_out.empty()) write_text_file(json_out, analysis_to_json(report).dump(2) + "\n");
      if (!dot_lattice_out.empty()) write_text_file(dot_lattice_out, dot_lattice(report));
      if (!dot_poset_out.empty()) write_text_file(dot_poset_out, dot_poset(report));
      return kExitOk;
    }

    if (cmd_gen->parsed()) {
      std::cout << monoid_to_json(monoid_from_gen_spec(gen_spec)).dump(2) << "\n";
      return kExitOk;
    }

    if (cmd_check->parsed()) {
      if (max_order > 4) {
        std::cerr << "OrderTooLarge: --max-order is capped at 4\n";
        return kExitUsage;
      }
      Corpus corpus = default_corpus(max_order, with_fixtures);
      if (corpus.entries.empty())
        std::cout << "warning: empty corpus, every check passes vacuously\n";
      SuiteReport report = run_theorem_suite(corpus);
      for (const auto& c : report.checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass) std::cout << "  [" << c.witness << "]";
        if (timing) std::cout << "  (" << c.millis << " ms)";
        std::cout << "\n";
      }
      std::cout << (report.all_pass ? "all checks passed" : "SUITE FAILED") << " ("
                << corpus.entries.size() << " corpus monoids)\n";
      if (!check_json_out.empty())
        write_text_file(check_json_out, suite_report_to_json(report, timing).dump(2) + "\n");
      return report.all_pass ? kExitOk : kExitMathFailure;
    }
  } catch (const Error& err) {
    std::cerr << err.what() << "\n";
    switch (err.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::OrderTooLarge:
        return kExitUsage;
      default:
        return kExitMathFailure;
    }
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
