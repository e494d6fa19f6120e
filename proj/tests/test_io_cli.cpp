#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "mtopos/analysis.hpp"
#include "mtopos/fixtures.hpp"
#include "mtopos/json_io.hpp"

using namespace mtopos;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  std::string path;
  TempDir() {
    char tmpl[] = "/tmp/mtopos_test_XXXXXX";
    path = mkdtemp(tmpl);
  }
};

int run_cli(const std::string& args) {
  std::string cmd = std::string(MTOPOS_CLI_PATH) + " " + args;
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("monoid JSON round trip") {
  for (auto name : {"trivial", "sl2", "m5", "t2", "sl2x2"}) {
    auto m = fixture_by_name(name);
    auto back = monoid_from_json(monoid_to_json(m));
    CHECK(back == m);
    CHECK(back.names() == m.names());
  }
}

TEST_CASE("transformation JSON input") {
  json j;
  j["degree"] = 3;
  j["generators"] = std::vector<std::vector<int>>{{1, 0, 2}, {1, 2, 0}, {0, 0, 2}};
  CHECK(transformations_from_json(j).size() == 27);
}

TEST_CASE("mset JSON round trip, including the monoid-by-path form") {
  auto m5 = fixture_m5();
  auto ma = principal_left_mset(m5, 2);
  auto j = mset_to_json(ma);
  auto back = left_mset_from_json(j);
  CHECK(back.carrier == ma.carrier);
  CHECK(back.action == ma.action);

  auto reg = regular_right_mset(fixture_sl2());
  auto jr = mset_to_json(reg);
  CHECK(right_mset_from_json(jr).action == reg.action);

  TempDir tmp;
  std::string mpath = tmp.path + "/m5.json";
  write_text_file(mpath, monoid_to_json(m5).dump(2));
  j["monoid"] = mpath;
  auto via_file = left_mset_from_json(j);
  CHECK(via_file.action == ma.action);

  CHECK_THROWS_AS(left_mset_from_json(jr), Error);  // side mismatch
}

TEST_CASE("parse errors carry the ParseError kind") {
  try {
    monoid_from_file("/nonexistent/never.json");
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("analysis of the trivial monoid") {
  auto r = analyze_monoid(fixture_trivial());
  CHECK(r.points.num_points() == 1);
  CHECK(r.lattice.size() == 2);  // ∅ and M
  CHECK(r.iii_closed);
  CHECK(r.f_monoid);
}

TEST_CASE("analysis report of m5 carries the expected counts") {
  auto r = analyze_monoid(fixture_m5());
  CHECK(r.points.num_points() == 4);
  CHECK(r.lattice.size() == 6);
  CHECK_FALSE(r.iii_closed);
  CHECK(r.distributive);
  auto j = analysis_to_json(r);
  CHECK(j["summary"]["idempotents"] == 4);
  CHECK(j["poset"]["opens_count"] == 6);
  CHECK(j["semilattice"]["size"] == 4);
  CHECK(j["semilattice"]["surjective"] == true);

  auto dot = dot_lattice(r);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("{0,a,ab}") != std::string::npos);
  auto dotp = dot_poset(r);
  CHECK(dotp.find("[ab]") == std::string::npos);  // ab is not an idempotent class
  CHECK(dotp.find("[a]") != std::string::npos);
}

TEST_CASE("cli validate / gen / analyze round trip") {
  TempDir tmp;
  std::string m5_path = tmp.path + "/m5.json";
  CHECK(run_cli("gen fixture m5 > " + m5_path) == 0);
  CHECK(run_cli("validate " + m5_path + " > " + tmp.path + "/v.txt") == 0);
  CHECK(slurp(tmp.path + "/v.txt").find("OK") == 0);

  // corrupted table: swap one entry to break associativity
  auto j = load_json_file(m5_path);
  j["table"][4][4] = 4;  // (ab)·(ab) = ab breaks (b·a)·(b·ab) chains
  write_text_file(tmp.path + "/bad.json", j.dump());
  CHECK(run_cli("validate " + tmp.path + "/bad.json > " + tmp.path + "/bad.txt") == 1);
  CHECK(slurp(tmp.path + "/bad.txt").find("NotAssociative") != std::string::npos);

  // missing file is a usage/IO error
  CHECK(run_cli("validate " + tmp.path + "/missing.json 2> /dev/null") == 2);

  // analyze twice: byte-identical reports, deterministic DOT
  std::string j1 = tmp.path + "/r1.json", j2 = tmp.path + "/r2.json";
  CHECK(run_cli("analyze " + m5_path + " --json " + j1 + " --dot-lattice " + tmp.path +
                "/l1.dot > " + tmp.path + "/s1.txt") == 0);
  CHECK(run_cli("analyze " + m5_path + " --json " + j2 + " --dot-lattice " + tmp.path +
                "/l2.dot > " + tmp.path + "/s2.txt") == 0);
  CHECK(slurp(j1) == slurp(j2));
  CHECK(!slurp(j1).empty());
  CHECK(slurp(tmp.path + "/l1.dot") == slurp(tmp.path + "/l2.dot"));
  CHECK(slurp(tmp.path + "/s1.txt") == slurp(tmp.path + "/s2.txt"));

  // the summary states the worked counts
  auto summary = slurp(tmp.path + "/s1.txt");
  CHECK(summary.find("points: 4") != std::string::npos);
  CHECK(summary.find("idempotent ideals: 6") != std::string::npos);
}

TEST_CASE("cli validate reads the transformation format too") {
  TempDir tmp;
  json j;
  j["degree"] = 3;
  j["generators"] = std::vector<std::vector<int>>{{1, 0, 2}, {1, 2, 0}, {0, 0, 2}};
  write_text_file(tmp.path + "/t3gen.json", j.dump());
  CHECK(run_cli("validate " + tmp.path + "/t3gen.json > " + tmp.path + "/out.txt") == 0);
  CHECK(slurp(tmp.path + "/out.txt").find("27 elements") != std::string::npos);
}

TEST_CASE("cli analyze --gen t 3 reproduces the T3 example") {
  TempDir tmp;
  std::string out = tmp.path + "/t3.txt";
  CHECK(run_cli("analyze --gen t 3 --json " + tmp.path + "/t3.json > " + out) == 0);
  auto summary = slurp(out);
  CHECK(summary.find("27 elements, 10 idempotents") != std::string::npos);
  CHECK(summary.find("points: 3") != std::string::npos);
  CHECK(summary.find("idempotent ideals: 4") != std::string::npos);
  auto j = load_json_file(tmp.path + "/t3.json");
  CHECK(j["summary"]["regular"] == true);
  CHECK(j["lattice"]["iii_closed"] == true);
}

TEST_CASE("cli gen arguments") {
  CHECK(run_cli("gen cyclic 1 > /dev/null") == 0);
  CHECK(run_cli("gen t 5 2> /dev/null") == 2);
  CHECK(run_cli("gen fixture nosuch 2> /dev/null") == 2);
}

TEST_CASE("cli check exit codes") {
  TempDir tmp;
  CHECK(run_cli("check --max-order 2 --fixtures --json " + tmp.path + "/suite.json > " +
                tmp.path + "/check.txt") == 0);
  auto j = load_json_file(tmp.path + "/suite.json");
  CHECK(j["all_pass"] == true);
  // deterministic bytes without --timing
  CHECK(run_cli("check --max-order 2 --json " + tmp.path + "/s1.json > /dev/null") == 0);
  CHECK(run_cli("check --max-order 2 --json " + tmp.path + "/s2.json > /dev/null") == 0);
  CHECK(slurp(tmp.path + "/s1.json") == slurp(tmp.path + "/s2.json"));
  CHECK(run_cli("check --max-order 9 2> /dev/null") == 2);
}
