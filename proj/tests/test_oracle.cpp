#include <doctest.h>

#include <algorithm>
#include <set>

#include "mtopos/fixtures.hpp"
#include "mtopos/oracle.hpp"

using namespace mtopos;

TEST_CASE("mset congruence enumeration") {
  auto sl2 = fixture_sl2();
  // both partitions of {1, t} are compatible with left multiplication
  CHECK(enumerate_mset_congruences(regular_left_mset(sl2)).size() == 2);
  CHECK(enumerate_mset_congruences(singleton_left_mset(sl2)).size() == 1);

  // m5: every congruence must be checked against Bell(5) = 52 partitions;
  // cross-check the count with a direct filter
  auto m5 = fixture_m5();
  auto reg = regular_left_mset(m5);
  std::size_t direct = 0;
  for_each_partition(5, [&](const SetPartition& p) {
    if (is_mset_congruence(reg, p)) ++direct;
  });
  CHECK(enumerate_mset_congruences(reg).size() == direct);

  auto big = fixture_full_transformation(3);
  CHECK_THROWS_AS(enumerate_mset_congruences(regular_left_mset(big)), Error);
}

TEST_CASE("filtered cyclic M-sets match the worked point counts") {
  CHECK(enumerate_filtered_cyclic(fixture_trivial()).size() == 1);
  CHECK(enumerate_filtered_cyclic(fixture_sl2()).size() == 2);
  CHECK(enumerate_filtered_cyclic(fixture_m5()).size() == 4);
  CHECK(enumerate_filtered_cyclic(fixture_sl2_square()).size() == 4);
}

TEST_CASE("topology enumeration matches the ideal counts") {
  CHECK(enumerate_topologies(fixture_trivial()).size() == 2);
  CHECK(enumerate_topologies(fixture_sl2()).size() == 3);
  CHECK(enumerate_topologies(fixture_m5()).size() == 6);

  // exhaustive cross-check against a raw subfamily scan on sl2 and m5
  for (auto name : {"sl2", "m5", "c3"}) {
    auto m = fixture_by_name(name);
    auto ideals = right_ideals(m);
    REQUIRE(ideals.size() <= 15);
    std::size_t raw = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << ideals.size()); ++mask) {
      std::vector<ElementSet> members;
      for (std::size_t i = 0; i < ideals.size(); ++i)
        if ((mask >> i) & 1u) members.push_back(ideals[i]);
      if (is_grothendieck_topology(m, make_family(std::move(members))).verdict) ++raw;
    }
    CHECK(enumerate_topologies(m).size() == raw);
  }
}

TEST_CASE("topology enumeration refuses monoids with too many right ideals") {
  auto t4 = fixture_full_transformation(4);
  CHECK(right_ideals(t4).size() > 20);
  try {
    enumerate_topologies(t4);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::TooManyIdeals);
  }
}

TEST_CASE("monoid enumeration with dual-algorithm agreement") {
  CHECK(enumerate_monoids_of_order(1).size() == 1);

  // golden counts, frozen after the two independent algorithms agreed
  auto fast2 = enumerate_monoids_of_order(2);
  auto slow2 = enumerate_monoids_scan(2);
  CHECK(fast2.size() == slow2.size());
  CHECK(fast2.size() == 2);

  auto fast3 = enumerate_monoids_of_order(3);
  auto slow3 = enumerate_monoids_scan(3);
  CHECK(fast3.size() == slow3.size());
  CHECK(fast3.size() == 7);

  CHECK(enumerate_monoids_of_order(4).size() == 35);

  CHECK_THROWS_AS(enumerate_monoids_of_order(5), Error);
}

TEST_CASE("the default corpus is pairwise non-isomorphic and keeps the fixtures") {
  auto corpus = default_corpus(3, true);
  std::set<std::string> names;
  for (const auto& e : corpus.entries) names.insert(e.name);
  for (const auto& f : fixture_names()) CHECK(names.count(f));
  // order ≤ 3 classes: 1 + 2 + 7, all represented exactly once
  std::size_t small = 0;
  for (const auto& e : corpus.entries)
    if (e.monoid.size() <= 3) ++small;
  CHECK(small == 10);
}

TEST_CASE("the theorem suite passes on a small corpus") {
  auto corpus = default_corpus(2, true);
  auto report = run_theorem_suite(corpus);
  for (const auto& c : report.checks) {
    INFO(c.name, ": ", c.witness);
    CHECK(c.pass);
  }
  CHECK(report.all_pass);
}

TEST_CASE("the suite flags a corrupted table") {
  // a deliberately wrong "monoid": left-zero table with an identity row glued
  // on violates associativity of its principal ideals? build something that
  // passes validation but breaks an expected theorem is impossible; instead
  // corrupt the corpus by pairing duplicate entries and watch the distinctness
  // check fail
  Corpus corpus;
  corpus.entries.push_back({"a", fixture_sl2(), Provenance::named});
  corpus.entries.push_back({"b", fixture_sl2(), Provenance::named});
  auto report = run_theorem_suite(corpus);
  CHECK_FALSE(report.all_pass);
  bool distinct_failed = false;
  for (const auto& c : report.checks)
    if (c.name == "oracle.corpus_pairwise_distinct" && !c.pass) distinct_failed = true;
  CHECK(distinct_failed);
}

TEST_CASE("empty corpus passes vacuously") {
  auto report = run_theorem_suite(Corpus{});
  CHECK(report.all_pass);
}
