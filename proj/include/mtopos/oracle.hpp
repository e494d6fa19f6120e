#pragma once

#include <string>
#include <vector>

#include "mtopos/mset.hpp"
#include "mtopos/topology.hpp"

namespace mtopos {

enum class Provenance { enumerated, named, transformation };

struct CorpusEntry {
  std::string name;
  FiniteMonoid monoid;
  Provenance provenance = Provenance::named;
};

/// Pairwise non-isomorphic test corpus: every monoid of order ≤ max_order
/// plus the named fixtures (when requested).
struct Corpus {
  std::vector<CorpusEntry> entries;
};

Corpus default_corpus(int max_order = 4, bool with_fixtures = true);

/// All partitions of the carrier compatible with the action. Guarded to
/// carrier ≤ 7 (throws CarrierTooLarge).
std::vector<SetPartition> enumerate_mset_congruences(const LeftMSet& a);
std::vector<SetPartition> enumerate_mset_congruences(const RightMSet& a);

/// All filtered cyclic left M-sets up to isomorphism: quotients of M by
/// M-congruences, filtered by F1–F3, deduplicated. Guarded to |M| ≤ 7.
std::vector<LeftMSet> enumerate_filtered_cyclic(const FiniteMonoid& m);

/// All families of right ideals satisfying T1–T3: grown as residual-closed
/// families from {M}, then filtered by local character. Requires the
/// right-ideal count within cap (throws TooManyIdeals).
std::vector<TopologyFamily> enumerate_topologies(const FiniteMonoid& m,
                                                 std::size_t ideal_cap = 20);

/// All monoids of order exactly n up to isomorphism: identity fixed at
/// element 0, backtracking over associative tables, isomorphism dedup.
std::vector<FiniteMonoid> enumerate_monoids_of_order(int n);

/// Slow cross-check: scan all n^(n·n) tables, keep those that are monoids
/// (any identity position), dedup by a canonical relabeling form. n ≤ 3.
std::vector<FiniteMonoid> enumerate_monoids_scan(int n);

/// Corpus of all monoids of order ≤ max_order (throws OrderTooLarge if
/// max_order > 4).
Corpus enumerate_monoids(int max_order);

struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
  double millis = 0.0;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  bool all_pass = false;
};

/// Runs every stated invariant of every module over the corpus; each check
/// reports pass/fail with a witness description.
SuiteReport run_theorem_suite(const Corpus& corpus);

}  // namespace mtopos
