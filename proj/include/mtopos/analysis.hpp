#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtopos/oracle.hpp"
#include "mtopos/points.hpp"
#include "mtopos/topology.hpp"

namespace mtopos {

/// Everything the analyze command reports about one monoid. Counts are the
/// library-level values; building the report asserts the cross-section
/// consistencies (|points| = |J-classes| = |irreducibles|, |opens| =
/// |ideals|).
struct AnalysisReport {
  FiniteMonoid monoid;

  // summary
  int size = 0;
  int idempotent_count = 0;
  bool regular = false;
  bool commutative = false;
  bool f_monoid = false;
  std::optional<Elt> right_zero_elt;

  // points
  PointsClassification points;
  std::vector<int> point_mset_sizes;          // |Me| per representative
  std::vector<FiniteMonoid> endo_monoids;     // End(p) per representative

  // lattice / topology / poset
  IdealLattice lattice;
  std::vector<int> irreducibles;
  bool distributive = false;
  bool iii_closed = false;
  std::vector<std::size_t> topology_sizes;    // |ℱ_𝔪| per lattice element
  LatticeOpensBijection bijection;

  // semilattice
  FiniteMonoid sl_quotient;
  std::vector<int> induced_points;            // src rep -> sl J-class
  bool induced_surjective = false;
};

AnalysisReport analyze_monoid(const FiniteMonoid& m);

nlohmann::json analysis_to_json(const AnalysisReport& r);

/// Graphviz Hasse diagram of the idempotent-ideal lattice.
std::string dot_lattice(const AnalysisReport& r);
/// Graphviz Hasse diagram of the J-order on idempotent classes.
std::string dot_poset(const AnalysisReport& r);

/// Human-oriented plain-text summary.
std::string analysis_summary(const AnalysisReport& r);

}  // namespace mtopos
