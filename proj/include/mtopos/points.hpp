#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mtopos/mset.hpp"

namespace mtopos {

enum class FilterCondition { F1, F2, F3 };

const char* filter_condition_name(FilterCondition c);

/// Result of the three-condition filteredness test. On failure, `witness`
/// holds (m1, m2, a) for F2 and (a1, a2) for F3; F1 carries no witness.
struct FilterednessReport {
  bool verdict = false;
  std::optional<FilterCondition> failing;
  std::vector<int> witness;
};

/// F1: A ≠ ∅. F2: whenever m1·a = m2·a there are (m, ã) with m·ã = a and
/// m1·m = m2·m. F3: any a1, a2 admit (m1, m2, a) with m1·a = a1, m2·a = a2.
/// Scans are lexicographic; the first failure is reported.
FilterednessReport is_filtered(const LeftMSet& a);

/// Verdict plus a counterexample pair when false.
struct FMonoidReport {
  bool verdict = false;
  std::optional<std::pair<Elt, Elt>> witness;  // (m, n) with no common x
};

/// K is an F-monoid iff every m, n ∈ K admit x ∈ K with m·x = n·x.
/// Throws NotASubmonoid.
FMonoidReport is_F_monoid(const FiniteMonoid& m, const ElementSet& k);

/// The unique ϱ ∈ K with x·ϱ = ϱ for all x ∈ K, if any.
std::optional<Elt> right_zero(const FiniteMonoid& m, const ElementSet& k);

/// An x ∈ K with mi·x = x for every listed mi, built by the inductive
/// construction (single fixers, pairwise equalizing, fold). Throws
/// NotAnFMonoid when K is not an F-submonoid.
Elt common_right_fixer(const FiniteMonoid& m, const ElementSet& k, const std::vector<Elt>& ms);

/// Smallest saturated submonoid containing K: joint fixpoint of the
/// stabilizer rule (m·x = x, x inside ⇒ m inside) and multiplicative
/// closure.
ElementSet saturation(const FiniteMonoid& m, const ElementSet& k);

/// Whether m·x = x with x ∈ K forces m ∈ K.
bool is_saturated(const FiniteMonoid& m, const ElementSet& k);

struct FQuotient {
  LeftMSet mset;
  std::vector<int> projection;
  int generator;  // class of the identity
};

/// M/K for an F-submonoid K: m ~ n iff some x ∈ K has m·x = n·x.
/// Transitivity is asserted at runtime, and the result is asserted filtered.
FQuotient quotient_by_F_submonoid(const FiniteMonoid& m, const ElementSet& k);

/// The category with objects the idempotents of M and Hom(e, f) = fMe,
/// composition by multiplication; identity of e is e.
struct CategoryI {
  std::vector<Elt> objects;                  // idempotents, ascending
  std::vector<std::vector<ElementSet>> hom;  // hom[fi][ei] = objects[fi]·M·objects[ei]

  const ElementSet& hom_set(int e_index, int f_index) const { return hom[f_index][e_index]; }
};

CategoryI category_I(const FiniteMonoid& m);

/// A pair a ∈ eMf, b ∈ fMe with a·b = e and b·a = f, if the two idempotents
/// are isomorphic in the category (equivalently MeM = MfM).
std::optional<std::pair<Elt, Elt>> is_iso_pair(const FiniteMonoid& m, Elt e, Elt f);

/// The classification of the points of the right-M-set topos: one
/// representative idempotent per J-class; Me for each representative is a
/// filtered left M-set (asserted).
struct PointsClassification {
  std::vector<Elt> idempotents;     // ascending
  SetPartition j_classes;           // over positions in `idempotents`
  std::vector<Elt> representatives; // least element index per class, class order
  CategoryI category;

  int num_points() const { return static_cast<int>(representatives.size()); }
};

PointsClassification classify_points(const FiniteMonoid& m);

/// End(p) for the point of an idempotent e: the monoid (eMe)^op. Carrier is
/// eMe in ascending element order; names come from the parent.
FiniteMonoid endomorphism_monoid_of_point(const FiniteMonoid& m, Elt e);

/// The elements of eMe, ascending.
std::vector<Elt> point_endo_carrier(const FiniteMonoid& m, Elt e);

/// Where each point of src lands among the points of dst under f: entry i is
/// the dst J-class index of dst ⊗_src (src·e_i). Throws ClassificationFailed
/// if some induced M-set matches no Me′ (contradicting the classification).
std::vector<int> induced_point_map(const FiniteMonoid& src, const FiniteMonoid& dst,
                                   const MonoidHom& f);

/// A single generator c with multipliers m_i·c = a_i for a list of elements
/// of a filtered M-set, built constructively (F3 for pairs, then a fold).
struct CommonGenerator {
  std::vector<Elt> multipliers;
  int generator = 0;
};

CommonGenerator common_generator(const LeftMSet& a, const std::vector<int>& elems);

}  // namespace mtopos
