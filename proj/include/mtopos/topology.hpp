#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtopos/mset.hpp"
#include "mtopos/points.hpp"

namespace mtopos {

/// A family of right ideals of a fixed monoid, kept sorted (size, then bit
/// order) and deduplicated.
struct TopologyFamily {
  std::vector<ElementSet> members;

  bool contains(const ElementSet& s) const;
};

TopologyFamily make_family(std::vector<ElementSet> members);

/// All right ideals (∅ and M included): closure of the principal right
/// ideals under union. Throws TooManyIdeals past the cap.
std::vector<ElementSet> right_ideals(const FiniteMonoid& m, std::size_t cap = 1u << 16);

/// (𝔞 : x) = {y ∈ M | x·y ∈ 𝔞}; a right ideal whenever 𝔞 is.
ElementSet residual(const FiniteMonoid& m, const ElementSet& a, Elt x);

struct TopologyCheck {
  bool verdict = false;
  std::string failing_axiom;  // "T1", "T2", "T3" or a derived-fact tag
  std::string witness;
};

/// Checks T1 (M ∈ F), T2 (residual stability) and T3 (local character: if
/// 𝔟 ∈ F and (𝔞:b) ∈ F for all b ∈ 𝔟 then 𝔞 ∈ F), then cross-checks the
/// derived facts: upward closure, closure under intersection and under
/// ideal product. Throws NotARightIdeal if a member fails to be one.
TopologyCheck is_grothendieck_topology(const FiniteMonoid& m, const TopologyFamily& f);

/// ℱ_𝔪 = {right ideals 𝔞 ⊇ 𝔪} for a two-sided idempotent ideal 𝔪; the
/// result passes is_grothendieck_topology. Throws NotIdempotentIdeal.
TopologyFamily topology_from_ideal(const FiniteMonoid& m, const ElementSet& ideal);

/// The smallest member of a topology; asserted two-sided, idempotent, and
/// to reproduce the family via topology_from_ideal (else RoundTripFailed).
ElementSet ideal_of_topology(const FiniteMonoid& m, const TopologyFamily& f);

bool is_idempotent_ideal(const FiniteMonoid& m, const ElementSet& ideal);

/// The lattice of two-sided idempotent ideals: join = union, meet = the
/// union of MeM over idempotents of the intersection. Elements sorted by
/// size then bit order, so bottom ∅ is first and top M last. Construction
/// asserts the idempotent-union decomposition of every element, that meet
/// is the greatest lower bound, and distributivity.
struct IdealLattice {
  std::vector<ElementSet> elements;
  std::vector<std::vector<int>> join;
  std::vector<std::vector<int>> meet;

  int size() const { return static_cast<int>(elements.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int index_of(const ElementSet& s) const;  // -1 when absent
  bool leq(int i, int j) const { return join[i][j] == j; }
};

IdealLattice idempotent_ideal_lattice(const FiniteMonoid& m);

/// Meet of two idempotent ideals by the idempotent-generation formula.
ElementSet lattice_meet(const FiniteMonoid& m, const ElementSet& i, const ElementSet& j);

struct IIIClosednessReport {
  bool verdict = false;
  std::optional<std::pair<ElementSet, ElementSet>> witness;
};

/// Whether the intersection of any two idempotent two-sided ideals is again
/// idempotent.
IIIClosednessReport is_III_closed(const FiniteMonoid& m);

/// Join-irreducible elements (bottom excluded), as lattice indices; asserted
/// to coincide with {MeM : e idempotent}.
std::vector<int> lattice_irreducibles(const FiniteMonoid& m, const IdealLattice& l);

/// J-classes of idempotents ordered by [e] ≤ [f] iff MeM ⊆ MfM.
struct IdemJPoset {
  std::vector<Elt> reps;                 // least idempotent per class
  std::vector<ElementSet> class_ideals;  // MeM per class
  std::vector<std::vector<bool>> leq;

  int size() const { return static_cast<int>(reps.size()); }
};

IdemJPoset idem_j_poset(const FiniteMonoid& m);

/// All open sets of the order topology = down-closed subsets, each a sorted
/// list of class indices; the list itself is sorted by size then entries.
std::vector<std::vector<int>> order_topology_opens(const IdemJPoset& p);

/// The inverse bijections between idempotent ideals and order-topology
/// opens: an ideal maps to the classes of its idempotents, an open to the
/// union of its classes' MeM. Composites are asserted to be identities
/// (else BijectionFailed).
struct LatticeOpensBijection {
  IdealLattice lattice;
  IdemJPoset poset;
  std::vector<std::vector<int>> opens;
  std::vector<int> ideal_to_open;
  std::vector<int> open_to_ideal;
};

LatticeOpensBijection lattice_opens_bijection(const FiniteMonoid& m);

struct SheafCheck {
  bool verdict = false;
  std::optional<ElementSet> witness;  // first covering ideal failing restriction
};

/// A right M-set A is an F-sheaf iff for every 𝔞 ∈ F the restriction
/// a ↦ (x ↦ a·x) is a bijection A → Hom_M(𝔞, A).
SheafCheck is_sheaf(const RightMSet& a, const TopologyFamily& f);

/// Transversality of the point of e against the localising subcategory of
/// 𝔪, decided three ways and asserted to agree (else MethodDisagreement):
/// membership e ∈ 𝔪; the canonical maps 𝔞 ⊗_M Me → Me being bijections for
/// all 𝔞 ∈ ℱ_𝔪; sheafness of the direct images Hom(Me, S) for |S| = 1..3.
struct TransversalityVerdict {
  Elt point = 0;
  ElementSet ideal;
  bool verdict = false;
  bool by_membership = false;
  bool by_tensor = false;
  bool by_sheaf = false;
};

TransversalityVerdict point_transversality(const FiniteMonoid& m, Elt e, const ElementSet& ideal,
                                           int max_sample_size = 3);

/// Whether the canonical map 𝔞 ⊗_M A → A, (x, a) ↦ x·a, is a bijection.
bool tensor_onto_ideal_bijective(const FiniteMonoid& m, const ElementSet& ideal, const LeftMSet& a);

}  // namespace mtopos
