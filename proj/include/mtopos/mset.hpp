#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mtopos/monoid.hpp"

namespace mtopos {

/// Finite left M-set: action table with entry (m, a) = m·a.
struct LeftMSet {
  FiniteMonoid monoid;
  int carrier = 0;
  std::vector<int> action;  // row-major over (m, a)

  int act(Elt m, int a) const { return action[static_cast<std::size_t>(m) * carrier + a]; }
};

/// Finite right M-set: action table with entry (a, m) = a·m.
struct RightMSet {
  FiniteMonoid monoid;
  int carrier = 0;
  std::vector<int> action;  // row-major over (a, m)

  int act(int a, Elt m) const {
    return action[static_cast<std::size_t>(a) * monoid.size() + m];
  }
};

/// Checks 1·a = a and (m·n)·a = m·(n·a); throws IdentityActionFails(a) or
/// ActionNotAssociative(m,n,a).
LeftMSet validate_left_action(const FiniteMonoid& m, const std::vector<std::vector<int>>& table);
/// Mirror: a·1 = a and a·(m·n) = (a·m)·n.
RightMSet validate_right_action(const FiniteMonoid& m, const std::vector<std::vector<int>>& table);

/// M acting on itself by left (resp. right) multiplication.
LeftMSet regular_left_mset(const FiniteMonoid& m);
RightMSet regular_right_mset(const FiniteMonoid& m);

LeftMSet singleton_left_mset(const FiniteMonoid& m);
LeftMSet empty_left_mset(const FiniteMonoid& m);

/// Sub-M-set on a left (resp. right) ideal; carrier is the sorted member
/// list. Throws if the subset is not stable under the action.
LeftMSet left_ideal_mset(const FiniteMonoid& m, const ElementSet& ideal);
RightMSet right_ideal_mset(const FiniteMonoid& m, const ElementSet& ideal);

/// The left M-set Me (principal left ideal of an element).
LeftMSet principal_left_mset(const FiniteMonoid& m, Elt e);

LeftMSet disjoint_union(const LeftMSet& a, const LeftMSet& b);

/// Whether a partition of the carrier is an M-congruence:
/// a ~ b ⇒ m·a ~ m·b (left case), mirrored on the right.
bool is_mset_congruence(const LeftMSet& a, const SetPartition& p);
bool is_mset_congruence(const RightMSet& a, const SetPartition& p);

/// Map of carriers commuting with the action.
struct EquivariantMap {
  std::vector<int> map;
  int operator()(int a) const { return map[a]; }
};

bool is_equivariant(const LeftMSet& a, const LeftMSet& b, const EquivariantMap& f);
bool is_equivariant(const RightMSet& a, const RightMSet& b, const EquivariantMap& f);

/// Quotient of an M-set by an M-congruence; classes are labeled in
/// least-member order. Throws NotACongruence if p is incompatible.
std::pair<LeftMSet, std::vector<int>> quotient_mset(const LeftMSet& a, const SetPartition& p);

struct CyclicQuotient {
  LeftMSet mset;
  std::vector<int> projection;  // element of M -> class
  int generator;                // class of the identity
};

/// Quotient of M-as-left-M-set by an M-congruence, with the class of 1
/// marked as generator.
CyclicQuotient cyclic_from_congruence(const FiniteMonoid& m, const SetPartition& p);

/// K_ρ(a) = {x ∈ M | x·a ~ a}; asserts the result is a submonoid.
ElementSet k_rho(const LeftMSet& a, const SetPartition& p, int elem);

/// All equivariant maps A → B, sorted by image array. Enumerates images of
/// a generating set of A and extends by the action (backtracking with
/// conflict pruning), so cyclic A costs |B| candidates.
std::vector<EquivariantMap> mset_hom_set(const LeftMSet& a, const LeftMSet& b);
std::vector<EquivariantMap> mset_hom_set(const RightMSet& a, const RightMSet& b);

/// An equivariant bijection (its inverse is automatically equivariant), or
/// nullopt. Deterministic search.
std::optional<EquivariantMap> mset_isomorphic(const LeftMSet& a, const LeftMSet& b);
std::optional<EquivariantMap> mset_isomorphic(const RightMSet& a, const RightMSet& b);

/// X ⊗_M A: quotient of X×A by the equivalence generated by
/// (x·m, a) ≈ (x, m·a), computed by union-find over all (x, m, a) triples.
/// Classes are labeled by their least (x, a) pair in lexicographic order.
struct TensorResult {
  int size = 0;
  int a_carrier = 0;
  std::vector<int> class_of;               // index x * |A| + a -> class
  std::vector<std::pair<int, int>> reps;   // class -> least (x, a)

  int cls(int x, int a) const { return class_of[static_cast<std::size_t>(x) * a_carrier + a]; }
};

TensorResult tensor(const RightMSet& x, const LeftMSet& a);

/// M′ ⊗_M A for a homomorphism f: M → M′, as a left M′-set with action
/// m″·[x, a] = [m″·x, a]. Also returns the tensor bookkeeping.
struct InducedMSet {
  LeftMSet mset;  // over the target monoid
  TensorResult tensor;
};

InducedMSet tensor_along_hom(const FiniteMonoid& src, const FiniteMonoid& dst,
                             const MonoidHom& f, const LeftMSet& a);

/// Hom_Sets(A, Y) as a right M-set via (α·m)(a) = α(m·a); carrier index
/// encodes the map base-|Y| with digit a at place a. This is the direct
/// image of a set Y along the point of A. Throws CarrierTooLarge past cap.
RightMSet hom_set_as_right_mset(const LeftMSet& a, int y_size, std::size_t cap = 1'000'000);

/// Decode / encode carrier indices of hom_set_as_right_mset.
std::vector<int> hom_mset_decode(int index, int a_carrier, int y_size);
int hom_mset_encode(const std::vector<int>& digits, int y_size);

}  // namespace mtopos
