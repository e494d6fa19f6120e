#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtopos/element_set.hpp"
#include "mtopos/errors.hpp"
#include "mtopos/partition.hpp"

namespace mtopos {

/// Element index inside a fixed FiniteMonoid.
using Elt = int;

/// A finite monoid given by its full multiplication table. Instances are
/// immutable once built; construction goes through validate_monoid so that
/// every value in circulation satisfies the monoid laws.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;

  int size() const noexcept { return n_; }
  Elt identity() const noexcept { return id_; }
  Elt mul(Elt a, Elt b) const { return tab_[static_cast<std::size_t>(a) * n_ + b]; }
  Elt mul3(Elt a, Elt b, Elt c) const { return mul(mul(a, b), c); }

  bool is_idempotent(Elt e) const { return mul(e, e) == e; }
  bool commutative() const;

  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Display string for an element: its name if present, else its index.
  std::string display(Elt a) const;

  const std::vector<Elt>& flat_table() const noexcept { return tab_; }
  std::vector<std::vector<Elt>> table_rows() const;

  /// Table-level equality (same labeling); names ignored.
  bool operator==(const FiniteMonoid& o) const { return n_ == o.n_ && id_ == o.id_ && tab_ == o.tab_; }
  bool operator!=(const FiniteMonoid& o) const { return !(*this == o); }

  friend FiniteMonoid validate_monoid(const std::vector<std::vector<Elt>>& table,
                                      Elt identity, std::vector<std::string> names);

 private:
  int n_ = 0;
  Elt id_ = 0;
  std::vector<Elt> tab_;  // row-major, tab_[i*n + j] = i·j
  std::vector<std::string> names_;
};

/// Homomorphism between two fixed monoids, as the image array of source
/// elements. Validity is relative to a (source, target) pair.
struct MonoidHom {
  std::vector<Elt> map;
  Elt operator()(Elt a) const { return map[a]; }
};

bool is_monoid_hom(const FiniteMonoid& src, const FiniteMonoid& dst, const MonoidHom& h);

/// A partition of the elements compatible with multiplication on both sides.
struct MonoidCongruence {
  SetPartition partition;
};

bool is_monoid_congruence(const FiniteMonoid& m, const SetPartition& p);

// ---------------------------------------------------------------------------
// construction and validation

/// Validates the monoid laws and returns the monoid, or throws Error with
/// the first violated law and its witnesses: NotAssociative(i,j,k),
/// IdentityLawFails(i), IndexOutOfRange.
FiniteMonoid validate_monoid(const std::vector<std::vector<Elt>>& table, Elt identity,
                             std::vector<std::string> names = {});

/// Closure of {identity} ∪ generators under composition of total maps on
/// {0,…,degree−1}. Element order is breadth-first discovery order from the
/// identity with generator order as tie-break. Composition is (f·g)(x) =
/// f(g(x)). Throws ClosureTooLarge past the cap.
FiniteMonoid from_transformations(int degree, const std::vector<std::vector<int>>& generators,
                                  std::size_t cap = 1'000'000);

/// The opposite monoid: i ·op j = j·i. Names are kept.
FiniteMonoid opposite(const FiniteMonoid& m);

/// All e with e·e = e, sorted ascending. Always contains the identity.
std::vector<Elt> idempotents(const FiniteMonoid& m);

enum class IdealKind { left, right, two_sided };

/// Mm, mM or MmM.
ElementSet principal_ideal(const FiniteMonoid& m, Elt x, IdealKind kind);

enum class GreenRelation { L, R, J };

/// Partition of idempotents(m) (by position in that sorted list) under
/// equality of Me, eM or MeM.
SetPartition green_partition(const FiniteMonoid& m, GreenRelation rel);

/// Smallest monoid congruence containing the seed pairs (union-find plus
/// merge work-queue to fixpoint).
MonoidCongruence congruence_closure(const FiniteMonoid& m,
                                    const std::vector<std::pair<Elt, Elt>>& seeds);

/// Quotient table on classes (class representative = least member) plus the
/// projection homomorphism. Throws NotACongruence if compatibility fails.
std::pair<FiniteMonoid, MonoidHom> quotient_monoid(const FiniteMonoid& m,
                                                   const MonoidCongruence& c);

/// Largest commutative quotient: congruence closure of {(xy, yx)}.
std::pair<FiniteMonoid, MonoidHom> commutative_quotient(const FiniteMonoid& m);

/// Largest commutative idempotent quotient: closure of {(xy, yx), (x², x)}.
std::pair<FiniteMonoid, MonoidHom> semilattice_quotient(const FiniteMonoid& m);

/// All prime ideals of a commutative monoid: ideals p (∅ included, M
/// excluded) whose complement is a submonoid. Sorted by size then bit order.
/// Throws NotCommutative otherwise.
std::vector<ElementSet> spec_prime_ideals(const FiniteMonoid& m);

/// Searches for an isomorphism (identity- and idempotent-respecting, pruned
/// by element profiles, extended from a generating set). Deterministic.
std::optional<MonoidHom> monoid_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b);

/// True iff every m has some x with m·x·m = m.
bool is_regular(const FiniteMonoid& m);

// ---------------------------------------------------------------------------
// subset roles

bool is_submonoid(const FiniteMonoid& m, const ElementSet& s);
bool is_left_ideal(const FiniteMonoid& m, const ElementSet& s);
bool is_right_ideal(const FiniteMonoid& m, const ElementSet& s);
bool is_two_sided_ideal(const FiniteMonoid& m, const ElementSet& s);

/// {a·b : a ∈ s, b ∈ t}.
ElementSet set_product(const FiniteMonoid& m, const ElementSet& s, const ElementSet& t);

/// All submonoids (subsets containing the identity, closed under ·), sorted
/// by size then bit order. Subset scan; guarded to size() ≤ max_order.
std::vector<ElementSet> submonoids(const FiniteMonoid& m, int max_order = 16);

}  // namespace mtopos
