#pragma once

#include <string>
#include <vector>

#include "mtopos/monoid.hpp"

namespace mtopos {

FiniteMonoid fixture_trivial();
/// {1, t} with t² = t (the two-element semilattice).
FiniteMonoid fixture_sl2();
/// {1, 0, a, b, ab} with a² = a, b² = b, ba = 0 and zero element 0.
FiniteMonoid fixture_m5();
/// Cyclic group of order n.
FiniteMonoid fixture_cyclic(int n);
/// Full transformation monoid on n points (n ≤ 4).
FiniteMonoid fixture_full_transformation(int n);
/// The square of the two-element semilattice: {1, a, b, ab}, free
/// commutative idempotent on two generators.
FiniteMonoid fixture_sl2_square();

/// Names accepted: trivial, sl2, m5, t2, t3, c2, c3, c4, sl2x2.
FiniteMonoid fixture_by_name(const std::string& name);
std::vector<std::string> fixture_names();

}  // namespace mtopos
