#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mtopos/fixtures.hpp"
#include "mtopos/points.hpp"

using namespace mtopos;

TEST_CASE("filteredness of the canonical examples") {
  auto m5 = fixture_m5();
  CHECK(is_filtered(regular_left_mset(m5)).verdict);           // A = M always
  CHECK(is_filtered(singleton_left_mset(fixture_sl2())).verdict);

  auto empty = empty_left_mset(m5);
  auto r1 = is_filtered(empty);
  CHECK_FALSE(r1.verdict);
  CHECK(r1.failing == FilterCondition::F1);

  // Ma ⊔ Mb has no common generator: F3 fails with a witness pair
  auto split = disjoint_union(principal_left_mset(m5, 2), principal_left_mset(m5, 3));
  auto r3 = is_filtered(split);
  CHECK_FALSE(r3.verdict);
  CHECK(r3.failing == FilterCondition::F3);
  CHECK(r3.witness.size() == 2);
}

TEST_CASE("F2 failure carries a witness triple") {
  // {1, t} acting on {x, y} with t constant at x is not filtered:
  // t·x = t·y but nothing maps onto y... actually F3 catches that; build an
  // F2-specific failure instead: C2 acting trivially on two points fails F2?
  // g·a = a for both; 1·a = g·a forces m with 1·m = g·m, impossible in C2.
  auto c2 = fixture_cyclic(2);
  auto triv2 = validate_left_action(c2, {{0, 1}, {0, 1}});
  auto r = is_filtered(triv2);
  CHECK_FALSE(r.verdict);
  CHECK(r.failing == FilterCondition::F2);
  CHECK(r.witness.size() == 3);
}

TEST_CASE("F-monoids and right zeros") {
  auto m5 = fixture_m5();
  auto full = ElementSet::full(5);
  CHECK(is_F_monoid(m5, full).verdict);  // 0 is a right zero
  CHECK(right_zero(m5, full) == 1);      // element "0" has index 1

  CHECK(is_F_monoid(m5, ElementSet::of(5, {0, 2})).verdict);  // {1, a}, e idempotent
  CHECK(right_zero(m5, ElementSet::of(5, {0, 2})) == 2);

  // nontrivial groups have no right zero and are not F-monoids
  auto c3 = fixture_cyclic(3);
  CHECK_FALSE(is_F_monoid(c3, ElementSet::full(3)).verdict);
  CHECK_FALSE(right_zero(c3, ElementSet::full(3)).has_value());
  auto rep = is_F_monoid(c3, ElementSet::full(3));
  REQUIRE(rep.witness.has_value());

  // semilattices are F-monoids (x = mn works)
  CHECK(is_F_monoid(fixture_sl2_square(), ElementSet::full(4)).verdict);

  CHECK_THROWS_AS(is_F_monoid(m5, ElementSet::of(5, {2})), Error);  // not a submonoid
}

TEST_CASE("common right fixer follows the constructive proof") {
  auto m5 = fixture_m5();
  // K = {1, e}: the fixer of [e] is e
  CHECK(common_right_fixer(m5, ElementSet::of(5, {0, 2}), {2}) == 2);
  // K = M5, ms = [a, b]: only 0 fixes both
  CHECK(common_right_fixer(m5, ElementSet::full(5), {2, 3}) == 1);
  // semilattice: m1·m2 is a fixer of both
  auto sq = fixture_sl2_square();
  Elt x = common_right_fixer(sq, ElementSet::full(4), {1, 2});
  CHECK(sq.mul(1, x) == x);
  CHECK(sq.mul(2, x) == x);

  CHECK_THROWS_AS(common_right_fixer(fixture_cyclic(2), ElementSet::full(2), {1}), Error);
}

TEST_CASE("saturation on the m5 submonoids") {
  auto m5 = fixture_m5();
  // {1, 0} saturates to all of M (m·0 = 0 for every m)
  CHECK(saturation(m5, ElementSet::of(5, {0, 1})).count() == 5);
  // {1, b} is already saturated
  CHECK(saturation(m5, ElementSet::of(5, {0, 3})) == ElementSet::of(5, {0, 3}));
  // {1} saturates to itself here
  CHECK(saturation(m5, ElementSet::of(5, {0})) == ElementSet::of(5, {0}));
  // the saturated F-submonoids of m5 are exactly {1}, {1,a}, {1,b}, M
  std::vector<std::vector<int>> saturated_f;
  for (const auto& k : submonoids(m5))
    if (is_F_monoid(m5, k).verdict && is_saturated(m5, k)) saturated_f.push_back(k.members());
  CHECK(saturated_f == std::vector<std::vector<int>>{
                           {0}, {0, 2}, {0, 3}, {0, 1, 2, 3, 4}});
  // while {1,0}, {1,0,a}, {1,0,b}, {1,0,ab} are non-saturated F-submonoids
  for (auto v : {std::vector<int>{0, 1}, {0, 1, 2}, {0, 1, 3}, {0, 1, 4}}) {
    auto k = ElementSet::of(5, v);
    CHECK(is_F_monoid(m5, k).verdict);
    CHECK_FALSE(is_saturated(m5, k));
  }
}

TEST_CASE("quotients by F-submonoids") {
  auto m5 = fixture_m5();
  // K = M over an F-monoid: M/M is a singleton
  CHECK(quotient_by_F_submonoid(m5, ElementSet::full(5)).mset.carrier == 1);
  // K = {1, e}: M/K ≅ Me
  for (Elt e : idempotents(m5)) {
    auto q = quotient_by_F_submonoid(m5, ElementSet::of(5, {0, e}));
    CHECK(mset_isomorphic(q.mset, principal_left_mset(m5, e)).has_value());
  }
  // K = {1, b}: three classes
  CHECK(quotient_by_F_submonoid(m5, ElementSet::of(5, {0, 3})).mset.carrier == 3);

  CHECK_THROWS_AS(quotient_by_F_submonoid(fixture_cyclic(3), ElementSet::full(3)), Error);
}

TEST_CASE("classification of the worked examples") {
  CHECK(classify_points(fixture_sl2()).num_points() == 2);
  CHECK(classify_points(fixture_m5()).num_points() == 4);
  CHECK(classify_points(fixture_full_transformation(3)).num_points() == 3);
  CHECK(classify_points(fixture_trivial()).num_points() == 1);

  // m5 representative M-set sizes are 5, 1, 2, 3 (for 1, 0, a, b)
  auto pc = classify_points(fixture_m5());
  std::vector<int> sizes;
  for (Elt e : pc.representatives)
    sizes.push_back(principal_ideal(fixture_m5(), e, IdealKind::left).count());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 3, 5});
}

TEST_CASE("the idempotent category and its isomorphism pairs") {
  auto m5 = fixture_m5();
  auto cat = category_I(m5);
  REQUIRE(cat.objects == std::vector<Elt>{0, 1, 2, 3});
  // identity of e lies in hom(e, e)
  for (std::size_t i = 0; i < cat.objects.size(); ++i)
    CHECK(cat.hom_set(static_cast<int>(i), static_cast<int>(i)).test(cat.objects[i]));

  // a and b sit in distinct J-classes: no isomorphism pair
  CHECK_FALSE(is_iso_pair(m5, 2, 3).has_value());
  CHECK(is_iso_pair(m5, 2, 2).has_value());

  // iso pairs exist exactly for J-equivalent idempotents (checked on T3,
  // where J-equivalent means equal rank)
  auto t3 = fixture_full_transformation(3);
  for (Elt e : idempotents(t3))
    for (Elt f : idempotents(t3)) {
      bool same_class = principal_ideal(t3, e, IdealKind::two_sided) ==
                        principal_ideal(t3, f, IdealKind::two_sided);
      auto pair = is_iso_pair(t3, e, f);
      CHECK(pair.has_value() == same_class);
      if (pair) {
        auto [x, y] = *pair;
        CHECK(t3.mul(x, y) == e);
        CHECK(t3.mul(y, x) == f);
      }
    }
}

TEST_CASE("endomorphism monoids of points") {
  auto m5 = fixture_m5();
  // e = identity: End(p) = M^op
  auto endo1 = endomorphism_monoid_of_point(m5, m5.identity());
  CHECK(monoid_isomorphic(endo1, opposite(m5)).has_value());
  // e = 0: trivial
  CHECK(endomorphism_monoid_of_point(m5, 1).size() == 1);
  // rank-1 idempotents of T3 give the trivial monoid
  auto t3 = fixture_full_transformation(3);
  for (Elt e : idempotents(t3))
    if (principal_ideal(t3, e, IdealKind::left).count() == 3)
      CHECK(endomorphism_monoid_of_point(t3, e).size() == 1);
}

TEST_CASE("induced point maps") {
  auto m5 = fixture_m5();
  // identity homomorphism: identity on classes
  MonoidHom id{{0, 1, 2, 3, 4}};
  std::vector<int> expect(classify_points(m5).num_points());
  std::iota(expect.begin(), expect.end(), 0);
  CHECK(induced_point_map(m5, m5, id) == expect);

  // η: {1,t} → M5, t ↦ a lands in the class of Ma
  auto sl2 = fixture_sl2();
  MonoidHom eta{{0, 2}};
  auto pc = classify_points(m5);
  auto map = induced_point_map(sl2, m5, eta);
  REQUIRE(map.size() == 2);
  // the singleton (class of t) goes to the class of a
  auto class_of_a = [&] {
    for (std::size_t i = 0; i < pc.representatives.size(); ++i)
      if (pc.representatives[i] == 2) return static_cast<int>(i);
    return -1;
  }();
  CHECK(map[1] == class_of_a);
}

TEST_CASE("common generator construction on a filtered M-set") {
  auto m5 = fixture_m5();
  auto mb = principal_left_mset(m5, 3);
  std::vector<int> all(mb.carrier);
  std::iota(all.begin(), all.end(), 0);
  auto cg = common_generator(mb, all);
  for (std::size_t i = 0; i < all.size(); ++i)
    CHECK(mb.act(cg.multipliers[i], cg.generator) == all[i]);
}
