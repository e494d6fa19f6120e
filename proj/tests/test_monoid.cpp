#include <doctest.h>

#include <algorithm>
#include <set>

#include "mtopos/fixtures.hpp"
#include "mtopos/monoid.hpp"

using namespace mtopos;

namespace {

Elt by_name(const FiniteMonoid& m, const std::string& name) {
  for (Elt i = 0; i < m.size(); ++i)
    if (m.display(i) == name) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("validate_monoid accepts the worked fixtures") {
  CHECK(fixture_trivial().size() == 1);
  CHECK(fixture_sl2().size() == 2);
  CHECK(fixture_m5().size() == 5);
  CHECK(fixture_sl2_square().size() == 4);
}

TEST_CASE("validate_monoid reports the first violated law with witnesses") {
  try {
    validate_monoid({{0, 1}, {1, 0}}, 1);  // wrong identity index
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::IdentityLawFails);
  }
  try {
    validate_monoid({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 0);  // (1·1)·2 = 2 but 1·(1·2) = 0
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotAssociative);
    CHECK(err.witness().size() == 3);
  }
  try {
    validate_monoid({{0, 1}, {1, 5}}, 0);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("from_transformations builds T3 with 27 elements") {
  auto t3 = fixture_full_transformation(3);
  CHECK(t3.size() == 27);
  CHECK(idempotents(t3).size() == 10);

  // the standard three generators give the same monoid
  auto t3_gen = from_transformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}});
  CHECK(t3_gen.size() == 27);
  CHECK(monoid_isomorphic(t3, t3_gen).has_value());

  CHECK(from_transformations(1, {}).size() == 1);
}

TEST_CASE("opposite transposes the table") {
  auto m5 = fixture_m5();
  auto op = opposite(m5);
  for (Elt i = 0; i < 5; ++i)
    for (Elt j = 0; j < 5; ++j) CHECK(op.mul(i, j) == m5.mul(j, i));
  CHECK(opposite(fixture_trivial()) == fixture_trivial());
  // commutative monoids are isomorphic (equal, even) to their opposite
  auto c4 = fixture_cyclic(4);
  CHECK(opposite(c4) == c4);
}

TEST_CASE("idempotents of the worked examples") {
  auto sl2 = fixture_sl2();
  CHECK(idempotents(sl2) == std::vector<Elt>{0, 1});
  auto m5 = fixture_m5();
  CHECK(idempotents(m5) == std::vector<Elt>{0, 1, 2, 3});  // 1, 0, a, b
  CHECK_FALSE(m5.is_idempotent(4));                        // (ab)² = 0
}

TEST_CASE("principal ideals of m5") {
  auto m5 = fixture_m5();
  Elt a = by_name(m5, "a"), b = by_name(m5, "b"), zero = by_name(m5, "0"), one = by_name(m5, "1");
  CHECK(principal_ideal(m5, a, IdealKind::left).members() == std::vector<int>{zero, a});
  CHECK(principal_ideal(m5, b, IdealKind::left).members() ==
        std::vector<int>{zero, b, by_name(m5, "ab")});
  CHECK(principal_ideal(m5, b, IdealKind::two_sided).members() ==
        std::vector<int>{zero, b, by_name(m5, "ab")});
  CHECK(principal_ideal(m5, a, IdealKind::two_sided).members() ==
        std::vector<int>{zero, a, by_name(m5, "ab")});
  CHECK(principal_ideal(m5, one, IdealKind::left).count() == 5);
  CHECK(principal_ideal(m5, zero, IdealKind::left).members() == std::vector<int>{zero});
}

TEST_CASE("green J-classes of idempotents") {
  auto m5 = fixture_m5();
  CHECK(green_partition(m5, GreenRelation::J).num_classes() == 4);

  auto t3 = fixture_full_transformation(3);
  CHECK(green_partition(t3, GreenRelation::J).num_classes() == 3);

  // the identity's J-class is {e : MeM = M}
  auto sl2 = fixture_sl2();
  auto j = green_partition(sl2, GreenRelation::J);
  CHECK(j.num_classes() == 2);
}

TEST_CASE("green L and R relations on T2") {
  // the two constants of T2 generate the same left ideal but distinct right
  // ideals, so L merges them while R keeps them apart
  auto t2 = fixture_full_transformation(2);
  auto idems = idempotents(t2);
  CHECK(idems.size() == 3);
  auto l = green_partition(t2, GreenRelation::L);
  auto r = green_partition(t2, GreenRelation::R);
  auto jj = green_partition(t2, GreenRelation::J);
  CHECK(l.num_classes() == 2);
  CHECK(r.num_classes() == 3);
  CHECK(jj.num_classes() == 2);
}

TEST_CASE("opposite of m5 has the same point and ideal counts") {
  auto op = opposite(fixture_m5());
  CHECK(idempotents(op).size() == 4);
  CHECK(green_partition(op, GreenRelation::J).num_classes() == 4);
}

TEST_CASE("capacity guards") {
  // closure cap: the 27 maps of degree 3 cannot fit under a cap of 10
  CHECK_THROWS_AS(from_transformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}, 10), Error);
  try {
    from_transformations(3, {{1, 0, 2}, {1, 2, 0}, {0, 0, 2}}, 10);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ClosureTooLarge);
  }
}

TEST_CASE("quotient by a non-congruence is rejected") {
  auto m5 = fixture_m5();
  // merging 1 with a is not a congruence (b·1 = b vs b·a = 0 splits classes)
  UnionFind uf(5);
  uf.unite(0, 2);
  try {
    quotient_monoid(m5, MonoidCongruence{SetPartition::from_union_find(uf)});
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotACongruence);
  }
}

TEST_CASE("congruence closure and quotients") {
  auto m5 = fixture_m5();
  CHECK(congruence_closure(m5, {}).partition == SetPartition::discrete(5));

  auto [q, h] = quotient_monoid(m5, congruence_closure(m5, {}));
  CHECK(q.size() == 5);
  CHECK(monoid_isomorphic(q, m5).has_value());

  // {1,t} is already commutative: closure of commutativity seeds is discrete
  auto sl2 = fixture_sl2();
  std::vector<std::pair<Elt, Elt>> comm_seeds;
  for (Elt x = 0; x < 2; ++x)
    for (Elt y = 0; y < 2; ++y) comm_seeds.emplace_back(sl2.mul(x, y), sl2.mul(y, x));
  CHECK(congruence_closure(sl2, comm_seeds).partition == SetPartition::discrete(2));
}

TEST_CASE("semilattice quotient of m5 is the free 2-generator semilattice") {
  auto m5 = fixture_m5();
  auto [sl, q] = semilattice_quotient(m5);
  CHECK(sl.size() == 4);  // 0 and ab merge
  CHECK(sl.commutative());
  for (Elt x = 0; x < sl.size(); ++x) CHECK(sl.is_idempotent(x));
  CHECK(is_monoid_hom(m5, sl, q));
  CHECK(monoid_isomorphic(sl, fixture_sl2_square()).has_value());

  // oracle: among all monoid congruences of m5, the ones with commutative
  // idempotent quotient are exactly the coarsenings of the semilattice one,
  // so it is the finest and its quotient the largest such quotient
  auto fine = congruence_closure(m5, [&] {
    std::vector<std::pair<Elt, Elt>> seeds;
    for (Elt x = 0; x < 5; ++x) {
      seeds.emplace_back(m5.mul(x, x), x);
      for (Elt y = 0; y < 5; ++y) seeds.emplace_back(m5.mul(x, y), m5.mul(y, x));
    }
    return seeds;
  }());
  int candidates = 0;
  for_each_partition(5, [&](const SetPartition& p) {
    if (!is_monoid_congruence(m5, p)) return;
    auto [quot, proj] = quotient_monoid(m5, MonoidCongruence{p});
    bool sl_laws = quot.commutative();
    for (Elt x = 0; x < quot.size() && sl_laws; ++x)
      if (!quot.is_idempotent(x)) sl_laws = false;
    if (!sl_laws) return;
    ++candidates;
    // p must coarsen the closure: classes of `fine` sit inside classes of p
    for (Elt x = 0; x < 5; ++x)
      for (Elt y = 0; y < 5; ++y)
        if (fine.partition.same(x, y)) CHECK(p.same(x, y));
  });
  CHECK(candidates > 1);  // the total congruence also qualifies
}

TEST_CASE("semilattice quotient of a group is trivial") {
  for (int n = 2; n <= 5; ++n) {
    auto [sl, q] = semilattice_quotient(fixture_cyclic(n));
    CHECK(sl.size() == 1);
  }
  // and of a semilattice is itself
  auto sq = fixture_sl2_square();
  auto [sl, q] = semilattice_quotient(sq);
  CHECK(sl.size() == 4);
  CHECK(monoid_isomorphic(sl, sq).has_value());
  auto [sl2q, q2] = semilattice_quotient(fixture_sl2());
  CHECK(sl2q.size() == 2);
}

TEST_CASE("commutative quotient fixes commutative monoids") {
  auto c3 = fixture_cyclic(3);
  auto [com, q] = commutative_quotient(c3);
  CHECK(com.size() == 3);
}

TEST_CASE("spec of the worked examples") {
  CHECK(spec_prime_ideals(fixture_trivial()).size() == 1);  // just ∅

  auto sl2 = fixture_sl2();
  auto spec = spec_prime_ideals(sl2);
  REQUIRE(spec.size() == 2);
  CHECK(spec[0].none());
  CHECK(spec[1].members() == std::vector<int>{1});  // {t}

  // free semilattice on two generators: brute-force oracle over all 2^4 subsets
  auto sq = fixture_sl2_square();
  auto got = spec_prime_ideals(sq);
  std::set<std::vector<int>> expected;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    ElementSet p(4);
    for (int i = 0; i < 4; ++i)
      if ((mask >> i) & 1u) p.set(i);
    if (p.test(sq.identity())) continue;
    bool ideal = true, comp_closed = true;
    for (Elt x = 0; x < 4; ++x)
      for (Elt y = 0; y < 4; ++y) {
        if ((p.test(x) || p.test(y)) && !p.test(sq.mul(x, y))) ideal = false;
        if (!p.test(x) && !p.test(y) && p.test(sq.mul(x, y))) comp_closed = false;
      }
    if (ideal && comp_closed) expected.insert(p.members());
  }
  CHECK(expected.size() == 4);  // |Spec| = |M^sl| = 4
  std::set<std::vector<int>> got_set;
  for (const auto& p : got) got_set.insert(p.members());
  CHECK(got_set == expected);

  CHECK_THROWS_AS(spec_prime_ideals(fixture_m5()), Error);  // not commutative
}

TEST_CASE("monoid isomorphism search") {
  auto sl2 = fixture_sl2();
  auto c2 = fixture_cyclic(2);
  CHECK_FALSE(monoid_isomorphic(sl2, c2).has_value());  // t² = t vs t² = 1
  auto self = monoid_isomorphic(sl2, sl2);
  REQUIRE(self.has_value());
  CHECK(self->map == std::vector<Elt>{0, 1});
}

TEST_CASE("regularity") {
  CHECK(is_regular(fixture_cyclic(4)));
  CHECK(is_regular(fixture_full_transformation(3)));
  // {1, s, s²} with s³ = s²: s is not regular (s·x·s ∈ {s², ...} never s)
  auto m = validate_monoid({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
  bool oracle = true;
  for (Elt a = 0; a < 3; ++a) {
    bool found = false;
    for (Elt x = 0; x < 3; ++x)
      if (m.mul3(a, x, a) == a) found = true;
    oracle = oracle && found;
  }
  CHECK(is_regular(m) == oracle);
  CHECK_FALSE(is_regular(m));
}

TEST_CASE("subset role predicates") {
  auto m5 = fixture_m5();
  CHECK(is_submonoid(m5, ElementSet::of(5, {0})));
  CHECK(is_submonoid(m5, ElementSet::of(5, {0, 3})));           // {1, b}
  CHECK_FALSE(is_submonoid(m5, ElementSet::of(5, {0, 2, 3})));  // a·b = ab missing
  CHECK(is_two_sided_ideal(m5, ElementSet(5)));                 // ∅ is an ideal
  CHECK(is_right_ideal(m5, ElementSet::of(5, {1, 3})));         // {0, b}
  CHECK_FALSE(is_left_ideal(m5, ElementSet::of(5, {1, 3})));    // a·b = ab escapes
  CHECK(is_left_ideal(m5, ElementSet::of(5, {1, 2})));          // {0, a} = Ma
}

TEST_CASE("submonoid enumeration on m5") {
  auto subs = submonoids(fixture_m5());
  // every submonoid contains 1
  for (const auto& k : subs) CHECK(k.test(0));
  auto has = [&](std::vector<int> v) {
    return std::find_if(subs.begin(), subs.end(), [&](const ElementSet& s) {
             return s.members() == v;
           }) != subs.end();
  };
  CHECK(has({0}));
  CHECK(has({0, 1}));        // {1, 0}
  CHECK(has({0, 3}));        // {1, b}
  CHECK(has({0, 1, 2, 3, 4}));
  CHECK_FALSE(has({0, 2, 3}));
}
