#include <doctest.h>

#include "mtopos/element_set.hpp"
#include "mtopos/partition.hpp"

using namespace mtopos;

TEST_CASE("element set basics") {
  ElementSet s(5);
  CHECK(s.none());
  s.set(1);
  s.set(4);
  CHECK(s.count() == 2);
  CHECK(s.members() == std::vector<int>{1, 4});
  CHECK(ElementSet::full(5).contains(s));
  CHECK_FALSE(s.contains(ElementSet::full(5)));
  CHECK((s | ElementSet::of(5, {0})).members() == std::vector<int>{0, 1, 4});
  CHECK((s & ElementSet::of(5, {4})).members() == std::vector<int>{4});
}

TEST_CASE("size-lex order sorts by cardinality first") {
  auto a = ElementSet::of(3, {0});
  auto b = ElementSet::of(3, {1, 2});
  auto c = ElementSet::of(3, {0, 1});
  CHECK(size_lex_less(a, b));
  CHECK(size_lex_less(c, b));  // same size, c has element 0
  CHECK_FALSE(size_lex_less(b, c));
}

TEST_CASE("partition enumeration hits the Bell numbers") {
  const std::uint64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n <= 7; ++n) {
    std::uint64_t count = 0;
    for_each_partition(n, [&](const SetPartition&) { ++count; });
    CHECK(count == bell[n]);
    CHECK(bell_number(n) == bell[n]);
  }
}

TEST_CASE("partition normalization orders classes by least member") {
  auto p = SetPartition::from_class_ids({7, 3, 7, 1});
  CHECK(p.num_classes() == 3);
  CHECK(p.class_of(0) == 0);
  CHECK(p.class_of(2) == 0);
  CHECK(p.class_of(1) == 1);
  CHECK(p.class_of(3) == 2);
  CHECK(p.representatives() == std::vector<int>{0, 1, 3});
}

TEST_CASE("union-find merges deterministically toward least roots") {
  UnionFind uf(6);
  CHECK(uf.unite(4, 2));
  CHECK(uf.unite(2, 0));
  CHECK_FALSE(uf.unite(0, 4));
  auto p = SetPartition::from_union_find(uf);
  CHECK(p.num_classes() == 4);
  CHECK(p.same(0, 4));
}
