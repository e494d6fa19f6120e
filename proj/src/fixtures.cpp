#include "mtopos/fixtures.hpp"

#include <algorithm>

namespace mtopos {

FiniteMonoid fixture_trivial() { return validate_monoid({{0}}, 0, {"1"}); }

FiniteMonoid fixture_sl2() { return validate_monoid({{0, 1}, {1, 1}}, 0, {"1", "t"}); }

FiniteMonoid fixture_m5() {
  // elements 1, 0, a, b, ab with a² = a, b² = b, ba = 0, zero element 0
  return validate_monoid(
      {
          {0, 1, 2, 3, 4},  // 1·x
          {1, 1, 1, 1, 1},  // 0·x
          {2, 1, 2, 4, 4},  // a·x
          {3, 1, 1, 3, 1},  // b·x
          {4, 1, 1, 4, 1},  // ab·x
      },
      0, {"1", "0", "a", "b", "ab"});
}

FiniteMonoid fixture_cyclic(int n) {
  if (n < 1 || n > 64) fail(ErrorKind::OrderTooLarge, "cyclic order out of range");
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i));
  return validate_monoid(table, 0, std::move(names));
}

FiniteMonoid fixture_full_transformation(int n) {
  if (n < 1 || n > 4) fail(ErrorKind::OrderTooLarge, "full transformation degree capped at 4");
  // all n^n maps as generators; closure discovers them breadth-first
  std::vector<std::vector<int>> gens;
  std::vector<int> cur(n, 0);
  while (true) {
    gens.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) break;
    ++cur[i];
    std::fill(cur.begin() + i + 1, cur.end(), 0);
  }
  return from_transformations(n, gens);
}

FiniteMonoid fixture_sl2_square() {
  auto sl2 = fixture_sl2();
  // product monoid {1,t} × {1,t}; index = 2*first + second
  std::vector<std::vector<Elt>> table(4, std::vector<Elt>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      table[i][j] = 2 * sl2.mul(i / 2, j / 2) + sl2.mul(i % 2, j % 2);
  return validate_monoid(table, 0, {"1", "b", "a", "ab"});
}

FiniteMonoid fixture_by_name(const std::string& name) {
  if (name == "trivial") return fixture_trivial();
  if (name == "sl2") return fixture_sl2();
  if (name == "m5") return fixture_m5();
  if (name == "t2") return fixture_full_transformation(2);
  if (name == "t3") return fixture_full_transformation(3);
  if (name == "c2") return fixture_cyclic(2);
  if (name == "c3") return fixture_cyclic(3);
  if (name == "c4") return fixture_cyclic(4);
  if (name == "sl2x2") return fixture_sl2_square();
  fail(ErrorKind::ParseError, "unknown fixture name: " + name);
}

std::vector<std::string> fixture_names() {
  return {"trivial", "sl2", "m5", "t2", "t3", "c2", "c3", "c4", "sl2x2"};
}

}  // namespace mtopos
