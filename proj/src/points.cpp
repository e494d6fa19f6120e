#include "mtopos/points.hpp"

#include <algorithm>
#include <array>

namespace mtopos {

const char* filter_condition_name(FilterCondition c) {
  switch (c) {
    case FilterCondition::F1: return "F1";
    case FilterCondition::F2: return "F2";
    case FilterCondition::F3: return "F3";
  }
  return "?";
}

FilterednessReport is_filtered(const LeftMSet& a) {
  const int n = a.monoid.size(), k = a.carrier;
  if (k == 0) return {false, FilterCondition::F1, {}};

  // F2, lexicographic scan of (m1, m2, c) with m1·c = m2·c
  for (Elt m1 = 0; m1 < n; ++m1)
    for (Elt m2 = 0; m2 < n; ++m2) {
      if (m1 == m2) continue;  // m = 1, ã = c always works
      for (int c = 0; c < k; ++c) {
        if (a.act(m1, c) != a.act(m2, c)) continue;
        bool found = false;
        for (Elt m = 0; m < n && !found; ++m) {
          if (a.monoid.mul(m1, m) != a.monoid.mul(m2, m)) continue;
          for (int t = 0; t < k; ++t)
            if (a.act(m, t) == c) {
              found = true;
              break;
            }
        }
        if (!found) return {false, FilterCondition::F2, {m1, m2, c}};
      }
    }

  // F3
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = 0; c2 < k; ++c2) {
      bool found = false;
      for (int c = 0; c < k && !found; ++c) {
        bool hit1 = false, hit2 = false;
        for (Elt m = 0; m < n && !(hit1 && hit2); ++m) {
          if (a.act(m, c) == c1) hit1 = true;
          if (a.act(m, c) == c2) hit2 = true;
        }
        found = hit1 && hit2;
      }
      if (!found) return {false, FilterCondition::F3, {c1, c2}};
    }

  return {true, std::nullopt, {}};
}

FMonoidReport is_F_monoid(const FiniteMonoid& m, const ElementSet& k) {
  if (!is_submonoid(m, k)) fail(ErrorKind::NotASubmonoid, "F-monoid test needs a submonoid");
  const auto mem = k.members();
  for (Elt a : mem)
    for (Elt b : mem) {
      bool found = false;
      for (Elt x : mem)
        if (m.mul(a, x) == m.mul(b, x)) {
          found = true;
          break;
        }
      if (!found) return {false, std::make_pair(a, b)};
    }
  return {true, std::nullopt};
}

std::optional<Elt> right_zero(const FiniteMonoid& m, const ElementSet& k) {
  if (!is_submonoid(m, k)) fail(ErrorKind::NotASubmonoid, "right-zero scan needs a submonoid");
  for (Elt z : k.members()) {
    bool ok = true;
    for (Elt x : k.members())
      if (m.mul(x, z) != z) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  return std::nullopt;
}

namespace {

// least x ∈ K with a·x = x; exists in any F-monoid (pair a against 1)
Elt fixer_of(const FiniteMonoid& m, const std::vector<Elt>& kmem, Elt a) {
  for (Elt x : kmem)
    if (m.mul(a, x) == x) return x;
  fail(ErrorKind::NotAnFMonoid, "no fixer found; K is not an F-monoid", {a});
}

Elt equalizer_of(const FiniteMonoid& m, const std::vector<Elt>& kmem, Elt y1, Elt y2) {
  for (Elt z : kmem)
    if (m.mul(y1, z) == m.mul(y2, z)) return z;
  fail(ErrorKind::NotAnFMonoid, "no equalizer found; K is not an F-monoid", {y1, y2});
}

}  // namespace

Elt common_right_fixer(const FiniteMonoid& m, const ElementSet& k, const std::vector<Elt>& ms) {
  auto rep = is_F_monoid(m, k);
  if (!rep.verdict) fail(ErrorKind::NotAnFMonoid, "K is not an F-submonoid");
  for (Elt a : ms)
    if (!k.test(a)) fail(ErrorKind::IndexOutOfRange, "listed element outside K", {a});
  const auto kmem = k.members();
  if (ms.empty()) return m.identity();

  // the inductive construction: single fixers, then pairwise equalising
  Elt x = fixer_of(m, kmem, ms[0]);
  for (std::size_t i = 1; i < ms.size(); ++i) {
    Elt y1 = fixer_of(m, kmem, x);      // x·y1 = y1, and m_j·y1 = m_j·x·y1 = x·y1 = y1 for j < i
    Elt y2 = fixer_of(m, kmem, ms[i]);  // m_i·y2 = y2
    Elt z = equalizer_of(m, kmem, y1, y2);
    x = m.mul(y1, z);
  }
  for (Elt a : ms)
    if (m.mul(a, x) != x) fail(ErrorKind::InternalInvariant, "constructed fixer fails", {a, x});
  return x;
}

ElementSet saturation(const FiniteMonoid& m, const ElementSet& k) {
  if (!is_submonoid(m, k)) fail(ErrorKind::NotASubmonoid, "saturation needs a submonoid");
  ElementSet s = k;
  bool grew = true;
  while (grew) {
    grew = false;
    // stabilizer rule
    for (Elt x : s.members())
      for (Elt a = 0; a < m.size(); ++a)
        if (!s.test(a) && m.mul(a, x) == x) {
          s.set(a);
          grew = true;
        }
    // multiplicative closure
    auto mem = s.members();
    for (Elt a : mem)
      for (Elt b : mem) {
        Elt p = m.mul(a, b);
        if (!s.test(p)) {
          s.set(p);
          grew = true;
        }
      }
  }
  return s;
}

bool is_saturated(const FiniteMonoid& m, const ElementSet& k) {
  for (Elt x : k.members())
    for (Elt a = 0; a < m.size(); ++a)
      if (m.mul(a, x) == x && !k.test(a)) return false;
  return true;
}

FQuotient quotient_by_F_submonoid(const FiniteMonoid& m, const ElementSet& k) {
  auto rep = is_F_monoid(m, k);
  if (!rep.verdict) fail(ErrorKind::NotAnFMonoid, "quotient needs an F-submonoid");
  const int n = m.size();
  const auto kmem = k.members();

  // m ~ n iff some x ∈ K has m·x = n·x
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt x : kmem)
        if (m.mul(a, x) == m.mul(b, x)) {
          rel[a][b] = 1;
          break;
        }
  // transitivity always holds for F-submonoids; assert it rather than trust the table
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      for (Elt c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c] && !rel[a][c])
          fail(ErrorKind::InternalInvariant, "~K is not transitive", {a, b, c});

  UnionFind uf(n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = a + 1; b < n; ++b)
      if (rel[a][b]) uf.unite(a, b);
  auto cq = cyclic_from_congruence(m, SetPartition::from_union_find(uf));

  auto filt = is_filtered(cq.mset);
  if (!filt.verdict)
    fail(ErrorKind::InternalInvariant, "M/K is not filtered");
  return FQuotient{std::move(cq.mset), std::move(cq.projection), cq.generator};
}

CategoryI category_I(const FiniteMonoid& m) {
  CategoryI cat;
  cat.objects = idempotents(m);
  const int k = static_cast<int>(cat.objects.size());
  cat.hom.assign(k, std::vector<ElementSet>(k, ElementSet(m.size())));
  for (int fi = 0; fi < k; ++fi)
    for (int ei = 0; ei < k; ++ei) {
      ElementSet h(m.size());
      for (Elt x = 0; x < m.size(); ++x) h.set(m.mul3(cat.objects[fi], x, cat.objects[ei]));
      cat.hom[fi][ei] = h;
    }
  return cat;
}

std::optional<std::pair<Elt, Elt>> is_iso_pair(const FiniteMonoid& m, Elt e, Elt f) {
  // a ∈ eMf, b ∈ fMe with a·b = e, b·a = f
  for (Elt x = 0; x < m.size(); ++x) {
    Elt a = m.mul3(e, x, f);
    for (Elt y = 0; y < m.size(); ++y) {
      Elt b = m.mul3(f, y, e);
      if (m.mul(a, b) == e && m.mul(b, a) == f) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

PointsClassification classify_points(const FiniteMonoid& m) {
  PointsClassification pc;
  pc.idempotents = idempotents(m);
  pc.j_classes = green_partition(m, GreenRelation::J);
  for (int pos : pc.j_classes.representatives()) pc.representatives.push_back(pc.idempotents[pos]);
  pc.category = category_I(m);
  for (Elt e : pc.representatives) {
    auto filt = is_filtered(principal_left_mset(m, e));
    if (!filt.verdict)
      fail(ErrorKind::InternalInvariant, "Me is not filtered for representative", {e});
  }
  return pc;
}

std::vector<Elt> point_endo_carrier(const FiniteMonoid& m, Elt e) {
  ElementSet s(m.size());
  for (Elt x = 0; x < m.size(); ++x) s.set(m.mul3(e, x, e));
  return s.members();
}

FiniteMonoid endomorphism_monoid_of_point(const FiniteMonoid& m, Elt e) {
  if (!m.is_idempotent(e)) fail(ErrorKind::IndexOutOfRange, "not an idempotent", {e});
  const auto carrier = point_endo_carrier(m, e);
  std::vector<int> pos(m.size(), -1);
  for (std::size_t i = 0; i < carrier.size(); ++i) pos[carrier[i]] = static_cast<int>(i);
  const int k = static_cast<int>(carrier.size());
  std::vector<std::vector<Elt>> table(k, std::vector<Elt>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = pos[m.mul(carrier[j], carrier[i])];  // reversed
  std::vector<std::string> names;
  if (m.has_names()) {
    names.reserve(carrier.size());
    for (Elt x : carrier) names.push_back(m.display(x));
  }
  return validate_monoid(table, pos[e], std::move(names));
}

std::vector<int> induced_point_map(const FiniteMonoid& src, const FiniteMonoid& dst,
                                   const MonoidHom& f) {
  auto pc_src = classify_points(src);
  auto pc_dst = classify_points(dst);
  std::vector<int> out;
  out.reserve(pc_src.representatives.size());
  for (Elt e : pc_src.representatives) {
    auto induced = tensor_along_hom(src, dst, f, principal_left_mset(src, e));
    int found = -1;
    for (std::size_t c = 0; c < pc_dst.representatives.size(); ++c) {
      auto target = principal_left_mset(dst, pc_dst.representatives[c]);
      if (mset_isomorphic(induced.mset, target)) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0)
      fail(ErrorKind::ClassificationFailed, "induced M-set matches no Me'", {e});
    out.push_back(found);
  }
  return out;
}

CommonGenerator common_generator(const LeftMSet& a, const std::vector<int>& elems) {
  const int n = a.monoid.size(), k = a.carrier;
  if (k == 0) fail(ErrorKind::InternalInvariant, "common generator of an empty M-set");

  // F3 search for a pair, lexicographic
  auto pair_gen = [&](int a1, int a2) -> std::optional<std::array<int, 3>> {
    for (int c = 0; c < k; ++c)
      for (Elt m1 = 0; m1 < n; ++m1) {
        if (a.act(m1, c) != a1) continue;
        for (Elt m2 = 0; m2 < n; ++m2)
          if (a.act(m2, c) == a2) return std::array<int, 3>{m1, m2, c};
      }
    return std::nullopt;
  };

  if (elems.empty()) return CommonGenerator{{}, 0};
  std::vector<Elt> mult = {a.monoid.identity()};
  int c = elems[0];
  for (std::size_t i = 1; i < elems.size(); ++i) {
    auto step = pair_gen(c, elems[i]);
    if (!step)
      fail(ErrorKind::InternalInvariant, "F3 pair search failed on a filtered M-set",
           {c, elems[i]});
    auto [nprime, mk, cnew] = *step;
    for (Elt& mm : mult) mm = a.monoid.mul(mm, nprime);
    mult.push_back(mk);
    c = cnew;
  }
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (a.act(mult[i], c) != elems[i])
      fail(ErrorKind::InternalInvariant, "common generator construction failed",
           {static_cast<int>(i)});
  return CommonGenerator{std::move(mult), c};
}

}  // namespace mtopos
