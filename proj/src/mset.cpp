#include "mtopos/mset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mtopos {

LeftMSet validate_left_action(const FiniteMonoid& m, const std::vector<std::vector<int>>& table) {
  const int n = m.size();
  if (static_cast<int>(table.size()) != n)
    fail(ErrorKind::IndexOutOfRange, "action table must have one row per monoid element");
  const int k = table.empty() ? 0 : static_cast<int>(table[0].size());
  LeftMSet a{m, k, {}};
  a.action.resize(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != k)
      fail(ErrorKind::IndexOutOfRange, "ragged action table at row " + std::to_string(i), {i});
    for (int c = 0; c < k; ++c) {
      if (table[i][c] < 0 || table[i][c] >= k)
        fail(ErrorKind::IndexOutOfRange, "action entry out of range", {i, c});
      a.action[static_cast<std::size_t>(i) * k + c] = table[i][c];
    }
  }
  for (int c = 0; c < k; ++c)
    if (a.act(m.identity(), c) != c)
      fail(ErrorKind::IdentityActionFails, "carrier element " + std::to_string(c), {c});
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      for (int c = 0; c < k; ++c)
        if (a.act(m.mul(x, y), c) != a.act(x, a.act(y, c)))
          fail(ErrorKind::ActionNotAssociative, "(m,n,a) = (" + std::to_string(x) + "," +
               std::to_string(y) + "," + std::to_string(c) + ")", {x, y, c});
  return a;
}

RightMSet validate_right_action(const FiniteMonoid& m, const std::vector<std::vector<int>>& table) {
  const int n = m.size();
  const int k = static_cast<int>(table.size());
  RightMSet a{m, k, {}};
  a.action.resize(static_cast<std::size_t>(k) * n);
  for (int c = 0; c < k; ++c) {
    if (static_cast<int>(table[c].size()) != n)
      fail(ErrorKind::IndexOutOfRange, "action table must have one column per monoid element", {c});
    for (int i = 0; i < n; ++i) {
      if (table[c][i] < 0 || table[c][i] >= k)
        fail(ErrorKind::IndexOutOfRange, "action entry out of range", {c, i});
      a.action[static_cast<std::size_t>(c) * n + i] = table[c][i];
    }
  }
  for (int c = 0; c < k; ++c)
    if (a.act(c, m.identity()) != c)
      fail(ErrorKind::IdentityActionFails, "carrier element " + std::to_string(c), {c});
  for (int c = 0; c < k; ++c)
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y)
        if (a.act(c, m.mul(x, y)) != a.act(a.act(c, x), y))
          fail(ErrorKind::ActionNotAssociative, "(a,m,n) = (" + std::to_string(c) + "," +
               std::to_string(x) + "," + std::to_string(y) + ")", {c, x, y});
  return a;
}

LeftMSet regular_left_mset(const FiniteMonoid& m) {
  LeftMSet a{m, m.size(), m.flat_table()};
  return a;
}

RightMSet regular_right_mset(const FiniteMonoid& m) {
  RightMSet a{m, m.size(), m.flat_table()};
  return a;
}

LeftMSet singleton_left_mset(const FiniteMonoid& m) {
  LeftMSet a{m, 1, std::vector<int>(m.size(), 0)};
  return a;
}

LeftMSet empty_left_mset(const FiniteMonoid& m) { return LeftMSet{m, 0, {}}; }

LeftMSet left_ideal_mset(const FiniteMonoid& m, const ElementSet& ideal) {
  const auto mem = ideal.members();
  std::vector<int> pos(m.size(), -1);
  for (std::size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = static_cast<int>(i);
  LeftMSet a{m, static_cast<int>(mem.size()), {}};
  a.action.resize(static_cast<std::size_t>(m.size()) * mem.size());
  for (Elt x = 0; x < m.size(); ++x)
    for (std::size_t i = 0; i < mem.size(); ++i) {
      int p = pos[m.mul(x, mem[i])];
      if (p < 0) fail(ErrorKind::NotARightIdeal, "subset is not stable under the left action");
      a.action[static_cast<std::size_t>(x) * mem.size() + i] = p;
    }
  return a;
}

RightMSet right_ideal_mset(const FiniteMonoid& m, const ElementSet& ideal) {
  const auto mem = ideal.members();
  std::vector<int> pos(m.size(), -1);
  for (std::size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = static_cast<int>(i);
  RightMSet a{m, static_cast<int>(mem.size()), {}};
  a.action.resize(mem.size() * static_cast<std::size_t>(m.size()));
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (Elt x = 0; x < m.size(); ++x) {
      int p = pos[m.mul(mem[i], x)];
      if (p < 0) fail(ErrorKind::NotARightIdeal, "subset is not stable under the right action");
      a.action[i * m.size() + x] = p;
    }
  return a;
}

LeftMSet principal_left_mset(const FiniteMonoid& m, Elt e) {
  return left_ideal_mset(m, principal_ideal(m, e, IdealKind::left));
}

LeftMSet disjoint_union(const LeftMSet& a, const LeftMSet& b) {
  LeftMSet u{a.monoid, a.carrier + b.carrier, {}};
  const int k = u.carrier;
  u.action.resize(static_cast<std::size_t>(a.monoid.size()) * k);
  for (Elt x = 0; x < a.monoid.size(); ++x) {
    for (int c = 0; c < a.carrier; ++c)
      u.action[static_cast<std::size_t>(x) * k + c] = a.act(x, c);
    for (int c = 0; c < b.carrier; ++c)
      u.action[static_cast<std::size_t>(x) * k + a.carrier + c] = a.carrier + b.act(x, c);
  }
  return u;
}

bool is_mset_congruence(const LeftMSet& a, const SetPartition& p) {
  if (p.size() != a.carrier) return false;
  for (int x = 0; x < a.carrier; ++x)
    for (int y = x + 1; y < a.carrier; ++y) {
      if (!p.same(x, y)) continue;
      for (Elt m = 0; m < a.monoid.size(); ++m)
        if (!p.same(a.act(m, x), a.act(m, y))) return false;
    }
  return true;
}

bool is_mset_congruence(const RightMSet& a, const SetPartition& p) {
  if (p.size() != a.carrier) return false;
  for (int x = 0; x < a.carrier; ++x)
    for (int y = x + 1; y < a.carrier; ++y) {
      if (!p.same(x, y)) continue;
      for (Elt m = 0; m < a.monoid.size(); ++m)
        if (!p.same(a.act(x, m), a.act(y, m))) return false;
    }
  return true;
}

bool is_equivariant(const LeftMSet& a, const LeftMSet& b, const EquivariantMap& f) {
  if (static_cast<int>(f.map.size()) != a.carrier) return false;
  for (int v : f.map)
    if (v < 0 || v >= b.carrier) return false;
  for (Elt m = 0; m < a.monoid.size(); ++m)
    for (int x = 0; x < a.carrier; ++x)
      if (f.map[a.act(m, x)] != b.act(m, f.map[x])) return false;
  return true;
}

bool is_equivariant(const RightMSet& a, const RightMSet& b, const EquivariantMap& f) {
  if (static_cast<int>(f.map.size()) != a.carrier) return false;
  for (int v : f.map)
    if (v < 0 || v >= b.carrier) return false;
  for (Elt m = 0; m < a.monoid.size(); ++m)
    for (int x = 0; x < a.carrier; ++x)
      if (f.map[a.act(x, m)] != b.act(f.map[x], m)) return false;
  return true;
}

std::pair<LeftMSet, std::vector<int>> quotient_mset(const LeftMSet& a, const SetPartition& p) {
  if (!is_mset_congruence(a, p))
    fail(ErrorKind::NotACongruence, "partition is not an M-congruence");
  const auto reps = p.representatives();
  const int k = p.num_classes();
  LeftMSet q{a.monoid, k, {}};
  q.action.resize(static_cast<std::size_t>(a.monoid.size()) * k);
  for (Elt m = 0; m < a.monoid.size(); ++m)
    for (int c = 0; c < k; ++c)
      q.action[static_cast<std::size_t>(m) * k + c] = p.class_of(a.act(m, reps[c]));
  std::vector<int> proj(a.carrier);
  for (int x = 0; x < a.carrier; ++x) proj[x] = p.class_of(x);
  return {std::move(q), std::move(proj)};
}

CyclicQuotient cyclic_from_congruence(const FiniteMonoid& m, const SetPartition& p) {
  auto [q, proj] = quotient_mset(regular_left_mset(m), p);
  return CyclicQuotient{std::move(q), std::move(proj), p.class_of(m.identity())};
}

ElementSet k_rho(const LeftMSet& a, const SetPartition& p, int elem) {
  ElementSet k(a.monoid.size());
  for (Elt x = 0; x < a.monoid.size(); ++x)
    if (p.same(a.act(x, elem), elem)) k.set(x);
  if (!is_submonoid(a.monoid, k))
    fail(ErrorKind::InternalInvariant, "K_rho is not a submonoid");
  return k;
}

// --------------------------------------------------------------------------
// hom-set enumeration
//
// An equivariant map is fixed by its images on a generating set; we pick
// generators greedily, then backtrack over their images, forcing the rest of
// the carrier through the action and pruning on conflicts.

namespace {

struct ActionView {
  // orbit(m, x) for the relevant side
  std::function<int(Elt, int)> a_act, b_act;
  int a_size, b_size, m_size;
};

std::vector<int> greedy_generators(const ActionView& v) {
  std::vector<char> reached(v.a_size, 0);
  std::vector<int> gens;
  for (int x = 0; x < v.a_size; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    for (Elt m = 0; m < v.m_size; ++m) reached[v.a_act(m, x)] = 1;
  }
  return gens;
}

void hom_backtrack(const ActionView& v, std::vector<EquivariantMap>& out,
                   bool stop_at_first_bijection) {
  const auto gens = greedy_generators(v);
  std::vector<int> phi(v.a_size, -1);
  std::vector<int> used(v.b_size, 0);  // only meaningful for bijection search

  // trail for undo: positions assigned at each depth
  std::function<bool(std::size_t)> rec = [&](std::size_t gi) -> bool {
    if (gi == gens.size()) {
      // everything is assigned (gens generate); final equivariance sweep
      for (Elt m = 0; m < v.m_size; ++m)
        for (int x = 0; x < v.a_size; ++x)
          if (phi[v.a_act(m, x)] != v.b_act(m, phi[x])) return false;
      if (stop_at_first_bijection) {
        std::vector<char> hit(v.b_size, 0);
        for (int t : phi) {
          if (hit[t]) return false;
          hit[t] = 1;
        }
        out.push_back(EquivariantMap{phi});
        return true;
      }
      out.push_back(EquivariantMap{phi});
      return false;
    }
    const int g = gens[gi];
    for (int img = 0; img < v.b_size; ++img) {
      if (stop_at_first_bijection && used[img]) continue;
      std::vector<std::pair<int, int>> trail;  // (position, previous value)
      bool ok = true;
      auto assign = [&](int pos, int val) {
        if (phi[pos] == val) return true;
        if (phi[pos] != -1) return false;
        trail.emplace_back(pos, phi[pos]);
        phi[pos] = val;
        return true;
      };
      if (assign(g, img)) {
        for (Elt m = 0; m < v.m_size && ok; ++m)
          ok = assign(v.a_act(m, g), v.b_act(m, img));
      } else {
        ok = false;
      }
      if (ok && stop_at_first_bijection) {
        // injectivity among newly assigned values
        for (auto& [pos, prev] : trail) {
          (void)prev;
          if (used[phi[pos]]++) ok = false;
        }
        if (!ok) {
          for (auto& [pos, prev] : trail) --used[phi[pos]];
        }
      }
      if (ok && rec(gi + 1)) return true;
      if (stop_at_first_bijection && ok)
        for (auto& [pos, prev] : trail) --used[phi[pos]];
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) phi[it->first] = it->second;
    }
    return false;
  };

  if (v.a_size == 0) {
    out.push_back(EquivariantMap{{}});
    return;
  }
  rec(0);
}

ActionView left_view(const LeftMSet& a, const LeftMSet& b) {
  return ActionView{[&a](Elt m, int x) { return a.act(m, x); },
                    [&b](Elt m, int x) { return b.act(m, x); }, a.carrier, b.carrier,
                    a.monoid.size()};
}

ActionView right_view(const RightMSet& a, const RightMSet& b) {
  return ActionView{[&a](Elt m, int x) { return a.act(x, m); },
                    [&b](Elt m, int x) { return b.act(x, m); }, a.carrier, b.carrier,
                    a.monoid.size()};
}

}  // namespace

std::vector<EquivariantMap> mset_hom_set(const LeftMSet& a, const LeftMSet& b) {
  std::vector<EquivariantMap> out;
  hom_backtrack(left_view(a, b), out, false);
  std::sort(out.begin(), out.end(),
            [](const EquivariantMap& x, const EquivariantMap& y) { return x.map < y.map; });
  return out;
}

std::vector<EquivariantMap> mset_hom_set(const RightMSet& a, const RightMSet& b) {
  std::vector<EquivariantMap> out;
  hom_backtrack(right_view(a, b), out, false);
  std::sort(out.begin(), out.end(),
            [](const EquivariantMap& x, const EquivariantMap& y) { return x.map < y.map; });
  return out;
}

std::optional<EquivariantMap> mset_isomorphic(const LeftMSet& a, const LeftMSet& b) {
  if (a.carrier != b.carrier) return std::nullopt;
  if (a.carrier == 0) return EquivariantMap{{}};
  std::vector<EquivariantMap> out;
  hom_backtrack(left_view(a, b), out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::optional<EquivariantMap> mset_isomorphic(const RightMSet& a, const RightMSet& b) {
  if (a.carrier != b.carrier) return std::nullopt;
  if (a.carrier == 0) return EquivariantMap{{}};
  std::vector<EquivariantMap> out;
  hom_backtrack(right_view(a, b), out, true);
  if (out.empty()) return std::nullopt;
  return out.front();
}

// --------------------------------------------------------------------------
// tensor product

TensorResult tensor(const RightMSet& x, const LeftMSet& a) {
  const int nx = x.carrier, na = a.carrier;
  TensorResult t;
  t.a_carrier = na;
  const int total = nx * na;
  if (total == 0) {
    t.size = 0;
    return t;
  }
  UnionFind uf(total);
  auto node = [na](int xi, int ai) { return xi * na + ai; };
  for (int xi = 0; xi < nx; ++xi)
    for (Elt m = 0; m < x.monoid.size(); ++m)
      for (int ai = 0; ai < na; ++ai)
        uf.unite(node(x.act(xi, m), ai), node(xi, a.act(m, ai)));
  SetPartition p = SetPartition::from_union_find(uf);
  t.size = p.num_classes();
  t.class_of.resize(total);
  for (int i = 0; i < total; ++i) t.class_of[i] = p.class_of(i);
  t.reps.resize(t.size);
  for (int i = total - 1; i >= 0; --i) t.reps[p.class_of(i)] = {i / na, i % na};
  return t;
}

InducedMSet tensor_along_hom(const FiniteMonoid& src, const FiniteMonoid& dst,
                             const MonoidHom& f, const LeftMSet& a) {
  if (!is_monoid_hom(src, dst, f))
    fail(ErrorKind::InternalInvariant, "tensor_along_hom needs a homomorphism");
  // the carrier of dst as a right src-set via f
  RightMSet x{src, dst.size(), {}};
  x.action.resize(static_cast<std::size_t>(dst.size()) * src.size());
  for (int d = 0; d < dst.size(); ++d)
    for (Elt s = 0; s < src.size(); ++s)
      x.action[static_cast<std::size_t>(d) * src.size() + s] = dst.mul(d, f(s));

  TensorResult t = tensor(x, a);
  LeftMSet out{dst, t.size, {}};
  out.action.resize(static_cast<std::size_t>(dst.size()) * t.size);
  for (Elt m2 = 0; m2 < dst.size(); ++m2)
    for (int c = 0; c < t.size; ++c) {
      auto [xi, ai] = t.reps[c];
      out.action[static_cast<std::size_t>(m2) * t.size + c] = t.cls(dst.mul(m2, xi), ai);
    }
  // the action is well-defined on classes; validate_left_action re-checks laws
  return InducedMSet{validate_left_action(dst, [&] {
                       std::vector<std::vector<int>> rows(dst.size(), std::vector<int>(t.size));
                       for (Elt m2 = 0; m2 < dst.size(); ++m2)
                         for (int c = 0; c < t.size; ++c)
                           rows[m2][c] = out.action[static_cast<std::size_t>(m2) * t.size + c];
                       return rows;
                     }()),
                     std::move(t)};
}

RightMSet hom_set_as_right_mset(const LeftMSet& a, int y_size, std::size_t cap) {
  if (y_size <= 0) fail(ErrorKind::IndexOutOfRange, "target set must be nonempty");
  std::size_t carrier = 1;
  for (int i = 0; i < a.carrier; ++i) {
    carrier *= static_cast<std::size_t>(y_size);
    if (carrier > cap) fail(ErrorKind::CarrierTooLarge, "|Y|^|A| exceeds cap");
  }
  const int n = a.monoid.size();
  RightMSet h{a.monoid, static_cast<int>(carrier), {}};
  h.action.resize(carrier * static_cast<std::size_t>(n));
  std::vector<int> digits(a.carrier), moved(a.carrier);
  for (std::size_t idx = 0; idx < carrier; ++idx) {
    // decode idx into the map alpha
    std::size_t v = idx;
    for (int i = 0; i < a.carrier; ++i) {
      digits[i] = static_cast<int>(v % y_size);
      v /= y_size;
    }
    for (Elt m = 0; m < n; ++m) {
      // (alpha·m)(c) = alpha(m·c)
      for (int c = 0; c < a.carrier; ++c) moved[c] = digits[a.act(m, c)];
      std::size_t enc = 0;
      for (int c = a.carrier - 1; c >= 0; --c) enc = enc * y_size + moved[c];
      h.action[idx * n + m] = static_cast<int>(enc);
    }
  }
  return h;
}

std::vector<int> hom_mset_decode(int index, int a_carrier, int y_size) {
  std::vector<int> digits(a_carrier);
  std::size_t v = static_cast<std::size_t>(index);
  for (int i = 0; i < a_carrier; ++i) {
    digits[i] = static_cast<int>(v % y_size);
    v /= y_size;
  }
  return digits;
}

int hom_mset_encode(const std::vector<int>& digits, int y_size) {
  std::size_t enc = 0;
  for (int c = static_cast<int>(digits.size()) - 1; c >= 0; --c)
    enc = enc * y_size + digits[c];
  return static_cast<int>(enc);
}

}  // namespace mtopos
