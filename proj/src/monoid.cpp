#include "mtopos/monoid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace mtopos {

bool FiniteMonoid::commutative() const {
  for (Elt a = 0; a < n_; ++a)
    for (Elt b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteMonoid::display(Elt a) const {
  if (has_names()) return names_[a];
  return std::to_string(a);
}

std::vector<std::vector<Elt>> FiniteMonoid::table_rows() const {
  std::vector<std::vector<Elt>> rows(n_, std::vector<Elt>(n_));
  for (Elt i = 0; i < n_; ++i)
    for (Elt j = 0; j < n_; ++j) rows[i][j] = mul(i, j);
  return rows;
}

bool is_monoid_hom(const FiniteMonoid& src, const FiniteMonoid& dst, const MonoidHom& h) {
  if (static_cast<int>(h.map.size()) != src.size()) return false;
  for (Elt x : h.map)
    if (x < 0 || x >= dst.size()) return false;
  if (h.map[src.identity()] != dst.identity()) return false;
  for (Elt a = 0; a < src.size(); ++a)
    for (Elt b = 0; b < src.size(); ++b)
      if (h.map[src.mul(a, b)] != dst.mul(h.map[a], h.map[b])) return false;
  return true;
}

bool is_monoid_congruence(const FiniteMonoid& m, const SetPartition& p) {
  if (p.size() != m.size()) return false;
  for (Elt a = 0; a < m.size(); ++a)
    for (Elt b = a + 1; b < m.size(); ++b) {
      if (!p.same(a, b)) continue;
      for (Elt x = 0; x < m.size(); ++x) {
        if (!p.same(m.mul(x, a), m.mul(x, b))) return false;
        if (!p.same(m.mul(a, x), m.mul(b, x))) return false;
      }
    }
  return true;
}

FiniteMonoid validate_monoid(const std::vector<std::vector<Elt>>& table, Elt identity,
                             std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n <= 0) fail(ErrorKind::IndexOutOfRange, "empty table");
  if (identity < 0 || identity >= n)
    fail(ErrorKind::IndexOutOfRange, "identity index " + std::to_string(identity), {identity});
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(ErrorKind::IndexOutOfRange, "table is not square at row " + std::to_string(i), {i});
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(ErrorKind::IndexOutOfRange,
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ")", {i, j});
  }
  if (!names.empty() && static_cast<int>(names.size()) != n)
    fail(ErrorKind::IndexOutOfRange, "names length != size");

  for (int i = 0; i < n; ++i)
    if (table[identity][i] != i || table[i][identity] != i)
      fail(ErrorKind::IdentityLawFails, "element " + std::to_string(i), {i});

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          fail(ErrorKind::NotAssociative,
               "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")",
               {i, j, k});

  FiniteMonoid m;
  m.n_ = n;
  m.id_ = identity;
  m.tab_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.tab_[static_cast<std::size_t>(i) * n + j] = table[i][j];
  m.names_ = std::move(names);
  return m;
}

FiniteMonoid from_transformations(int degree, const std::vector<std::vector<int>>& generators,
                                  std::size_t cap) {
  if (degree <= 0) fail(ErrorKind::IndexOutOfRange, "degree must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree)
      fail(ErrorKind::IndexOutOfRange, "generator arity != degree");
    for (int v : g)
      if (v < 0 || v >= degree) fail(ErrorKind::IndexOutOfRange, "generator image out of range");
  }

  using Map = std::vector<int>;
  Map id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  auto compose = [degree](const Map& f, const Map& g) {
    Map h(degree);
    for (int x = 0; x < degree; ++x) h[x] = f[g[x]];
    return h;
  };

  std::vector<Map> elems;
  std::map<Map, int> index;
  std::queue<int> todo;
  auto discover = [&](const Map& f) {
    auto it = index.find(f);
    if (it != index.end()) return it->second;
    int id_new = static_cast<int>(elems.size());
    if (elems.size() >= cap) fail(ErrorKind::ClosureTooLarge, "transformation closure exceeds cap");
    elems.push_back(f);
    index.emplace(f, id_new);
    todo.push(id_new);
    return id_new;
  };

  discover(id);
  for (const auto& g : generators) discover(g);
  // breadth-first right-multiplication by generators reaches every word and
  // keeps the numbering stable
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (const auto& g : generators) discover(compose(elems[cur], g));
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));

  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    std::string s;
    for (int x = 0; x < degree; ++x) {
      if (degree > 10 && x > 0) s += ".";
      s += std::to_string(elems[i][x]);
    }
    names[i] = s;
  }
  return validate_monoid(table, 0, std::move(names));
}

FiniteMonoid opposite(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
  for (Elt i = 0; i < n; ++i)
    for (Elt j = 0; j < n; ++j) table[i][j] = m.mul(j, i);
  return validate_monoid(table, m.identity(), m.names());
}

std::vector<Elt> idempotents(const FiniteMonoid& m) {
  std::vector<Elt> out;
  for (Elt e = 0; e < m.size(); ++e)
    if (m.is_idempotent(e)) out.push_back(e);
  return out;
}

ElementSet principal_ideal(const FiniteMonoid& m, Elt x, IdealKind kind) {
  const int n = m.size();
  ElementSet s(n);
  switch (kind) {
    case IdealKind::left:
      for (Elt a = 0; a < n; ++a) s.set(m.mul(a, x));
      break;
    case IdealKind::right:
      for (Elt a = 0; a < n; ++a) s.set(m.mul(x, a));
      break;
    case IdealKind::two_sided:
      for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) s.set(m.mul3(a, x, b));
      break;
  }
  return s;
}

SetPartition green_partition(const FiniteMonoid& m, GreenRelation rel) {
  const auto idems = idempotents(m);
  IdealKind kind = rel == GreenRelation::L   ? IdealKind::left
                   : rel == GreenRelation::R ? IdealKind::right
                                             : IdealKind::two_sided;
  std::vector<ElementSet> ideals;
  ideals.reserve(idems.size());
  for (Elt e : idems) ideals.push_back(principal_ideal(m, e, kind));

  std::vector<int> raw(idems.size());
  for (std::size_t i = 0; i < idems.size(); ++i) {
    raw[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < i; ++j)
      if (ideals[j] == ideals[i]) {
        raw[i] = raw[j];
        break;
      }
  }
  return SetPartition::from_class_ids(raw);
}

MonoidCongruence congruence_closure(const FiniteMonoid& m,
                                    const std::vector<std::pair<Elt, Elt>>& seeds) {
  const int n = m.size();
  UnionFind uf(n);
  std::queue<std::pair<Elt, Elt>> work;
  auto merge = [&](Elt a, Elt b) {
    if (uf.unite(a, b)) work.emplace(a, b);
  };
  for (auto [a, b] : seeds) merge(a, b);
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop();
    for (Elt x = 0; x < n; ++x) {
      merge(m.mul(x, a), m.mul(x, b));
      merge(m.mul(a, x), m.mul(b, x));
    }
  }
  return MonoidCongruence{SetPartition::from_union_find(uf)};
}

std::pair<FiniteMonoid, MonoidHom> quotient_monoid(const FiniteMonoid& m,
                                                   const MonoidCongruence& c) {
  if (!is_monoid_congruence(m, c.partition))
    fail(ErrorKind::NotACongruence, "partition is not a monoid congruence");
  const auto& p = c.partition;
  const auto reps = p.representatives();
  const int k = p.num_classes();
  std::vector<std::vector<Elt>> table(k, std::vector<Elt>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i][j] = p.class_of(m.mul(reps[i], reps[j]));

  std::vector<std::string> names;
  if (m.has_names()) {
    names.resize(k);
    auto classes = p.classes();
    for (int i = 0; i < k; ++i) {
      if (classes[i].size() == 1) {
        names[i] = m.display(classes[i][0]);
      } else {
        std::string s = "{";
        for (std::size_t t = 0; t < classes[i].size(); ++t) {
          if (t) s += ",";
          s += m.display(classes[i][t]);
        }
        names[i] = s + "}";
      }
    }
  }
  MonoidHom h;
  h.map.resize(m.size());
  for (Elt x = 0; x < m.size(); ++x) h.map[x] = p.class_of(x);
  return {validate_monoid(table, p.class_of(m.identity()), std::move(names)), std::move(h)};
}

std::pair<FiniteMonoid, MonoidHom> commutative_quotient(const FiniteMonoid& m) {
  std::vector<std::pair<Elt, Elt>> seeds;
  for (Elt x = 0; x < m.size(); ++x)
    for (Elt y = x + 1; y < m.size(); ++y) seeds.emplace_back(m.mul(x, y), m.mul(y, x));
  return quotient_monoid(m, congruence_closure(m, seeds));
}

std::pair<FiniteMonoid, MonoidHom> semilattice_quotient(const FiniteMonoid& m) {
  std::vector<std::pair<Elt, Elt>> seeds;
  for (Elt x = 0; x < m.size(); ++x) {
    seeds.emplace_back(m.mul(x, x), x);
    for (Elt y = x + 1; y < m.size(); ++y) seeds.emplace_back(m.mul(x, y), m.mul(y, x));
  }
  return quotient_monoid(m, congruence_closure(m, seeds));
}

std::vector<ElementSet> spec_prime_ideals(const FiniteMonoid& m) {
  if (!m.commutative()) fail(ErrorKind::NotCommutative, "Spec needs a commutative monoid");
  const int n = m.size();
  std::vector<ElementSet> out;
  // complement-is-a-submonoid scan; p = M is excluded since ∅ has no identity
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    ElementSet p(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) p.set(i);
    if (p.test(m.identity())) continue;
    bool ok = true;
    for (Elt a = 0; a < n && ok; ++a)
      for (Elt b = 0; b < n && ok; ++b) {
        bool ain = p.test(a), bin = p.test(b), pin = p.test(m.mul(a, b));
        if ((ain || bin) && !pin) ok = false;        // ideal
        if (!ain && !bin && pin) ok = false;         // complement closed
      }
    if (ok) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

bool is_regular(const FiniteMonoid& m) {
  for (Elt a = 0; a < m.size(); ++a) {
    bool found = false;
    for (Elt x = 0; x < m.size() && !found; ++x)
      if (m.mul3(a, x, a) == a) found = true;
    if (!found) return false;
  }
  return true;
}

bool is_submonoid(const FiniteMonoid& m, const ElementSet& s) {
  if (!s.test(m.identity())) return false;
  const auto mem = s.members();
  for (int a : mem)
    for (int b : mem)
      if (!s.test(m.mul(a, b))) return false;
  return true;
}

bool is_left_ideal(const FiniteMonoid& m, const ElementSet& s) {
  for (int a : s.members())
    for (Elt x = 0; x < m.size(); ++x)
      if (!s.test(m.mul(x, a))) return false;
  return true;
}

bool is_right_ideal(const FiniteMonoid& m, const ElementSet& s) {
  for (int a : s.members())
    for (Elt x = 0; x < m.size(); ++x)
      if (!s.test(m.mul(a, x))) return false;
  return true;
}

bool is_two_sided_ideal(const FiniteMonoid& m, const ElementSet& s) {
  return is_left_ideal(m, s) && is_right_ideal(m, s);
}

ElementSet set_product(const FiniteMonoid& m, const ElementSet& s, const ElementSet& t) {
  ElementSet out(m.size());
  for (int a : s.members())
    for (int b : t.members()) out.set(m.mul(a, b));
  return out;
}

std::vector<ElementSet> submonoids(const FiniteMonoid& m, int max_order) {
  const int n = m.size();
  if (n > max_order)
    fail(ErrorKind::OrderTooLarge, "submonoid scan capped at order " + std::to_string(max_order));
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    if (!((mask >> m.identity()) & 1u)) continue;
    ElementSet s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) s.set(i);
    if (is_submonoid(m, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

// --------------------------------------------------------------------------
// isomorphism search

namespace {

// invariant profile of an element, preserved by any isomorphism
struct EltProfile {
  bool idem;
  int left_sz, right_sz, two_sz;
  int power_index, power_period;  // m, m², … eventually cycles
  bool operator==(const EltProfile&) const = default;
  auto key() const {
    return std::tuple(idem, left_sz, right_sz, two_sz, power_index, power_period);
  }
};

EltProfile profile_of(const FiniteMonoid& m, Elt a) {
  EltProfile p;
  p.idem = m.is_idempotent(a);
  p.left_sz = principal_ideal(m, a, IdealKind::left).count();
  p.right_sz = principal_ideal(m, a, IdealKind::right).count();
  p.two_sz = principal_ideal(m, a, IdealKind::two_sided).count();
  std::vector<Elt> seen;
  Elt cur = a;
  while (true) {
    auto it = std::find(seen.begin(), seen.end(), cur);
    if (it != seen.end()) {
      p.power_index = static_cast<int>(it - seen.begin());
      p.power_period = static_cast<int>(seen.end() - it);
      break;
    }
    seen.push_back(cur);
    cur = m.mul(cur, a);
  }
  return p;
}

std::vector<Elt> generating_set(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<Elt> gens;
  std::vector<char> reach(n, 0);
  auto close = [&]() {
    std::vector<Elt> frontier;
    reach[m.identity()] = 1;
    for (Elt x = 0; x < n; ++x)
      if (reach[x]) frontier.push_back(x);
    while (!frontier.empty()) {
      std::vector<Elt> next;
      for (Elt x : frontier)
        for (Elt y = 0; y < n; ++y) {
          if (!reach[y]) continue;
          for (Elt p : {m.mul(x, y), m.mul(y, x)})
            if (!reach[p]) {
              reach[p] = 1;
              next.push_back(p);
            }
        }
      frontier = std::move(next);
    }
  };
  close();
  for (Elt x = 0; x < n; ++x) {
    if (reach[x]) continue;
    gens.push_back(x);
    reach[x] = 1;
    close();
  }
  return gens;
}

// extend generator images to a full map by closing products; empty on conflict
std::optional<std::vector<Elt>> extend_hom(const FiniteMonoid& a, const FiniteMonoid& b,
                                           const std::vector<Elt>& gens,
                                           const std::vector<Elt>& images) {
  const int n = a.size();
  std::vector<Elt> phi(n, -1);
  phi[a.identity()] = b.identity();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (phi[gens[i]] != -1 && phi[gens[i]] != images[i]) return std::nullopt;
    phi[gens[i]] = images[i];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elt x = 0; x < n; ++x) {
      if (phi[x] == -1) continue;
      for (Elt y = 0; y < n; ++y) {
        if (phi[y] == -1) continue;
        Elt p = a.mul(x, y), q = b.mul(phi[x], phi[y]);
        if (phi[p] == -1) {
          phi[p] = q;
          changed = true;
        } else if (phi[p] != q) {
          return std::nullopt;
        }
      }
    }
  }
  for (Elt x = 0; x < n; ++x)
    if (phi[x] == -1) return std::nullopt;  // gens failed to generate
  return phi;
}

}  // namespace

std::optional<MonoidHom> monoid_isomorphic(const FiniteMonoid& a, const FiniteMonoid& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();

  std::vector<EltProfile> pa(n), pb(n);
  for (Elt x = 0; x < n; ++x) pa[x] = profile_of(a, x);
  for (Elt x = 0; x < n; ++x) pb[x] = profile_of(b, x);
  {
    std::multiset<decltype(pa[0].key())> ka, kb;
    for (Elt x = 0; x < n; ++x) ka.insert(pa[x].key()), kb.insert(pb[x].key());
    if (ka != kb) return std::nullopt;
  }

  const auto gens = generating_set(a);
  std::vector<std::vector<Elt>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Elt y = 0; y < n; ++y)
      if (pb[y] == pa[gens[i]]) candidates[i].push_back(y);
    if (candidates[i].empty()) return std::nullopt;
  }

  std::vector<Elt> images(gens.size(), -1);
  std::optional<MonoidHom> result;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      auto phi = extend_hom(a, b, gens, images);
      if (!phi) return false;
      std::vector<char> hit(n, 0);
      for (Elt v : *phi) {
        if (hit[v]) return false;
        hit[v] = 1;
      }
      MonoidHom h{*phi};
      if (!is_monoid_hom(a, b, h)) return false;
      result = std::move(h);
      return true;
    }
    for (Elt y : candidates[i]) {
      images[i] = y;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) {
    auto phi = extend_hom(a, b, gens, images);
    if (phi && is_monoid_hom(a, b, MonoidHom{*phi})) return MonoidHom{*phi};
    return std::nullopt;
  }
  rec(0);
  return result;
}

}  // namespace mtopos
