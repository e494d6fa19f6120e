#include "mtopos/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "mtopos/fixtures.hpp"

namespace mtopos {

std::vector<SetPartition> enumerate_mset_congruences(const LeftMSet& a) {
  if (a.carrier > 7) fail(ErrorKind::CarrierTooLarge, "congruence scan capped at carrier 7");
  std::vector<SetPartition> out;
  for_each_partition(a.carrier, [&](const SetPartition& p) {
    if (is_mset_congruence(a, p)) out.push_back(p);
  });
  return out;
}

std::vector<SetPartition> enumerate_mset_congruences(const RightMSet& a) {
  if (a.carrier > 7) fail(ErrorKind::CarrierTooLarge, "congruence scan capped at carrier 7");
  std::vector<SetPartition> out;
  for_each_partition(a.carrier, [&](const SetPartition& p) {
    if (is_mset_congruence(a, p)) out.push_back(p);
  });
  return out;
}

std::vector<LeftMSet> enumerate_filtered_cyclic(const FiniteMonoid& m) {
  if (m.size() > 7) fail(ErrorKind::CarrierTooLarge, "filtered-cyclic scan capped at order 7");
  std::vector<LeftMSet> out;
  for (const auto& p : enumerate_mset_congruences(regular_left_mset(m))) {
    auto cq = cyclic_from_congruence(m, p);
    if (!is_filtered(cq.mset).verdict) continue;
    bool fresh = true;
    for (const auto& seen : out)
      if (mset_isomorphic(seen, cq.mset)) {
        fresh = false;
        break;
      }
    if (fresh) out.push_back(std::move(cq.mset));
  }
  return out;
}

std::vector<TopologyFamily> enumerate_topologies(const FiniteMonoid& m, std::size_t ideal_cap) {
  const auto ideals = right_ideals(m);
  if (ideals.size() > ideal_cap || ideals.size() > 31)
    fail(ErrorKind::TooManyIdeals,
         "topology scan needs at most " + std::to_string(std::min<std::size_t>(ideal_cap, 31)) +
             " right ideals");
  const int k = static_cast<int>(ideals.size());
  const int n = m.size();

  auto index_of = [&](const ElementSet& s) {
    for (int i = 0; i < k; ++i)
      if (ideals[i] == s) return i;
    fail(ErrorKind::InternalInvariant, "residual escaped the right-ideal list");
  };
  std::vector<std::vector<int>> res(k, std::vector<int>(n));
  for (int i = 0; i < k; ++i)
    for (Elt x = 0; x < n; ++x) res[i][x] = index_of(residual(m, ideals[i], x));

  int top = index_of(ElementSet::full(n));

  using Mask = std::uint32_t;
  auto close = [&](Mask f) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < k; ++i) {
        if (!((f >> i) & 1u)) continue;
        for (Elt x = 0; x < n; ++x) {
          Mask bit = Mask(1) << res[i][x];
          if (!(f & bit)) {
            f |= bit;
            grew = true;
          }
        }
      }
    }
    return f;
  };

  // all residual-closed families containing M, grown one generator at a time
  std::set<Mask> closed;
  std::vector<Mask> queue = {close(Mask(1) << top)};
  closed.insert(queue[0]);
  while (!queue.empty()) {
    Mask cur = queue.back();
    queue.pop_back();
    for (int i = 0; i < k; ++i) {
      if ((cur >> i) & 1u) continue;
      Mask next = close(cur | (Mask(1) << i));
      if (closed.insert(next).second) queue.push_back(next);
    }
  }

  // local character filter
  std::vector<TopologyFamily> out;
  for (Mask f : closed) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      if ((f >> a) & 1u) continue;
      for (int b = 0; b < k && ok; ++b) {
        if (!((f >> b) & 1u)) continue;
        bool forced = true;
        for (Elt x : ideals[b].members())
          if (!((f >> res[a][x]) & 1u)) {
            forced = false;
            break;
          }
        if (forced) ok = false;  // T3 would require a ∈ f
      }
    }
    if (!ok) continue;
    std::vector<ElementSet> members;
    for (int i = 0; i < k; ++i)
      if ((f >> i) & 1u) members.push_back(ideals[i]);
    out.push_back(make_family(std::move(members)));
  }
  std::sort(out.begin(), out.end(), [](const TopologyFamily& a, const TopologyFamily& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    for (std::size_t i = 0; i < a.members.size(); ++i) {
      if (a.members[i] != b.members[i]) return size_lex_less(a.members[i], b.members[i]);
    }
    return false;
  });
  for (const auto& f : out) {
    auto chk = is_grothendieck_topology(m, f);
    if (!chk.verdict)
      fail(ErrorKind::InternalInvariant, "enumerated family fails " + chk.failing_axiom);
  }
  return out;
}

// --------------------------------------------------------------------------
// monoid enumeration

namespace {

bool flat_associative(const std::vector<Elt>& t, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Elt ij = t[i * n + j];
      for (int x = 0; x < n; ++x)
        if (t[ij * n + x] != t[i * n + t[j * n + x]]) return false;
    }
  return true;
}

FiniteMonoid monoid_from_flat(const std::vector<Elt>& t, int n, Elt identity) {
  std::vector<std::vector<Elt>> rows(n, std::vector<Elt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = t[i * n + j];
  return validate_monoid(rows, identity);
}

// canonical flat table: minimum relabeling over all permutations
std::vector<Elt> canonical_flat(const std::vector<Elt>& t, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Elt> best;
  do {
    std::vector<Elt> relab(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) relab[perm[i] * n + perm[j]] = perm[t[i * n + j]];
    if (best.empty() || relab < best) best = relab;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<FiniteMonoid> enumerate_monoids_of_order(int n) {
  if (n < 1 || n > 4) fail(ErrorKind::OrderTooLarge, "monoid enumeration capped at order 4");
  std::vector<FiniteMonoid> reps;
  std::vector<Elt> t(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) t[j] = j;          // identity row
  for (int i = 0; i < n; ++i) t[i * n] = i;      // identity column

  std::vector<std::pair<int, int>> free_cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) free_cells.emplace_back(i, j);

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == free_cells.size()) {
      if (!flat_associative(t, n)) return;
      FiniteMonoid cand = monoid_from_flat(t, n, 0);
      for (const auto& r : reps)
        if (monoid_isomorphic(r, cand)) return;
      reps.push_back(std::move(cand));
      return;
    }
    auto [i, j] = free_cells[idx];
    for (Elt v = 0; v < n; ++v) {
      t[i * n + j] = v;
      rec(idx + 1);
    }
  };
  rec(0);
  return reps;
}

std::vector<FiniteMonoid> enumerate_monoids_scan(int n) {
  if (n < 1 || n > 3) fail(ErrorKind::OrderTooLarge, "scan enumeration capped at order 3");
  const int cells = n * n;
  std::vector<Elt> t(cells, 0);
  std::map<std::vector<Elt>, std::vector<Elt>> canon_to_table;
  while (true) {
    // monoid test: some identity element plus associativity
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (t[e * n + i] != i || t[i * n + e] != i) ok = false;
      if (ok) identity = e;
    }
    if (identity >= 0 && flat_associative(t, n)) {
      auto canon = canonical_flat(t, n);
      canon_to_table.emplace(std::move(canon), t);
    }
    int c = cells - 1;
    while (c >= 0 && t[c] == n - 1) --c;
    if (c < 0) break;
    ++t[c];
    std::fill(t.begin() + c + 1, t.end(), 0);
  }
  std::vector<FiniteMonoid> out;
  for (const auto& [canon, table] : canon_to_table) {
    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if (table[e * n + i] != i || table[i * n + e] != i) ok = false;
      if (ok) identity = e;
    }
    out.push_back(monoid_from_flat(table, n, identity));
  }
  return out;
}

Corpus enumerate_monoids(int max_order) {
  if (max_order > 4) fail(ErrorKind::OrderTooLarge, "corpus enumeration capped at order 4");
  Corpus c;
  for (int n = 1; n <= max_order; ++n) {
    auto ms = enumerate_monoids_of_order(n);
    for (std::size_t i = 0; i < ms.size(); ++i)
      c.entries.push_back(CorpusEntry{"order" + std::to_string(n) + "_" + std::to_string(i),
                                      std::move(ms[i]), Provenance::enumerated});
  }
  return c;
}

Corpus default_corpus(int max_order, bool with_fixtures) {
  Corpus c;
  if (with_fixtures) {
    for (const auto& name : fixture_names()) {
      auto m = fixture_by_name(name);
      Provenance prov = (name == "t2" || name == "t3") ? Provenance::transformation
                                                       : Provenance::named;
      c.entries.push_back(CorpusEntry{name, std::move(m), prov});
    }
  }
  for (auto& e : enumerate_monoids(max_order).entries) {
    bool dup = false;
    for (const auto& have : c.entries)
      if (have.monoid.size() == e.monoid.size() && monoid_isomorphic(have.monoid, e.monoid)) {
        dup = true;
        break;
      }
    if (!dup) c.entries.push_back(std::move(e));
  }
  return c;
}

// --------------------------------------------------------------------------
// theorem suite

namespace {

using CheckFn = std::function<std::string(const Corpus&)>;  // empty string = pass

std::string entry_tag(const CorpusEntry& e) { return e.name; }

// every invariant below returns a witness string on first failure

std::string check_principal_ideal_definition(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    for (Elt x = 0; x < m.size(); ++x) {
      ElementSet left(m.size()), two(m.size());
      for (Elt a = 0; a < m.size(); ++a) left.set(m.mul(a, x));
      for (Elt a = 0; a < m.size(); ++a)
        for (Elt b = 0; b < m.size(); ++b) two.set(m.mul3(a, x, b));
      if (principal_ideal(m, x, IdealKind::left) != left ||
          principal_ideal(m, x, IdealKind::two_sided) != two)
        return entry_tag(e) + ": principal ideal mismatch at " + m.display(x);
    }
  }
  return "";
}

std::string check_idempotents_basic(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    auto idems = idempotents(e.monoid);
    if (idems.empty()) return entry_tag(e) + ": no idempotents";
    if (std::find(idems.begin(), idems.end(), e.monoid.identity()) == idems.end())
      return entry_tag(e) + ": identity is not listed idempotent";
  }
  return "";
}

std::string check_quotient_laws(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    // construction re-validates the monoid laws; semilattice laws on top
    auto [sl, q] = semilattice_quotient(e.monoid);
    if (!is_monoid_hom(e.monoid, sl, q)) return entry_tag(e) + ": projection not a homomorphism";
    for (Elt x = 0; x < sl.size(); ++x) {
      if (sl.mul(x, x) != x) return entry_tag(e) + ": M^sl not idempotent at " + sl.display(x);
      for (Elt y = 0; y < sl.size(); ++y)
        if (sl.mul(x, y) != sl.mul(y, x)) return entry_tag(e) + ": M^sl not commutative";
    }
    auto [com, qc] = commutative_quotient(e.monoid);
    if (!com.commutative()) return entry_tag(e) + ": M^com not commutative";
    if (!is_monoid_hom(e.monoid, com, qc)) return entry_tag(e) + ": com projection broken";
    if (e.monoid.commutative() && com.size() != e.monoid.size())
      return entry_tag(e) + ": commutative quotient collapsed a commutative monoid";
  }
  return "";
}

std::string check_spec_counts(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (!m.commutative() || m.size() > 8) continue;
    auto [sl, q] = semilattice_quotient(m);
    auto spec_m = spec_prime_ideals(m);
    auto spec_sl = spec_prime_ideals(sl);
    if (spec_m.size() != spec_sl.size() || static_cast<int>(spec_m.size()) != sl.size())
      return entry_tag(e) + ": |Spec(M)| = " + std::to_string(spec_m.size()) +
             ", |Spec(M^sl)| = " + std::to_string(spec_sl.size()) +
             ", |M^sl| = " + std::to_string(sl.size());
  }
  return "";
}

std::string check_iso_equivalence(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 5) continue;
    auto self = monoid_isomorphic(m, m);
    if (!self) return entry_tag(e) + ": not isomorphic to itself";

    // relabeled copies exercise symmetry and transitivity with real witnesses
    auto relabel = [&](int shift) {
      const int n = m.size();
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = (i + shift) % n;
      std::vector<std::vector<Elt>> rows(n, std::vector<Elt>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[perm[i]][perm[j]] = perm[m.mul(i, j)];
      return validate_monoid(rows, perm[m.identity()]);
    };
    auto b = relabel(1), c = relabel(m.size() > 1 ? 2 : 0);
    auto ab = monoid_isomorphic(m, b);
    auto bc = monoid_isomorphic(b, c);
    if (!ab || !bc) return entry_tag(e) + ": relabeled copy not isomorphic";
    // symmetry: invert the witness
    std::vector<Elt> inv(m.size());
    for (Elt x = 0; x < m.size(); ++x) inv[ab->map[x]] = x;
    if (!is_monoid_hom(b, m, MonoidHom{inv})) return entry_tag(e) + ": inverse witness fails";
    // transitivity: compose witnesses
    std::vector<Elt> comp(m.size());
    for (Elt x = 0; x < m.size(); ++x) comp[x] = bc->map[ab->map[x]];
    if (!is_monoid_hom(m, c, MonoidHom{comp})) return entry_tag(e) + ": composed witness fails";
  }
  return "";
}

std::vector<RightMSet> sample_right_msets(const FiniteMonoid& m, int max_size) {
  std::vector<RightMSet> xs;
  if (m.size() <= 7) {
    for (const auto& p : enumerate_mset_congruences(regular_right_mset(m))) {
      if (p.num_classes() > max_size) continue;
      const auto reps = p.representatives();
      std::vector<std::vector<int>> rows(p.num_classes(), std::vector<int>(m.size()));
      for (int c = 0; c < p.num_classes(); ++c)
        for (Elt x = 0; x < m.size(); ++x) rows[c][x] = p.class_of(m.mul(reps[c], x));
      xs.push_back(validate_right_action(m, rows));
    }
  }
  for (const auto& ideal : right_ideals(m))
    if (ideal.count() <= max_size && ideal.any()) xs.push_back(right_ideal_mset(m, ideal));
  return xs;
}

std::string check_tensor_unit(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 5) continue;
    for (const auto& x : sample_right_msets(m, 4)) {
      auto t = tensor(x, regular_left_mset(m));
      if (t.size != x.carrier) return entry_tag(e) + ": |X tensor M| != |X|";
      // (x, 1) ↦ class must be a bijection
      std::vector<char> hit(t.size, 0);
      for (int xi = 0; xi < x.carrier; ++xi) {
        int c = t.cls(xi, m.identity());
        if (hit[c]) return entry_tag(e) + ": tensor unit not injective";
        hit[c] = 1;
      }
    }
  }
  return "";
}

std::string check_tensor_functorial(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 4) continue;
    auto xs = sample_right_msets(m, 4);
    LeftMSet a = regular_left_mset(m);
    int budget = 12;  // a few map pairs per monoid are plenty
    for (std::size_t i = 0; i < xs.size() && budget > 0; ++i)
      for (std::size_t j = 0; j < xs.size() && budget > 0; ++j) {
        auto homs = mset_hom_set(xs[i], xs[j]);
        if (homs.empty()) continue;
        --budget;
        const auto& f = homs.front();
        auto t1 = tensor(xs[i], a);
        auto t2 = tensor(xs[j], a);
        std::vector<int> induced(t1.size, -1);
        for (int xi = 0; xi < xs[i].carrier; ++xi)
          for (int c = 0; c < a.carrier; ++c) {
            int from = t1.cls(xi, c), to = t2.cls(f.map[xi], c);
            if (induced[from] == -1)
              induced[from] = to;
            else if (induced[from] != to)
              return entry_tag(e) + ": induced tensor map not well defined";
          }
      }
  }
  return "";
}

std::string check_hom_mset_validates(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 5) continue;
    for (Elt ee : idempotents(m))
      for (int s = 1; s <= 3; ++s) {
        auto h = hom_set_as_right_mset(principal_left_mset(m, ee), s);
        std::vector<std::vector<int>> rows(h.carrier, std::vector<int>(m.size()));
        for (int c = 0; c < h.carrier; ++c)
          for (Elt x = 0; x < m.size(); ++x) rows[c][x] = h.act(c, x);
        validate_right_action(m, rows);  // throws on a law violation
      }
  }
  return "";
}

std::string check_eX_hom_bijection(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    std::vector<LeftMSet> xs;
    for (Elt f : idempotents(m)) {
      auto x = principal_left_mset(m, f);
      if (x.carrier <= 5) xs.push_back(std::move(x));
    }
    if (m.size() <= 5) xs.push_back(regular_left_mset(m));
    for (Elt ee : idempotents(m)) {
      auto me = principal_left_mset(m, ee);
      const auto me_members = principal_ideal(m, ee, IdealKind::left).members();
      for (const auto& x : xs) {
        // eX as carrier elements
        std::vector<int> ex;
        for (int c = 0; c < x.carrier; ++c) {
          int img = x.act(ee, c);
          if (std::find(ex.begin(), ex.end(), img) == ex.end()) ex.push_back(img);
        }
        auto homs = mset_hom_set(me, x);
        if (homs.size() != ex.size())
          return entry_tag(e) + ": |eX| = " + std::to_string(ex.size()) +
                 " but |Hom(Me, X)| = " + std::to_string(homs.size());
        // the explicit bijection ex ↦ (me ↦ m·e·x)
        std::set<std::vector<int>> images;
        for (int v : ex) {
          std::vector<int> alpha(me.carrier);
          for (std::size_t i = 0; i < me_members.size(); ++i) {
            // member is m·e; send it to (m·e)·v
            int pos = static_cast<int>(i);
            alpha[pos] = x.act(me_members[i], v);
          }
          if (!images.insert(alpha).second)
            return entry_tag(e) + ": eX map not injective";
          bool found = false;
          for (const auto& h : homs)
            if (h.map == alpha) {
              found = true;
              break;
            }
          if (!found) return entry_tag(e) + ": eX image is not equivariant";
        }
      }
    }
  }
  return "";
}

std::string check_k_rho(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 5) continue;
    auto reg = regular_left_mset(m);
    for (const auto& p : enumerate_mset_congruences(reg))
      for (int a = 0; a < m.size(); ++a) k_rho(reg, p, a);  // throws if not a submonoid
  }
  return "";
}

std::string check_me_filtered(const Corpus& corpus) {
  for (const auto& e : corpus.entries)
    for (Elt ee : idempotents(e.monoid)) {
      auto rep = is_filtered(principal_left_mset(e.monoid, ee));
      if (!rep.verdict)
        return entry_tag(e) + ": Me not filtered at e = " + e.monoid.display(ee);
    }
  return "";
}

std::string check_classification_oracle(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 7) continue;
    auto found = enumerate_filtered_cyclic(m);
    auto pc = classify_points(m);
    if (found.size() != pc.representatives.size())
      return entry_tag(e) + ": oracle found " + std::to_string(found.size()) +
             " filtered M-sets, classification has " + std::to_string(pc.representatives.size());
    std::vector<char> used(pc.representatives.size(), 0);
    for (const auto& a : found) {
      int match = -1;
      for (std::size_t r = 0; r < pc.representatives.size(); ++r)
        if (mset_isomorphic(a, principal_left_mset(m, pc.representatives[r]))) {
          if (match >= 0) return entry_tag(e) + ": filtered M-set matches two representatives";
          match = static_cast<int>(r);
        }
      if (match < 0) return entry_tag(e) + ": filtered M-set matches no Me";
      if (used[match]) return entry_tag(e) + ": representative matched twice";
      used[match] = 1;
    }
    // every filtered M-set is cyclic with |A| ≤ |M|
    for (const auto& a : found) {
      if (a.carrier > m.size()) return entry_tag(e) + ": filtered M-set larger than M";
      bool cyclic = false;
      for (int c = 0; c < a.carrier && !cyclic; ++c) {
        std::vector<char> reach(a.carrier, 0);
        for (Elt x = 0; x < m.size(); ++x) reach[a.act(x, c)] = 1;
        cyclic = std::all_of(reach.begin(), reach.end(), [](char v) { return v == 1; });
      }
      if (!cyclic) return entry_tag(e) + ": filtered M-set not cyclic";
    }
  }
  return "";
}

std::string check_points_opposite(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    auto pc = classify_points(e.monoid);
    auto pco = classify_points(opposite(e.monoid));
    if (pc.num_points() != pco.num_points())
      return entry_tag(e) + ": |F_M| = " + std::to_string(pc.num_points()) +
             " != |F_Mop| = " + std::to_string(pco.num_points());
  }
  return "";
}

std::string check_saturation_closure(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 7) continue;
    auto subs = submonoids(m);
    for (const auto& k : subs) {
      auto hat = saturation(m, k);
      if (!hat.contains(k)) return entry_tag(e) + ": K not inside its saturation";
      if (saturation(m, hat) != hat) return entry_tag(e) + ": saturation not idempotent";
      if (!is_saturated(m, hat)) return entry_tag(e) + ": saturation not saturated";
    }
    for (const auto& k : subs)
      for (const auto& l : subs)
        if (l.contains(k) && !saturation(m, l).contains(saturation(m, k)))
          return entry_tag(e) + ": saturation not monotone";
  }
  return "";
}

std::string check_one_step_saturation(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 7) continue;
    for (const auto& k : submonoids(m)) {
      if (!is_F_monoid(m, k).verdict) continue;
      ElementSet one_pass(m.size());
      for (Elt a = 0; a < m.size(); ++a)
        for (Elt x : k.members())
          if (m.mul(a, x) == x) {
            one_pass.set(a);
            break;
          }
      if (one_pass != saturation(m, k))
        return entry_tag(e) + ": one-pass saturation differs on " + k.to_string(m.names());
    }
  }
  return "";
}

std::string check_quotient_saturation(const Corpus& corpus) {
  // The pointed form of the statement: the congruences ~K and ~L coincide
  // exactly when the saturations agree, and then the quotients are equal on
  // the nose. A plain (unpointed) M-set isomorphism M/K ≅ M/L can also arise
  // with distinct saturations whenever the right zeros of the two saturations
  // are L-equivalent; T2 with K = {1, c0}, L = {1, c1} is the smallest case.
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 6) continue;
    std::vector<ElementSet> fsubs;
    for (const auto& k : submonoids(m))
      if (is_F_monoid(m, k).verdict) fsubs.push_back(k);
    std::vector<FQuotient> quots;
    std::vector<ElementSet> hats;
    for (const auto& k : fsubs) {
      quots.push_back(quotient_by_F_submonoid(m, k));
      hats.push_back(saturation(m, k));
    }
    for (std::size_t i = 0; i < fsubs.size(); ++i) {
      auto hat_quot = quotient_by_F_submonoid(m, hats[i]);
      if (!mset_isomorphic(quots[i].mset, hat_quot.mset))
        return entry_tag(e) + ": M/K and M/K^ differ on " + fsubs[i].to_string(m.names());
      if (quots[i].projection != hat_quot.projection)
        return entry_tag(e) + ": ~K and ~K^ are different congruences";
      for (std::size_t j = 0; j < fsubs.size(); ++j) {
        bool pointed_same = quots[i].projection == quots[j].projection;
        bool same_hat = hats[i] == hats[j];
        if (pointed_same != same_hat)
          return entry_tag(e) + ": ~K = ~L disagrees with saturation equality";
        if (same_hat && !mset_isomorphic(quots[i].mset, quots[j].mset))
          return entry_tag(e) + ": equal saturations but non-isomorphic quotients";
      }
    }
  }
  return "";
}

std::string check_f_monoid_right_zero(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 7) continue;
    for (const auto& k : submonoids(m)) {
      bool fm = is_F_monoid(m, k).verdict;
      bool rz = right_zero(m, k).has_value();
      if (fm != rz)
        return entry_tag(e) + ": F-monoid/right-zero disagreement on " + k.to_string(m.names());
    }
  }
  return "";
}

std::string check_common_generator(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 6) continue;
    for (const auto& a : enumerate_filtered_cyclic(m)) {
      std::vector<int> all(a.carrier);
      std::iota(all.begin(), all.end(), 0);
      common_generator(a, all);  // throws if the constructive fold fails
    }
  }
  return "";
}

std::string check_common_right_fixer(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 7) continue;
    for (const auto& k : submonoids(m)) {
      if (!is_F_monoid(m, k).verdict) continue;
      auto mem = k.members();
      common_right_fixer(m, k, mem);  // throws if the construction fails
      auto rz = right_zero(m, k);
      if (!rz) return entry_tag(e) + ": F-submonoid without right zero";
      if (m.mul(common_right_fixer(m, k, mem), *rz) != *rz)
        return entry_tag(e) + ": fixer does not absorb into the right zero";
    }
  }
  return "";
}

std::string check_endo_identity_point(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    auto endo = endomorphism_monoid_of_point(e.monoid, e.monoid.identity());
    if (!monoid_isomorphic(endo, opposite(e.monoid)))
      return entry_tag(e) + ": End(p_1) is not M^op";
  }
  return "";
}

std::string check_terminal_filtered(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    bool term = is_filtered(singleton_left_mset(m)).verdict;
    bool fmon = is_F_monoid(m, ElementSet::full(m.size())).verdict;
    if (term != fmon) return entry_tag(e) + ": terminal filtered <> F-monoid mismatch";
  }
  return "";
}

std::string check_induced_sl_surjective(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    auto [sl, q] = semilattice_quotient(m);
    auto map = induced_point_map(m, sl, q);
    auto pc_sl = classify_points(sl);
    std::vector<char> hit(pc_sl.representatives.size(), 0);
    for (int c : map) hit[c] = 1;
    if (!std::all_of(hit.begin(), hit.end(), [](char v) { return v == 1; }))
      return entry_tag(e) + ": F_q not surjective onto F_{M^sl}";
  }
  return "";
}

std::string check_topology_round_trip(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    for (const auto& ideal : idempotent_ideal_lattice(m).elements) {
      auto back = ideal_of_topology(m, topology_from_ideal(m, ideal));
      if (back != ideal)
        return entry_tag(e) + ": round trip broke at " + ideal.to_string(m.names());
    }
  }
  return "";
}

std::string check_topology_completeness(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    std::size_t ideal_count = right_ideals(m).size();
    if (ideal_count > 20) continue;
    auto families = enumerate_topologies(m);
    auto lattice = idempotent_ideal_lattice(m);
    if (families.size() != static_cast<std::size_t>(lattice.size()))
      return entry_tag(e) + ": " + std::to_string(families.size()) + " topologies vs " +
             std::to_string(lattice.size()) + " idempotent ideals";
    for (const auto& ideal : lattice.elements) {
      auto f = topology_from_ideal(m, ideal);
      bool found = false;
      for (const auto& g : families)
        if (g.members == f.members) {
          found = true;
          break;
        }
      if (!found)
        return entry_tag(e) + ": F_m missing from enumeration for " + ideal.to_string(m.names());
    }
  }
  return "";
}

std::string check_lattice_laws(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    auto l = idempotent_ideal_lattice(m);  // construction asserts GLB + distributivity
    for (int i = 0; i < l.size(); ++i)
      for (int j = 0; j < l.size(); ++j)
        for (int t = 0; t < l.size(); ++t)
          if (l.meet[i][l.join[j][t]] != l.join[l.meet[i][j]][l.meet[i][t]])
            return entry_tag(e) + ": distributivity fails";
    lattice_irreducibles(m, l);  // throws if irreducibles differ from {MeM}
    // decomposition: every element is the union of MeM over its idempotents
    for (const auto& ideal : l.elements) {
      ElementSet gen(m.size());
      for (Elt x : ideal.members())
        if (m.is_idempotent(x)) gen |= principal_ideal(m, x, IdealKind::two_sided);
      if (gen != ideal) return entry_tag(e) + ": idempotent decomposition fails";
    }
  }
  return "";
}

std::string check_iii_closed_classes(const Corpus& corpus) {
  // regular and commutative monoids are III-closed
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (!is_regular(m) && !m.commutative()) continue;
    if (!is_III_closed(m).verdict) return entry_tag(e) + ": not III-closed";
  }
  return "";
}

std::string check_lattice_opposite(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    auto l = idempotent_ideal_lattice(e.monoid);
    auto lo = idempotent_ideal_lattice(opposite(e.monoid));
    if (l.size() != lo.size())
      return entry_tag(e) + ": |II(M)| = " + std::to_string(l.size()) +
             " != |II(Mop)| = " + std::to_string(lo.size());
  }
  return "";
}

std::string check_opens_bijection(const Corpus& corpus) {
  for (const auto& e : corpus.entries) lattice_opens_bijection(e.monoid);
  return "";
}

std::string check_transversality(const Corpus& corpus) {
  for (const auto& e : corpus.entries) {
    const auto& m = e.monoid;
    if (m.size() > 5) continue;
    auto lattice = idempotent_ideal_lattice(m);
    for (Elt ee : idempotents(m))
      for (const auto& ideal : lattice.elements)
        point_transversality(m, ee, ideal);  // throws MethodDisagreement on any split
  }
  return "";
}

std::string check_monoid_enumeration_dual(const Corpus&) {
  for (int n = 2; n <= 3; ++n) {
    auto fast = enumerate_monoids_of_order(n);
    auto slow = enumerate_monoids_scan(n);
    if (fast.size() != slow.size())
      return "order " + std::to_string(n) + ": backtrack " + std::to_string(fast.size()) +
             " vs scan " + std::to_string(slow.size());
    for (const auto& a : fast) {
      bool found = false;
      for (const auto& b : slow)
        if (monoid_isomorphic(a, b)) {
          found = true;
          break;
        }
      if (!found) return "order " + std::to_string(n) + ": algorithms disagree on classes";
    }
  }
  return "";
}

std::string check_corpus_distinct(const Corpus& corpus) {
  for (std::size_t i = 0; i < corpus.entries.size(); ++i)
    for (std::size_t j = i + 1; j < corpus.entries.size(); ++j) {
      const auto& a = corpus.entries[i].monoid;
      const auto& b = corpus.entries[j].monoid;
      if (a.size() != b.size() || a.size() > 5) continue;
      if (monoid_isomorphic(a, b))
        return corpus.entries[i].name + " isomorphic to " + corpus.entries[j].name;
    }
  return "";
}

}  // namespace

SuiteReport run_theorem_suite(const Corpus& corpus) {
  const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"monoid.principal_ideal_definition", check_principal_ideal_definition},
      {"monoid.idempotents_contain_identity", check_idempotents_basic},
      {"monoid.quotient_laws", check_quotient_laws},
      {"monoid.spec_counts_match_semilattice", check_spec_counts},
      {"monoid.isomorphism_is_equivalence", check_iso_equivalence},
      {"monoid.enumeration_dual_algorithm", check_monoid_enumeration_dual},
      {"mset.tensor_unit", check_tensor_unit},
      {"mset.tensor_functorial", check_tensor_functorial},
      {"mset.hom_mset_passes_validation", check_hom_mset_validates},
      {"mset.eX_hom_bijection", check_eX_hom_bijection},
      {"mset.k_rho_submonoid", check_k_rho},
      {"points.Me_always_filtered", check_me_filtered},
      {"points.classification_oracle_agreement", check_classification_oracle},
      {"points.count_equals_opposite", check_points_opposite},
      {"points.saturation_closure_operator", check_saturation_closure},
      {"points.one_step_saturation_for_F", check_one_step_saturation},
      {"points.quotient_matches_saturation", check_quotient_saturation},
      {"points.F_monoid_iff_right_zero", check_f_monoid_right_zero},
      {"points.common_generator_fold", check_common_generator},
      {"points.common_right_fixer", check_common_right_fixer},
      {"points.endo_of_identity_is_op", check_endo_identity_point},
      {"points.terminal_filtered_iff_F_monoid", check_terminal_filtered},
      {"points.induced_sl_map_surjective", check_induced_sl_surjective},
      {"topology.ideal_round_trip", check_topology_round_trip},
      {"topology.completeness", check_topology_completeness},
      {"topology.lattice_laws", check_lattice_laws},
      {"topology.regular_or_commutative_III_closed", check_iii_closed_classes},
      {"topology.lattice_count_equals_opposite", check_lattice_opposite},
      {"topology.opens_bijection", check_opens_bijection},
      {"topology.transversality_triagreement", check_transversality},
      {"oracle.corpus_pairwise_distinct", check_corpus_distinct},
  };

  SuiteReport report;
  report.all_pass = true;
  for (const auto& [name, fn] : checks) {
    SuiteCheck c;
    c.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      c.witness = fn(corpus);
      c.pass = c.witness.empty();
    } catch (const Error& err) {
      c.pass = false;
      c.witness = err.what();
    }
    c.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    report.all_pass = report.all_pass && c.pass;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace mtopos
