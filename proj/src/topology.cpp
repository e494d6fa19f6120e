#include "mtopos/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mtopos {

bool TopologyFamily::contains(const ElementSet& s) const {
  return std::find(members.begin(), members.end(), s) != members.end();
}

TopologyFamily make_family(std::vector<ElementSet> members) {
  std::sort(members.begin(), members.end(), size_lex_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return TopologyFamily{std::move(members)};
}

std::vector<ElementSet> right_ideals(const FiniteMonoid& m, std::size_t cap) {
  const int n = m.size();
  // every right ideal is a union of principal ones: close under union
  std::vector<ElementSet> base;
  base.push_back(ElementSet(n));  // ∅
  for (Elt x = 0; x < n; ++x) base.push_back(principal_ideal(m, x, IdealKind::right));
  std::sort(base.begin(), base.end(), size_lex_less);
  base.erase(std::unique(base.begin(), base.end()), base.end());

  std::set<std::vector<int>> seen;
  std::vector<ElementSet> out;
  std::vector<ElementSet> queue = base;
  for (const auto& b : base) seen.insert(b.members());
  while (!queue.empty()) {
    ElementSet cur = queue.back();
    queue.pop_back();
    out.push_back(cur);
    for (const auto& b : base) {
      ElementSet u = cur | b;
      if (seen.insert(u.members()).second) {
        if (out.size() + queue.size() + 1 > cap)
          fail(ErrorKind::TooManyIdeals, "right-ideal count exceeds cap");
        queue.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

ElementSet residual(const FiniteMonoid& m, const ElementSet& a, Elt x) {
  ElementSet out(m.size());
  for (Elt y = 0; y < m.size(); ++y)
    if (a.test(m.mul(x, y))) out.set(y);
  return out;
}

TopologyCheck is_grothendieck_topology(const FiniteMonoid& m, const TopologyFamily& f) {
  for (const auto& a : f.members)
    if (!is_right_ideal(m, a))
      fail(ErrorKind::NotARightIdeal, "family member " + a.to_string(m.names()));

  const ElementSet top = ElementSet::full(m.size());
  if (!f.contains(top)) return {false, "T1", "M missing"};

  for (const auto& a : f.members)
    for (Elt x = 0; x < m.size(); ++x) {
      ElementSet r = residual(m, a, x);
      if (!f.contains(r))
        return {false, "T2",
                "(" + a.to_string(m.names()) + " : " + m.display(x) + ") = " +
                    r.to_string(m.names()) + " missing"};
    }

  // local character: 𝔟 ∈ F and (𝔞:b) ∈ F for all b ∈ 𝔟 force 𝔞 ∈ F
  const auto all_ideals = right_ideals(m);
  for (const auto& b : f.members)
    for (const auto& a : all_ideals) {
      if (f.contains(a)) continue;
      bool all_in = true;
      for (Elt x : b.members())
        if (!f.contains(residual(m, a, x))) {
          all_in = false;
          break;
        }
      if (all_in)
        return {false, "T3",
                a.to_string(m.names()) + " forced by " + b.to_string(m.names())};
    }

  // derived facts (upward closure, ∩-closure, product closure) must follow
  for (const auto& a : f.members)
    for (const auto& b : all_ideals)
      if (b.contains(a) && !f.contains(b))
        return {false, "derived-upward", b.to_string(m.names())};
  for (const auto& a : f.members)
    for (const auto& b : f.members) {
      if (!f.contains(a & b)) return {false, "derived-intersection", (a & b).to_string(m.names())};
      if (!f.contains(set_product(m, a, b)))
        return {false, "derived-product", set_product(m, a, b).to_string(m.names())};
    }

  return {true, "", ""};
}

bool is_idempotent_ideal(const FiniteMonoid& m, const ElementSet& ideal) {
  return is_two_sided_ideal(m, ideal) && set_product(m, ideal, ideal) == ideal;
}

TopologyFamily topology_from_ideal(const FiniteMonoid& m, const ElementSet& ideal) {
  if (!is_idempotent_ideal(m, ideal))
    fail(ErrorKind::NotIdempotentIdeal, ideal.to_string(m.names()));
  std::vector<ElementSet> members;
  for (const auto& a : right_ideals(m))
    if (a.contains(ideal)) members.push_back(a);
  return make_family(std::move(members));
}

ElementSet ideal_of_topology(const FiniteMonoid& m, const TopologyFamily& f) {
  auto check = is_grothendieck_topology(m, f);
  if (!check.verdict)
    fail(ErrorKind::NotARightIdeal, "family fails " + check.failing_axiom);
  ElementSet least = ElementSet::full(m.size());
  for (const auto& a : f.members) least &= a;
  if (!is_idempotent_ideal(m, least))
    fail(ErrorKind::RoundTripFailed, "smallest member is not an idempotent two-sided ideal");
  if (!(topology_from_ideal(m, least).members == make_family(f.members).members))
    fail(ErrorKind::RoundTripFailed, "topology_from_ideal does not reproduce the family");
  return least;
}

namespace {

std::vector<ElementSet> two_sided_ideals(const FiniteMonoid& m) {
  const int n = m.size();
  std::vector<ElementSet> base;
  base.push_back(ElementSet(n));
  for (Elt x = 0; x < n; ++x) base.push_back(principal_ideal(m, x, IdealKind::two_sided));
  std::sort(base.begin(), base.end(), size_lex_less);
  base.erase(std::unique(base.begin(), base.end()), base.end());

  std::set<std::vector<int>> seen;
  std::vector<ElementSet> out, queue = base;
  for (const auto& b : base) seen.insert(b.members());
  while (!queue.empty()) {
    ElementSet cur = queue.back();
    queue.pop_back();
    out.push_back(cur);
    for (const auto& b : base) {
      ElementSet u = cur | b;
      if (seen.insert(u.members()).second) queue.push_back(u);
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

ElementSet idempotent_generated(const FiniteMonoid& m, const ElementSet& s) {
  ElementSet out(m.size());
  for (Elt e : s.members())
    if (m.is_idempotent(e)) out |= principal_ideal(m, e, IdealKind::two_sided);
  return out;
}

}  // namespace

ElementSet lattice_meet(const FiniteMonoid& m, const ElementSet& i, const ElementSet& j) {
  return idempotent_generated(m, i & j);
}

IdealLattice idempotent_ideal_lattice(const FiniteMonoid& m) {
  IdealLattice l;
  for (const auto& ideal : two_sided_ideals(m))
    if (set_product(m, ideal, ideal) == ideal) l.elements.push_back(ideal);
  // already sorted by size then bits; ∅ first, M last

  const int k = l.size();
  // every element must be the union of MeM over its idempotents
  for (const auto& ideal : l.elements)
    if (idempotent_generated(m, ideal) != ideal)
      fail(ErrorKind::InternalInvariant,
           "idempotent ideal is not idempotent-generated: " + ideal.to_string(m.names()));

  l.join.assign(k, std::vector<int>(k));
  l.meet.assign(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int ji = l.index_of(l.elements[i] | l.elements[j]);
      if (ji < 0) fail(ErrorKind::InternalInvariant, "join escapes the lattice");
      l.join[i][j] = ji;
      int mi = l.index_of(lattice_meet(m, l.elements[i], l.elements[j]));
      if (mi < 0) fail(ErrorKind::InternalInvariant, "meet escapes the lattice");
      l.meet[i][j] = mi;
    }

  // meet must be the greatest lower bound under ⊆
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const auto& met = l.elements[l.meet[i][j]];
      if (!l.elements[i].contains(met) || !l.elements[j].contains(met))
        fail(ErrorKind::InternalInvariant, "meet is not a lower bound");
      for (int t = 0; t < k; ++t)
        if (l.elements[i].contains(l.elements[t]) && l.elements[j].contains(l.elements[t]) &&
            !met.contains(l.elements[t]))
          fail(ErrorKind::InternalInvariant, "meet is not the greatest lower bound");
    }
  // distributivity
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < k; ++t)
        if (l.meet[i][l.join[j][t]] != l.join[l.meet[i][j]][l.meet[i][t]])
          fail(ErrorKind::InternalInvariant, "lattice is not distributive");
  return l;
}

int IdealLattice::index_of(const ElementSet& s) const {
  for (int i = 0; i < size(); ++i)
    if (elements[i] == s) return i;
  return -1;
}

IIIClosednessReport is_III_closed(const FiniteMonoid& m) {
  auto l = idempotent_ideal_lattice(m);
  for (int i = 0; i < l.size(); ++i)
    for (int j = i + 1; j < l.size(); ++j) {
      ElementSet inter = l.elements[i] & l.elements[j];
      if (set_product(m, inter, inter) != inter)
        return {false, std::make_pair(l.elements[i], l.elements[j])};
    }
  return {true, std::nullopt};
}

std::vector<int> lattice_irreducibles(const FiniteMonoid& m, const IdealLattice& l) {
  std::vector<int> out;
  for (int i = 0; i < l.size(); ++i) {
    if (i == l.bottom()) continue;
    bool irr = true;
    for (int j = 0; j < l.size() && irr; ++j)
      for (int t = 0; t < l.size() && irr; ++t)
        if (l.join[j][t] == i && j != i && t != i) irr = false;
    if (irr) out.push_back(i);
  }
  // they are exactly the principal ideals of idempotents
  std::set<std::vector<int>> principal;
  for (Elt e : idempotents(m)) principal.insert(principal_ideal(m, e, IdealKind::two_sided).members());
  std::set<std::vector<int>> got;
  for (int i : out) got.insert(l.elements[i].members());
  if (principal != got)
    fail(ErrorKind::InternalInvariant, "irreducibles differ from {MeM}");
  return out;
}

IdemJPoset idem_j_poset(const FiniteMonoid& m) {
  IdemJPoset p;
  const auto idems = idempotents(m);
  const auto part = green_partition(m, GreenRelation::J);
  for (int pos : part.representatives()) {
    p.reps.push_back(idems[pos]);
    p.class_ideals.push_back(principal_ideal(m, idems[pos], IdealKind::two_sided));
  }
  const int k = p.size();
  p.leq.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) p.leq[i][j] = p.class_ideals[j].contains(p.class_ideals[i]);
  return p;
}

std::vector<std::vector<int>> order_topology_opens(const IdemJPoset& p) {
  const int k = p.size();
  std::vector<std::vector<int>> opens;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << k); ++mask) {
    bool down = true;
    for (int y = 0; y < k && down; ++y) {
      if (!((mask >> y) & 1u)) continue;
      for (int x = 0; x < k && down; ++x)
        if (p.leq[x][y] && !((mask >> x) & 1u)) down = false;
    }
    if (!down) continue;
    std::vector<int> open;
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1u) open.push_back(i);
    opens.push_back(std::move(open));
  }
  std::sort(opens.begin(), opens.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return opens;
}

LatticeOpensBijection lattice_opens_bijection(const FiniteMonoid& m) {
  LatticeOpensBijection b;
  b.lattice = idempotent_ideal_lattice(m);
  b.poset = idem_j_poset(m);
  b.opens = order_topology_opens(b.poset);

  auto open_index = [&](const std::vector<int>& open) {
    auto it = std::find(b.opens.begin(), b.opens.end(), open);
    return it == b.opens.end() ? -1 : static_cast<int>(it - b.opens.begin());
  };

  b.ideal_to_open.assign(b.lattice.size(), -1);
  for (int i = 0; i < b.lattice.size(); ++i) {
    std::vector<int> open;
    for (int c = 0; c < b.poset.size(); ++c)
      if (b.lattice.elements[i].test(b.poset.reps[c])) open.push_back(c);
    int oi = open_index(open);
    if (oi < 0) fail(ErrorKind::BijectionFailed, "ideal maps to a non-open class set");
    b.ideal_to_open[i] = oi;
  }

  b.open_to_ideal.assign(b.opens.size(), -1);
  for (std::size_t oi = 0; oi < b.opens.size(); ++oi) {
    ElementSet u(m.size());
    for (int c : b.opens[oi]) u |= b.poset.class_ideals[c];
    int ii = b.lattice.index_of(u);
    if (ii < 0) fail(ErrorKind::BijectionFailed, "open maps outside the lattice");
    b.open_to_ideal[oi] = ii;
  }

  if (b.lattice.size() != static_cast<int>(b.opens.size()))
    fail(ErrorKind::BijectionFailed, "lattice and opens have different sizes");
  for (int i = 0; i < b.lattice.size(); ++i)
    if (b.open_to_ideal[b.ideal_to_open[i]] != i)
      fail(ErrorKind::BijectionFailed, "round trip ideal -> open -> ideal failed");
  for (std::size_t oi = 0; oi < b.opens.size(); ++oi)
    if (b.ideal_to_open[b.open_to_ideal[oi]] != static_cast<int>(oi))
      fail(ErrorKind::BijectionFailed, "round trip open -> ideal -> open failed");
  return b;
}

SheafCheck is_sheaf(const RightMSet& a, const TopologyFamily& f) {
  const FiniteMonoid& m = a.monoid;
  for (const auto& cover : f.members) {
    RightMSet ideal_mset = right_ideal_mset(m, cover);
    auto homs = mset_hom_set(ideal_mset, a);
    // restriction f_x: the map (member index) ↦ x acted by that member
    const auto mem = cover.members();
    std::set<std::vector<int>> restr;
    bool fine = true;
    for (int x = 0; x < a.carrier && fine; ++x) {
      std::vector<int> fx(mem.size());
      for (std::size_t i = 0; i < mem.size(); ++i) fx[i] = a.act(x, mem[i]);
      if (!restr.insert(fx).second) fine = false;  // not injective
    }
    if (fine && restr.size() != homs.size()) fine = false;  // not surjective
    if (fine) {
      for (const auto& h : homs)
        if (!restr.count(h.map)) {
          fine = false;
          break;
        }
    }
    if (!fine) return {false, cover};
  }
  return {true, std::nullopt};
}

bool tensor_onto_ideal_bijective(const FiniteMonoid& m, const ElementSet& ideal,
                                 const LeftMSet& a) {
  RightMSet x = right_ideal_mset(m, ideal);
  TensorResult t = tensor(x, a);
  const auto mem = ideal.members();
  // canonical map (x, c) ↦ x·c must be constant on classes and bijective
  std::vector<int> image_of_class(t.size, -1);
  for (int xi = 0; xi < x.carrier; ++xi)
    for (int c = 0; c < a.carrier; ++c) {
      int cls = t.cls(xi, c);
      int img = a.act(mem[xi], c);
      if (image_of_class[cls] == -1)
        image_of_class[cls] = img;
      else if (image_of_class[cls] != img)
        fail(ErrorKind::InternalInvariant, "canonical tensor map is not well defined");
    }
  if (t.size != a.carrier) return false;
  std::vector<char> hit(a.carrier, 0);
  for (int v : image_of_class) {
    if (v < 0 || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

TransversalityVerdict point_transversality(const FiniteMonoid& m, Elt e, const ElementSet& ideal,
                                           int max_sample_size) {
  if (!m.is_idempotent(e)) fail(ErrorKind::IndexOutOfRange, "not an idempotent", {e});
  TransversalityVerdict v;
  v.point = e;
  v.ideal = ideal;
  v.by_membership = ideal.test(e);

  TopologyFamily f = topology_from_ideal(m, ideal);
  LeftMSet me = principal_left_mset(m, e);

  v.by_tensor = true;
  for (const auto& cover : f.members)
    if (!tensor_onto_ideal_bijective(m, cover, me)) {
      v.by_tensor = false;
      break;
    }

  v.by_sheaf = true;
  for (int s = 1; s <= max_sample_size && v.by_sheaf; ++s) {
    RightMSet direct_image = hom_set_as_right_mset(me, s);
    if (!is_sheaf(direct_image, f).verdict) v.by_sheaf = false;
  }

  if (v.by_membership != v.by_tensor || v.by_tensor != v.by_sheaf)
    fail(ErrorKind::MethodDisagreement,
         "transversality methods disagree at e = " + m.display(e) + ", ideal = " +
             ideal.to_string(m.names()),
         {e});
  v.verdict = v.by_membership;
  return v;
}

}  // namespace mtopos
