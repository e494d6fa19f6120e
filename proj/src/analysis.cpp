#include "mtopos/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "mtopos/json_io.hpp"

namespace mtopos {

AnalysisReport analyze_monoid(const FiniteMonoid& m) {
  AnalysisReport r;
  r.monoid = m;
  r.size = m.size();
  r.idempotent_count = static_cast<int>(idempotents(m).size());
  r.regular = is_regular(m);
  r.commutative = m.commutative();
  r.f_monoid = is_F_monoid(m, ElementSet::full(m.size())).verdict;
  r.right_zero_elt = right_zero(m, ElementSet::full(m.size()));

  r.points = classify_points(m);
  for (Elt e : r.points.representatives) {
    r.point_mset_sizes.push_back(principal_ideal(m, e, IdealKind::left).count());
    r.endo_monoids.push_back(endomorphism_monoid_of_point(m, e));
  }

  r.bijection = lattice_opens_bijection(m);
  r.lattice = r.bijection.lattice;
  r.irreducibles = lattice_irreducibles(m, r.lattice);
  r.distributive = true;  // asserted during lattice construction
  r.iii_closed = is_III_closed(m).verdict;
  for (const auto& ideal : r.lattice.elements)
    r.topology_sizes.push_back(topology_from_ideal(m, ideal).members.size());

  auto [sl, q] = semilattice_quotient(m);
  r.sl_quotient = sl;
  r.induced_points = induced_point_map(m, sl, q);
  auto pc_sl = classify_points(sl);
  std::vector<char> hit(pc_sl.representatives.size(), 0);
  for (int c : r.induced_points) hit[c] = 1;
  r.induced_surjective = std::all_of(hit.begin(), hit.end(), [](char v) { return v == 1; });

  // cross-section consistency
  const int points = r.points.num_points();
  if (points != r.points.j_classes.num_classes() ||
      points != static_cast<int>(r.irreducibles.size()))
    fail(ErrorKind::InternalInvariant, "points / J-classes / irreducibles counts differ");
  if (r.lattice.size() != static_cast<int>(r.bijection.opens.size()))
    fail(ErrorKind::InternalInvariant, "ideal and open counts differ");
  return r;
}

nlohmann::json analysis_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  const auto& m = r.monoid;
  j["summary"] = {
      {"size", r.size},
      {"idempotents", r.idempotent_count},
      {"regular", r.regular},
      {"commutative", r.commutative},
      {"f_monoid", r.f_monoid},
      {"right_zero", r.right_zero_elt ? nlohmann::json(m.display(*r.right_zero_elt))
                                      : nlohmann::json(nullptr)},
  };
  j["points"] = classification_to_json(m, r.points);
  j["lattice"] = lattice_to_json(m, r.lattice);
  j["lattice"]["irreducibles"] = r.irreducibles;
  j["lattice"]["distributive"] = r.distributive;
  j["lattice"]["iii_closed"] = r.iii_closed;
  j["topologies"] = [&] {
    nlohmann::json t = nlohmann::json::array();
    for (int i = 0; i < r.lattice.size(); ++i)
      t.push_back({{"ideal", r.lattice.elements[i].to_string(m.names())},
                   {"family_size", r.topology_sizes[i]}});
    return t;
  }();
  j["poset"] = [&] {
    nlohmann::json p;
    std::vector<std::string> reps;
    for (Elt e : r.bijection.poset.reps) reps.push_back(m.display(e));
    p["class_representatives"] = reps;
    // Hasse edges x -> y for covering pairs x < y
    std::vector<std::vector<int>> edges;
    const auto& poset = r.bijection.poset;
    for (int x = 0; x < poset.size(); ++x)
      for (int y = 0; y < poset.size(); ++y) {
        if (x == y || !poset.leq[x][y]) continue;
        bool covering = true;
        for (int z = 0; z < poset.size() && covering; ++z)
          if (z != x && z != y && poset.leq[x][z] && poset.leq[z][y]) covering = false;
        if (covering) edges.push_back({x, y});
      }
    p["hasse_edges"] = edges;
    p["opens_count"] = r.bijection.opens.size();
    p["opens"] = r.bijection.opens;
    return p;
  }();
  j["semilattice"] = {
      {"size", r.sl_quotient.size()},
      {"induced_point_map", r.induced_points},
      {"surjective", r.induced_surjective},
  };
  return j;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string dot_lattice(const AnalysisReport& r) {
  const auto& m = r.monoid;
  const auto& l = r.lattice;
  std::ostringstream out;
  out << "digraph ideal_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < l.size(); ++i)
    out << "  n" << i << " [label=\"" << dot_escape(l.elements[i].to_string(m.names()))
        << "\"];\n";
  for (int i = 0; i < l.size(); ++i)
    for (int j = 0; j < l.size(); ++j) {
      if (i == j || l.join[i][j] != j) continue;  // i < j in the order
      bool covering = true;
      for (int z = 0; z < l.size() && covering; ++z)
        if (z != i && z != j && l.join[i][z] == z && l.join[z][j] == j) covering = false;
      if (covering) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string dot_poset(const AnalysisReport& r) {
  const auto& m = r.monoid;
  const auto& p = r.bijection.poset;
  std::ostringstream out;
  out << "digraph idem_j_poset {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int i = 0; i < p.size(); ++i)
    out << "  c" << i << " [label=\"[" << dot_escape(m.display(p.reps[i])) << "]\"];\n";
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.leq[x][y]) continue;
      bool covering = true;
      for (int z = 0; z < p.size() && covering; ++z)
        if (z != x && z != y && p.leq[x][z] && p.leq[z][y]) covering = false;
      if (covering) out << "  c" << x << " -> c" << y << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string analysis_summary(const AnalysisReport& r) {
  const auto& m = r.monoid;
  std::ostringstream out;
  out << "monoid: " << r.size << " elements, " << r.idempotent_count << " idempotents"
      << (r.commutative ? ", commutative" : "") << (r.regular ? ", regular" : "") << "\n";
  out << "F-monoid: " << (r.f_monoid ? "yes" : "no");
  if (r.right_zero_elt) out << " (right zero " << m.display(*r.right_zero_elt) << ")";
  out << "\n";
  out << "points: " << r.points.num_points() << " (J-classes of idempotents)\n";
  for (int i = 0; i < r.points.num_points(); ++i)
    out << "  point " << i << ": e = " << m.display(r.points.representatives[i])
        << ", |Me| = " << r.point_mset_sizes[i] << ", |End(p)| = " << r.endo_monoids[i].size()
        << "\n";
  out << "idempotent ideals: " << r.lattice.size() << (r.iii_closed ? " (III-closed)" : "")
      << "\n";
  for (int i = 0; i < r.lattice.size(); ++i)
    out << "  " << r.lattice.elements[i].to_string(m.names())
        << "  |F| = " << r.topology_sizes[i] << "\n";
  out << "order topology opens: " << r.bijection.opens.size() << "\n";
  out << "semilattice quotient: " << r.sl_quotient.size() << " elements, induced point map "
      << (r.induced_surjective ? "surjective" : "NOT surjective") << "\n";
  return out.str();
}

}  // namespace mtopos
