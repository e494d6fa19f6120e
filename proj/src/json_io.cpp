#include "mtopos/json_io.hpp"

#include <fstream>
#include <sstream>

namespace mtopos {

json monoid_to_json(const FiniteMonoid& m) {
  json j;
  j["size"] = m.size();
  j["identity"] = m.identity();
  j["table"] = m.table_rows();
  if (m.has_names()) j["names"] = m.names();
  return j;
}

FiniteMonoid monoid_from_json(const json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<Elt>>>();
    Elt identity = j.at("identity").get<Elt>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    if (j.contains("size") && j.at("size").get<int>() != static_cast<int>(table.size()))
      fail(ErrorKind::ParseError, "declared size does not match the table");
    return validate_monoid(table, identity, std::move(names));
  } catch (const json::exception& ex) {
    fail(ErrorKind::ParseError, std::string("bad monoid JSON: ") + ex.what());
  }
}

FiniteMonoid transformations_from_json(const json& j) {
  try {
    int degree = j.at("degree").get<int>();
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    return from_transformations(degree, gens);
  } catch (const json::exception& ex) {
    fail(ErrorKind::ParseError, std::string("bad transformation JSON: ") + ex.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    fail(ErrorKind::ParseError, path + ": " + ex.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

FiniteMonoid monoid_from_file(const std::string& path) {
  json j = load_json_file(path);
  if (j.contains("generators")) return transformations_from_json(j);
  return monoid_from_json(j);
}

json mset_to_json(const LeftMSet& a) {
  json j;
  j["monoid"] = monoid_to_json(a.monoid);
  j["side"] = "left";
  j["size"] = a.carrier;
  std::vector<std::vector<int>> rows(a.monoid.size(), std::vector<int>(a.carrier));
  for (Elt m = 0; m < a.monoid.size(); ++m)
    for (int c = 0; c < a.carrier; ++c) rows[m][c] = a.act(m, c);
  j["action"] = rows;
  return j;
}

json mset_to_json(const RightMSet& a) {
  json j;
  j["monoid"] = monoid_to_json(a.monoid);
  j["side"] = "right";
  j["size"] = a.carrier;
  std::vector<std::vector<int>> rows(a.carrier, std::vector<int>(a.monoid.size()));
  for (int c = 0; c < a.carrier; ++c)
    for (Elt m = 0; m < a.monoid.size(); ++m) rows[c][m] = a.act(c, m);
  j["action"] = rows;
  return j;
}

namespace {

FiniteMonoid mset_monoid_field(const json& j) {
  const auto& mj = j.at("monoid");
  if (mj.is_string()) return monoid_from_file(mj.get<std::string>());
  return monoid_from_json(mj);
}

}  // namespace

LeftMSet left_mset_from_json(const json& j) {
  try {
    if (j.at("side").get<std::string>() != "left")
      fail(ErrorKind::ParseError, "expected a left M-set");
    FiniteMonoid m = mset_monoid_field(j);
    auto rows = j.at("action").get<std::vector<std::vector<int>>>();
    auto a = validate_left_action(m, rows);
    if (j.contains("size") && j.at("size").get<int>() != a.carrier)
      fail(ErrorKind::ParseError, "declared size does not match the action");
    return a;
  } catch (const json::exception& ex) {
    fail(ErrorKind::ParseError, std::string("bad M-set JSON: ") + ex.what());
  }
}

RightMSet right_mset_from_json(const json& j) {
  try {
    if (j.at("side").get<std::string>() != "right")
      fail(ErrorKind::ParseError, "expected a right M-set");
    FiniteMonoid m = mset_monoid_field(j);
    auto rows = j.at("action").get<std::vector<std::vector<int>>>();
    auto a = validate_right_action(m, rows);
    if (j.contains("size") && j.at("size").get<int>() != a.carrier)
      fail(ErrorKind::ParseError, "declared size does not match the action");
    return a;
  } catch (const json::exception& ex) {
    fail(ErrorKind::ParseError, std::string("bad M-set JSON: ") + ex.what());
  }
}

json classification_to_json(const FiniteMonoid& m, const PointsClassification& pc) {
  json j;
  std::vector<std::string> idem_names;
  for (Elt e : pc.idempotents) idem_names.push_back(m.display(e));
  j["idempotents"] = idem_names;
  j["j_classes"] = [&] {
    std::vector<std::vector<std::string>> cls;
    for (const auto& c : pc.j_classes.classes()) {
      std::vector<std::string> names;
      for (int pos : c) names.push_back(m.display(pc.idempotents[pos]));
      cls.push_back(std::move(names));
    }
    return cls;
  }();
  std::vector<std::string> reps;
  for (Elt e : pc.representatives) reps.push_back(m.display(e));
  j["representatives"] = reps;
  std::vector<int> sizes;
  for (Elt e : pc.representatives)
    sizes.push_back(principal_ideal(m, e, IdealKind::left).count());
  j["point_mset_sizes"] = sizes;
  json endos = json::array();
  for (Elt e : pc.representatives) endos.push_back(monoid_to_json(endomorphism_monoid_of_point(m, e)));
  j["endo_monoids"] = endos;
  // |Hom(e, f)| matrix of the idempotent category, rows = e, cols = f
  std::vector<std::vector<int>> hom_sizes(pc.idempotents.size(),
                                          std::vector<int>(pc.idempotents.size()));
  for (std::size_t ei = 0; ei < pc.idempotents.size(); ++ei)
    for (std::size_t fi = 0; fi < pc.idempotents.size(); ++fi)
      hom_sizes[ei][fi] = pc.category.hom_set(static_cast<int>(ei), static_cast<int>(fi)).count();
  j["hom_set_sizes"] = hom_sizes;
  return j;
}

json lattice_to_json(const FiniteMonoid& m, const IdealLattice& l) {
  json j;
  std::vector<std::vector<int>> elems;
  for (const auto& s : l.elements) elems.push_back(s.members());
  j["elements"] = elems;
  std::vector<std::string> labels;
  for (const auto& s : l.elements) labels.push_back(s.to_string(m.names()));
  j["labels"] = labels;
  j["join"] = l.join;
  j["meet"] = l.meet;
  return j;
}

json suite_report_to_json(const SuiteReport& r, bool with_timing) {
  json j;
  j["all_pass"] = r.all_pass;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (with_timing) cj["millis"] = c.millis;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace mtopos
