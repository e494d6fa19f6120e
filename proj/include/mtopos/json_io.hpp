#pragma once

#include <string>

#include <json.hpp>

#include "mtopos/mset.hpp"
#include "mtopos/oracle.hpp"
#include "mtopos/points.hpp"
#include "mtopos/topology.hpp"

namespace mtopos {

using nlohmann::json;

/// {"size": n, "identity": i, "table": [[...], ...], "names": [...]}
json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const json& j);

/// {"degree": n, "generators": [[images...], ...]}
FiniteMonoid transformations_from_json(const json& j);

/// Reads either format (keyed by "table" vs "generators").
/// Throws Error(ParseError) on malformed input or missing files.
FiniteMonoid monoid_from_file(const std::string& path);

/// {"monoid": <monoid json or file path>, "side": "left"|"right",
///  "size": k, "action": [[...], ...]}
json mset_to_json(const LeftMSet& a);
json mset_to_json(const RightMSet& a);
LeftMSet left_mset_from_json(const json& j);
RightMSet right_mset_from_json(const json& j);

json classification_to_json(const FiniteMonoid& m, const PointsClassification& pc);
json lattice_to_json(const FiniteMonoid& m, const IdealLattice& l);
json suite_report_to_json(const SuiteReport& r, bool with_timing = false);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace mtopos
