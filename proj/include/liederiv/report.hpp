#pragma once

#include "liederiv/theorems.hpp"
#include "liederiv/workspace.hpp"

#include <json.hpp>

#include <string>

namespace liederiv {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const StructureReport& r);
Json to_json(const CenterAnalysis& c);
Json to_json(const FaithfulnessReport& f);
Json to_json(const LieComponents& c);
Json to_json(const ConditionReport& r);
Json to_json(const CriteriaReport& r);
Json to_json(const TheoremVerdict& v);
Json to_json(const PropertyTally& t);
Json to_json(const FuzzReport& r);

/// Loads every object and assembles every context's GMA.
Json validate_report(const Workspace& ws);
/// Structure of every algebra and of the chosen contexts (all when empty).
Json analyze_report(const Workspace& ws, const std::string& context, std::uint64_t budget);
/// Properness of one map, or of every map of the context when `map` is
/// empty. Criteria/oracle disagreement raises ConsistencyError.
Json proper_report(const Workspace& ws, const std::string& context, const std::string& map,
                   std::uint64_t budget);
/// Every applicable theorem checker with its oracle cross-check. Sets
/// `mismatch` when a checker holds but the oracle disagrees.
Json theorems_report(const Workspace& ws, const std::string& context, std::uint64_t budget,
                     bool& mismatch);
Json examples_report();

/// Indented human-readable rendering of a report.
std::string render_text(const Json& j);

} // namespace liederiv
