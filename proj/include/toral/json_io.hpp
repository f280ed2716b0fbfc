#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "toral/classify.hpp"

namespace toral {

using Json = nlohmann::json;

// Single schema-version integer at every document root; loaders refuse
// mismatched majors (certificates are long-lived artifacts).
inline constexpr int kSchemaVersion = 1;

// graph documents: rationals as "num/den" strings (integer shorthand
// accepted on input), windings as integer pairs, curves referenced by index
Json graph_to_json(const TorusGraph& tg);
Json graph_to_json(const MultiGraph& g);

struct LoadedGraph {
    MultiGraph graph;
    std::optional<TorusGraph> embedded;  // present when the document carries geometry
};
LoadedGraph graph_from_json(const Json& doc);

Json certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const Json& doc);

Json minor_model_to_json(const MinorModel& model);
MinorModel minor_model_from_json(const Json& doc);

Json obstruction_to_json(const ObstructionCertificate& obstruction);
ObstructionCertificate obstruction_from_json(const Json& doc);

Json verdict_to_json(const ChiralityVerdict& verdict);
ChiralityVerdict verdict_from_json(const Json& doc);

}  // namespace toral
