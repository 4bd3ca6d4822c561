#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistordef/deformation_rep.hpp"
#include "twistordef/invariant_cycle.hpp"
#include "twistordef/moduli.hpp"

namespace twistordef {

/// [["(m,n)", multiplicity], ...] in canonical weight order.
nlohmann::json weight_rep_json(const WeightRep& rep);

nlohmann::json subgroup_json(const SubgroupReport& report);

/// Stable report document:
///   {"n", "rep": {"rep1","rep2","rep3"}, "dims": {"rep1","rep2","rep3","total"},
///    "subgroups": [{"p","q","k_label","fixed_dim","excess","moduli_dim","semifree","lebrun"}]}
nlohmann::json report_json(int n, const AssembledRep& rep, const std::vector<SubgroupReport>& subgroups);

/// Returns the list of schema violations; empty means valid. Extra fields
/// are allowed.
std::vector<std::string> validate_report_schema(const nlohmann::json& doc);

nlohmann::json cycle_json(const CycleModel& cycle, std::optional<SubgroupDirection> k = std::nullopt);

nlohmann::json audit_json(const AuditReport& audit);

extern const char* const kSubgroupCsvHeader;

/// One row per subgroup; absent values are empty fields.
std::string subgroups_csv(int n, const std::vector<SubgroupReport>& subgroups);

}  // namespace twistordef
