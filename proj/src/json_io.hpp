#ifndef DIFUN_JSON_IO_HPP_
#define DIFUN_JSON_IO_HPP_

#include <json.hpp>
#include <string>

#include "generators.hpp"
#include "relations.hpp"
#include "semigroup.hpp"

namespace difun {

// Relations travel as {"n": 3, "blocks": [[[1],[2]], [[2,3],[1,3]]]}: one
// [kernel block, cokernel block] pair per rectangle, kernel-min ordered.
// The empty relation has an empty block list.
nlohmann::json relation_to_json(const DifunRelation& a);

// Accepts blocks in any order; rejects structurally bad documents with
// ParseError and defers semantic checks (overlaps, stray points) to the
// relation constructors.
DifunRelation relation_from_json(const nlohmann::json& doc);

nlohmann::json element_set_to_json(const ElementSet& s);

// All elements must share one ground set; mixing sizes is a DimensionError.
ElementSet element_set_from_json(const nlohmann::json& doc);

nlohmann::json partition_to_json(const SetPartition& p);

// Counts are serialized as decimal strings: they outgrow 64 bits quickly.
std::string count_to_string(const BigCount& value);

std::string verdict_name(Verdict v);

nlohmann::json rank_report_to_json(const RankReport& report);
nlohmann::json audit_verdict_to_json(const AuditVerdict& verdict);

}  // namespace difun

#endif  // DIFUN_JSON_IO_HPP_
