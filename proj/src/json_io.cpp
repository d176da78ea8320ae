#include "json_io.hpp"

#include <utility>
#include <vector>

#include "errors.hpp"

namespace difun {

namespace {

nlohmann::json mask_to_points(Mask m) {
  nlohmann::json out = nlohmann::json::array();
  for (int x = 1; x <= kMaxGroundSet; ++x)
    if (m & (Mask{1} << (x - 1))) out.push_back(x);
  return out;
}

Mask points_to_mask(const nlohmann::json& arr, int n, const char* side) {
  if (!arr.is_array() || arr.empty())
    throw ParseError(std::string(side) + " block must be a nonempty array");
  Mask m = 0;
  for (const auto& v : arr) {
    if (!v.is_number_integer())
      throw ParseError(std::string(side) + " block holds a non-integer");
    const int x = v.get<int>();
    if (x < 1 || x > n)
      throw ParseError(std::string(side) + " block point " +
                       std::to_string(x) + " is outside 1.." +
                       std::to_string(n));
    m |= Mask{1} << (x - 1);
  }
  return m;
}

}  // namespace

nlohmann::json relation_to_json(const DifunRelation& a) {
  nlohmann::json blocks = nlohmann::json::array();
  for (int i = 0; i < a.rank(); ++i)
    blocks.push_back({mask_to_points(a.kernel().block(i)),
                      mask_to_points(a.image_block(i))});
  return {{"n", a.n()}, {"blocks", std::move(blocks)}};
}

DifunRelation relation_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("relation must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("relation needs an integer \"n\"");
  if (!doc.contains("blocks") || !doc["blocks"].is_array())
    throw ParseError("relation needs a \"blocks\" array");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxGroundSet)
    throw ParseError("ground set size must be within 1.." +
                     std::to_string(kMaxGroundSet));

  std::vector<std::pair<Mask, Mask>> rects;
  for (const auto& entry : doc["blocks"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw ParseError("each block entry must be a [kernel, cokernel] pair");
    rects.push_back({points_to_mask(entry[0], n, "kernel"),
                     points_to_mask(entry[1], n, "cokernel")});
  }
  return DifunRelation::from_block_pairs(n, std::move(rects));
}

nlohmann::json element_set_to_json(const ElementSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : s) out.push_back(relation_to_json(e));
  return out;
}

ElementSet element_set_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("element set must be a JSON array");
  std::vector<DifunRelation> elems;
  for (const auto& entry : doc) elems.push_back(relation_from_json(entry));
  for (const auto& e : elems)
    if (e.n() != elems.front().n())
      throw DimensionError("element set mixes ground set sizes");
  return ElementSet(std::move(elems));
}

nlohmann::json partition_to_json(const SetPartition& p) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < p.block_count(); ++i)
    out.push_back(mask_to_points(p.block(i)));
  return out;
}

std::string count_to_string(const BigCount& value) { return value.str(); }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FormulaOnly: return "formula-only";
    case Verdict::ClosureVerified: return "closure-verified";
    case Verdict::ExhaustivelyVerified: return "exhaustively-verified";
  }
  return "formula-only";
}

nlohmann::json rank_report_to_json(const RankReport& report) {
  return {{"n", report.n},
          {"r", report.r},
          {"rho", count_to_string(report.rho)},
          {"rank", count_to_string(report.rank)},
          {"relative_rank", count_to_string(report.relative_rank)},
          {"brandt_rank", count_to_string(report.brandt_rank)},
          {"constructed_set_size", count_to_string(report.constructed_set_size)},
          {"claimed_range", report.claimed_range},
          {"verification", verdict_name(report.verification)}};
}

nlohmann::json audit_verdict_to_json(const AuditVerdict& verdict) {
  nlohmann::json kers = nlohmann::json::array();
  for (const auto& p : verdict.missing_kernels) kers.push_back(partition_to_json(p));
  nlohmann::json cokers = nlohmann::json::array();
  for (const auto& p : verdict.missing_cokernels)
    cokers.push_back(partition_to_json(p));
  return {{"passed", verdict.passed},
          {"missing_kernels", std::move(kers)},
          {"missing_cokernels", std::move(cokers)},
          {"missing_collapse_ranks", verdict.missing_collapse_ranks},
          {"missing_expand_ranks", verdict.missing_expand_ranks}};
}

}  // namespace difun
