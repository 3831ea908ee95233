#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "matchless/cli.hpp"
#include "matchless/formulas.hpp"
#include "matchless/oracle.hpp"
#include "matchless/subset.hpp"

namespace matchless::detail {

using Json = nlohmann::ordered_json;

inline double shown_elapsed(double ms) { return test_mode() ? 0.0 : ms; }

inline Json verdict_json(const Verdict& v) {
  Json j;
  j["holds"] = v.holds;
  j["lhs"] = to_string(v.lhs);
  j["rhs"] = to_string(v.rhs);
  j["margin"] = to_string(v.margin);
  j["regime_note"] = v.regime_note ? Json(*v.regime_note) : Json(nullptr);
  return j;
}

inline Json sets_json(std::span<const SubsetWord> sets) {
  Json j = Json::array();
  for (const auto& s : sets) j.push_back(s.to_string());
  return j;
}

inline Json oracle_json(const OracleResult& r, const std::optional<std::string>& witness_file) {
  Json j;
  j["value"] = to_string(r.value);
  j["witness_file"] = witness_file ? Json(*witness_file) : Json(nullptr);
  j["nodes"] = r.nodes;
  j["elapsed_ms"] = shown_elapsed(r.elapsed_ms);
  return j;
}

}  // namespace matchless::detail
