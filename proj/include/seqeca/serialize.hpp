#pragma once

#include <json.hpp>

#include "seqeca/classify.hpp"
#include "seqeca/diagram.hpp"
#include "seqeca/search.hpp"
#include "seqeca/verify.hpp"

namespace seqeca {

using json = nlohmann::json;

inline json to_json(const OrbitRecord& rec) {
  json limit = json::array();
  for (const auto& c : rec.limit_set) limit.push_back(c.to_string());
  return json{{"transient", rec.transient}, {"cycle", rec.cycle}, {"limit_set", limit}};
}

inline json to_json(const UniversalityVerdict& v) {
  json j{{"rule", v.rule_code},
         {"n", v.n},
         {"mode", v.mode.to_string()},
         {"universal", v.universal},
         {"witness", nullptr},
         {"witness_orbit", nullptr}};
  if (v.witness) j["witness"] = v.witness->to_string();
  if (v.witness_orbit) j["witness_orbit"] = to_json(*v.witness_orbit);
  return j;
}

inline json to_json(const CoveringResult& r) {
  json j{{"rule", r.rule_code}, {"n", r.n}, {"covering", nullptr}, {"witnesses", json::array()}};
  if (r.covering) {
    json entries = json::array();
    for (const auto& entry : *r.covering) {
      json covers = json::array();
      for (const auto& c : entry.covers) covers.push_back(c.to_string());
      entries.push_back(json{{"mode", entry.mode.to_string()}, {"covers", covers}});
    }
    j["covering"] = entries;
  }
  for (const auto& w : r.witnesses) j["witnesses"].push_back(w.to_string());
  return j;
}

inline json to_json(const FixedPointReport& r) {
  json fps = json::array();
  for (const auto& c : r.fixed_points) fps.push_back(c.to_string());
  return json{{"rule", r.rule_code}, {"n", r.n}, {"exists", r.exists}, {"fixed_points", fps}};
}

inline json to_json(const IsolatedReport& r) {
  json fps = json::array(), iso = json::array();
  for (const auto& c : r.fixed_points) fps.push_back(c.to_string());
  for (const auto& c : r.isolated) iso.push_back(c.to_string());
  return json{{"rule", r.rule_code},
              {"n", r.n},
              {"fixed_points", fps},
              {"isolated", iso},
              {"degenerate", r.degenerate}};
}

inline json to_json(const SizeEvidence& ev) {
  return json{{"n", ev.n},
              {"fixed_points", ev.fixed_point_count},
              {"fixed_points_exist", ev.fixed_points_exist},
              {"reachable_fixed_point", ev.reachable_fixed_point},
              {"degenerate", ev.degenerate},
              {"all_sequential_universal", ev.all_sequential_universal},
              {"exists_universal_sequential", ev.exists_universal_sequential},
              {"covering_exists", ev.covering_exists},
              {"audit_universal", ev.audit_universal},
              {"non_convergent", ev.non_convergent_count}};
}

inline json to_json(const ClassificationReport& r) {
  json evidence = json::array();
  for (const auto& ev : r.evidence) evidence.push_back(to_json(ev));
  json j{{"rule", r.rule_code},
         {"category", category_name(r.category)},
         {"wolfram_class", wolfram_class(r.rule_code)},
         {"conjecture", r.conjecture},
         {"discrepancy", r.discrepancy},
         {"expected", nullptr},
         {"evidence", evidence}};
  if (r.expected) j["expected"] = category_name(*r.expected);
  return j;
}

inline json to_json(const Certificate& c) {
  return json{{"id", c.id},
              {"title", c.title},
              {"kind", c.conjecture ? "conjecture" : "theorem"},
              {"pass", c.pass},
              {"details", c.details}};
}

inline json to_json(const SpaceTimeDiagram& d) {
  json rows = json::array();
  for (const auto& row : d.rows)
    rows.push_back(json{{"config", row.config.to_string()},
                        {"step_boundary", row.step_boundary},
                        {"step", row.step_index},
                        {"substep", row.substep_index}});
  return json{{"rows", rows}, {"record", to_json(d.record)}};
}

}  // namespace seqeca
