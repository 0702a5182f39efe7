#pragma once

#include <nlohmann/json.hpp>

#include "morse/bracket.hpp"
#include "morse/dsl.hpp"
#include "morse/invariants.hpp"
#include "morse/search.hpp"

namespace morse {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return Json{{"num", r.num()}, {"den", r.den()}}; }

/// Fixed field order: the report schema is part of the CLI contract.
inline Json to_json(const EmbeddingReport& r) {
  Json gaps = Json::array();
  for (const auto& g : r.profile.gaps) gaps.push_back(Json{{"width", g.width}, {"class", to_string(g.classification)}});
  Json j;
  j["width"] = r.width;
  j["trunk"] = r.trunk;
  j["height"] = r.height;
  j["bridge"] = r.bridge;
  j["critical_count"] = r.critical_count;
  j["otp_vector"] = r.otp_vector;
  j["proportion"] = to_json(r.proportion);
  j["average_trunk"] = to_json(r.average_trunk);
  j["rep_upper"] = r.rep_upper;
  j["waist_upper"] = r.waist_upper;
  j["gaps"] = std::move(gaps);
  return j;
}

inline Json to_json(const SearchResult& r) {
  Json trace = Json::array();
  for (const auto& m : r.trace) trace.push_back(to_string(m));
  Json j;
  j["best_word"] = serialize(r.best_word);
  j["best_report"] = to_json(r.best_report);
  j["trace"] = std::move(trace);
  j["visited"] = r.visited;
  return j;
}

}  // namespace morse
