#pragma once

/// @file report_json.hpp
/// @brief JSON rendering of reports. Rationals are always "p/q" (or "p")
/// strings, never floating point. Keys keep insertion order, so a parsed
/// report dumps back byte-for-byte.

#include <json.hpp>

#include "evenchi/euler.hpp"
#include "evenchi/relations.hpp"

namespace evenchi {

using Json = nlohmann::ordered_json;

inline Json to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& it : r.items) {
    items.push_back(Json{{"description", it.description},
                         {"expected", it.expected.str()},
                         {"actual", it.actual.str()},
                         {"ok", it.ok}});
  }
  return Json{{"name", r.name}, {"passed", r.passed}, {"items", std::move(items)}};
}

/// Inverse of to_json(CheckReport); throws on a malformed document.
inline CheckReport check_report_from_json(const Json& j) {
  CheckReport r;
  r.name = j.at("name").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  for (const auto& it : j.at("items")) {
    r.items.push_back({it.at("description").get<std::string>(),
                       Rational::parse(it.at("expected").get<std::string>()),
                       Rational::parse(it.at("actual").get<std::string>()), it.at("ok").get<bool>()});
  }
  return r;
}

inline Json to_json(const EulerComparison& c) {
  auto opt = [](const std::optional<Rational>& v) { return v ? Json(v->str()) : Json(nullptr); };
  return Json{{"classical", std::to_string(c.classical)},
              {"even_formula", opt(c.even_formula)},
              {"boundary_formula", opt(c.boundary_formula)},
              {"agree", c.agree}};
}

inline Json to_json(const FVector& fv) {
  return Json{{"dimension", fv.dimension()}, {"f", fv.counts()}};
}

inline Json to_json(const HVector& h) {
  Json entries = Json::array();
  for (const auto& e : h.entries) entries.push_back(e.str());
  return Json{{"dimension", h.dimension}, {"h", std::move(entries)}};
}

inline Json facets_to_json(const SimplicialComplex& c) {
  return Json{{"dimension", c.dimension()}, {"facets", c.facet_lists()}};
}

}  // namespace evenchi
