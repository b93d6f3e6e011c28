#pragma once

#include <cmath>
#include <limits>

#include "json.hpp"
#include "sgt/bounds.hpp"
#include "sgt/spectra.hpp"

namespace sgt::io {

using Json = nlohmann::ordered_json;

// NaN/inf are not JSON; they become null
inline Json num(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

inline Json to_json(const Rational& r) { return Json{{"num", r.num}, {"den", r.den}, {"value", r.value()}}; }

inline Json to_json(const Graph& g) {
  Json e = Json::array();
  for (auto [u, v] : g.edges()) e.push_back({u, v});
  Json j{{"name", g.name()}, {"n", g.n()}, {"m", g.m()}, {"edges", e}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline Json to_json(const Spectrum& s) {
  Json e = Json::array();
  for (auto& [v, m] : s.entries) e.push_back({{"value", v}, {"multiplicity", m}});
  return Json{{"kind", kind_name(s.kind)}, {"n", s.n()}, {"cluster_tol", s.cluster_tol}, {"values", s.values}, {"clusters", e}};
}

inline Json to_json(const ClosedForm& c) {
  Json e = Json::array();
  for (auto& [x, m] : c.entries) e.push_back({{"expr", x.str()}, {"value", num(x.eval())}, {"multiplicity", m}});
  return Json{{"source", c.source}, {"kind", kind_name(c.kind)}, {"entries", e}};
}

inline Json to_json(const InvariantReport& r) {
  Json j{{"n", r.n}, {"m", r.edge_count}, {"degree_min", r.degree_min}, {"degree_max", r.degree_max},
         {"degree_avg", to_json(r.degree_avg)}, {"connected", r.connected}};
  j["diameter"] = r.diameter ? Json(*r.diameter) : Json(nullptr);
  j["girth"] = r.girth == kInfinity ? Json("inf") : Json(r.girth);
  j["chi"] = r.chi ? Json(*r.chi) : Json(nullptr);
  j["iota"] = r.iota ? Json(*r.iota) : Json(nullptr);
  j["omega"] = r.omega ? Json(*r.omega) : Json(nullptr);
  j["beta"] = r.beta ? to_json(r.beta->beta) : Json(nullptr);
  j["bipartite"] = r.bipartition.has_value();
  j["skipped"] = r.skipped;
  return j;
}

inline Json to_json(const BoundRecord& r) {
  Json j{{"name", r.name}, {"statement", r.statement}, {"skipped", r.skipped}};
  if (r.skipped) {
    j["reason"] = r.inputs;
    return j;
  }
  j["lhs"] = num(r.lhs);
  j["relation"] = relation_str(r.relation);
  j["rhs"] = num(r.rhs);
  j["slack"] = num(r.slack);
  j["pass"] = r.pass;
  j["inputs"] = r.inputs;
  return j;
}

inline Json to_json(const AuditReport& a) {
  Json recs = Json::array();
  for (auto& r : a.records) recs.push_back(to_json(r));
  return Json{{"graph", a.graph}, {"seed", a.seed}, {"failures", a.failures()}, {"skipped", a.skipped()}, {"records", recs}};
}

}  // namespace sgt::io
