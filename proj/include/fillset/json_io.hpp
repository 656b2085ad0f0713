#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fillset/arrangement.hpp"
#include "fillset/bounds.hpp"
#include "fillset/constructions.hpp"
#include "fillset/homotopy.hpp"
#include "fillset/hyperbolic.hpp"
#include "fillset/surgery.hpp"

namespace fillset {

using ordered_json = nlohmann::ordered_json;

/// Canonical interchange form.  Field order is fixed; every value is an
/// integer.  `boundary_circles` and per-region `boundary` appear only for
/// cylinder arrangements.
inline ordered_json arrangement_to_json(const Arrangement& arr) {
  ordered_json j;
  j["surface"] = {{"genus", arr.surface.genus}, {"punctures", arr.surface.punctures}};
  if (arr.boundary_circles != 0) j["boundary_circles"] = arr.boundary_circles;
  j["curves"] = arr.curves;
  j["crossings"] = ordered_json::array();
  for (const Crossing& x : arr.crossings) {
    ordered_json c;
    c["id"] = x.id;
    c["passages"] = {{x.passages[0].first, x.passages[0].second}, {x.passages[1].first, x.passages[1].second}};
    c["sign"] = x.sign;
    j["crossings"].push_back(std::move(c));
  }
  j["regions"] = ordered_json::array();
  for (const Region& r : arr.regions) {
    ordered_json reg;
    reg["chi"] = r.chi;
    reg["punctures"] = r.punctures;
    reg["walks"] = r.walks;
    if (r.boundary) reg["boundary"] = true;
    j["regions"].push_back(std::move(reg));
  }
  return j;
}

inline Arrangement arrangement_from_json(const ordered_json& j) {
  Arrangement arr;
  arr.surface.genus = j.at("surface").at("genus").get<int>();
  arr.surface.punctures = j.at("surface").at("punctures").get<int>();
  arr.boundary_circles = j.value("boundary_circles", 0);
  arr.curves = j.at("curves").get<std::vector<std::vector<int>>>();
  for (const auto& c : j.at("crossings")) {
    Crossing x;
    x.id = c.at("id").get<int>();
    const auto& p = c.at("passages");
    x.passages[0] = {p.at(0).at(0).get<int>(), p.at(0).at(1).get<int>()};
    x.passages[1] = {p.at(1).at(0).get<int>(), p.at(1).at(1).get<int>()};
    x.sign = c.at("sign").get<int>();
    arr.crossings.push_back(x);
  }
  for (const auto& rj : j.at("regions")) {
    Region r;
    r.chi = rj.at("chi").get<int>();
    r.punctures = rj.at("punctures").get<int>();
    r.walks = rj.at("walks").get<std::vector<std::vector<int>>>();
    r.boundary = rj.value("boundary", false);
    arr.regions.push_back(std::move(r));
  }
  return arr;
}

inline std::string arrangement_to_string(const Arrangement& arr) {
  return arrangement_to_json(arr).dump(2) + "\n";
}

inline Arrangement arrangement_from_string(const std::string& text) {
  return arrangement_from_json(ordered_json::parse(text));
}

inline ordered_json certificate_to_json(const FillingCertificate& cert) {
  ordered_json j;
  j["k"] = cert.k;
  j["intersections_ok"] = cert.intersections_ok;
  j["max_intersections"] = cert.max_intersections;
  if (cert.worst_pair) j["worst_pair"] = {cert.worst_pair->first, cert.worst_pair->second};
  j["all_essential"] = cert.all_essential;
  j["inessential"] = cert.inessential;
  j["pairwise_non_homotopic"] = cert.pairwise_non_homotopic;
  j["homotopic_pairs"] = ordered_json::array();
  for (const auto& [a, b] : cert.homotopic_pairs) j["homotopic_pairs"].push_back({a, b});
  j["complement_ok"] = cert.complement_ok;
  j["bad_regions"] = cert.bad_regions;
  j["pass"] = cert.pass;
  return j;
}

inline ordered_json bound_report_to_json(const BoundReport& r) {
  ordered_json j;
  j["formula"] = formula_name(r.formula);
  ordered_json in;
  in["genus"] = r.sig.genus;
  in["punctures"] = r.sig.punctures;
  if (r.k != 0) in["k"] = r.k;
  if (r.m_cap != 0) in["m_cap"] = r.m_cap;
  j["inputs"] = std::move(in);
  j["threshold"] = {{"num", r.threshold.num()}, {"den", r.threshold.den()}};
  if (r.formula == Formula::GenusWindow) {
    j["interval"] = {{"lo", r.interval_lo}, {"hi", r.interval_hi}};
    j["candidates"] = r.candidates;
  } else {
    j["minimal_n"] = r.minimal_n;
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline ordered_json systole_bound_to_json(const SurfaceSig& sig, double ell, const SystoleCountBound& b) {
  ordered_json j;
  j["formula"] = "SYSTOLE_COUNT";
  j["inputs"] = {{"genus", sig.genus}, {"punctures", sig.punctures}, {"ell", ell}};
  j["degenerate"] = b.degenerate;
  j["bound"] = b.value;
  j["ceil"] = b.ceiling;
  return j;
}

inline ordered_json ngon_report_to_json(const NgonSystoleReport& rep) {
  ordered_json j;
  j["n"] = rep.geometry.n;
  j["d"] = rep.geometry.apothem;
  j["d_k"] = rep.geometry.ortho;
  j["systole_length"] = rep.geometry.systole_length;
  j["bound_check"] = {{"lower_bound", rep.count_lower_bound}, {"respected", rep.count_bound_respected}};
  return j;
}

inline ordered_json genus_plan_to_json(const GenusPlan& plan) {
  ordered_json j;
  j["genus"] = plan.genus;
  j["punctures"] = plan.punctures;
  j["k"] = plan.k;
  j["x"] = plan.x;
  j["y"] = plan.y;
  j["window"] = {{"lo", plan.window_lo}, {"hi_proof", plan.window_hi_proof}, {"hi_stated", plan.window_hi_stated}};
  j["xy_in_proof_window"] = plan.xy_in_proof_window;
  j["puncture_feasible"] = plan.puncture_feasible;
  j["trace"] = plan.trace;
  return j;
}

/// Region-adjacency graph: one node per region, one edge per curve arc
/// joining the regions on its two sides.
inline std::string arrangement_to_dot(const Arrangement& arr) {
  Topology topo = analyze(arr);
  auto owner = region_of_dart_map(arr, topo);
  std::ostringstream out;
  out << "graph regions {\n";
  for (int r = 0; r < static_cast<int>(arr.regions.size()); ++r) {
    out << "  r" << r << " [label=\"r" << r << " chi=" << arr.regions[r].chi
        << " p=" << arr.regions[r].punctures << (arr.regions[r].boundary ? " rim" : "") << "\"];\n";
  }
  for (int arc = 0; arc < topo.arc_count; ++arc) {
    int fwd = dart_of(arc, false);
    out << "  r" << owner[fwd] << " -- r" << owner[dart_reverse(fwd)] << " [label=\"c"
        << topo.curve_of_arc(arc) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace fillset
