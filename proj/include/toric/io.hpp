#pragma once
// JSON, DOT and plain-text serialization for fans, G-subdivisions,
// resolution graphs and wedges.  All emitters are deterministic: identical
// inputs produce byte-identical output.

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>

#include "gsub.hpp"
#include "resolution.hpp"
#include "series.hpp"

namespace toric {

using json = nlohmann::json;

namespace detail {

inline std::int64_t to_i64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v < lo || v > hi) throw std::invalid_argument("integer exceeds the JSON range");
  return v.convert_to<std::int64_t>();
}

inline json vec_json(const LatticeVector& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(to_i64(v[i]));
  return a;
}

inline LatticeVector vec_from_json(const json& a) {
  if (!a.is_array() || (a.size() != 2 && a.size() != 3))
    throw std::invalid_argument("expected a lattice vector of dimension 2 or 3");
  std::vector<Int> c;
  for (const auto& e : a) {
    if (!e.is_number_integer()) throw std::invalid_argument("lattice coordinates must be integers");
    c.push_back(Int(e.get<std::int64_t>()));
  }
  return c.size() == 2 ? LatticeVector{c[0], c[1]} : LatticeVector{c[0], c[1], c[2]};
}

inline Rat rat_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

}  // namespace detail

// canonical textual form of a JSON document
inline std::string json_text(const json& j) { return j.dump(2) + "\n"; }

inline json fan_to_json(const Fan& fan) {
  json j;
  j["rays"] = json::array();
  for (const auto& r : fan.rays()) j["rays"].push_back(detail::vec_json(r));
  j["max_cones"] = json::array();
  for (const auto& mc : fan.max_cones()) j["max_cones"].push_back(mc);
  j["walls"] = json::array();
  for (const auto& w : fan.walls()) j["walls"].push_back(w);
  return j;
}

inline Fan fan_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rays") || !j.contains("max_cones") || !j.contains("walls"))
    throw std::invalid_argument("fan JSON needs rays, max_cones and walls");
  std::vector<LatticeVector> rays;
  for (const auto& r : j.at("rays")) rays.push_back(detail::vec_from_json(r));
  std::vector<std::vector<int>> max_cones;
  for (const auto& mc : j.at("max_cones")) max_cones.push_back(mc.get<std::vector<int>>());
  std::vector<std::array<int, 2>> walls;
  for (const auto& w : j.at("walls")) {
    auto v = w.get<std::vector<int>>();
    if (v.size() != 2) throw std::invalid_argument("fan JSON: walls are index pairs");
    walls.push_back({v[0], v[1]});
  }
  return Fan(std::move(rays), std::move(max_cones), std::move(walls));
}

// refined fan plus the home of every refined ray in the original fan
inline json gsub_to_json(const GSubdivision& s) {
  json j = fan_to_json(s.refined());
  json homes = json::object();
  const auto& hs = s.ray_homes();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    json h;
    h["dim"] = hs[i].dim;
    h["orig_rays"] = hs[i].orig_rays;
    homes[std::to_string(i)] = h;
  }
  j["ray_home"] = homes;
  return j;
}

inline json graph_to_json(const ResolutionGraph& g) {
  json j;
  j["nodes"] = json::array();
  for (const auto& n : g.nodes) {
    json e;
    e["id"] = n.id;
    e["ray"] = detail::vec_json(n.ray);
    e["copies"] = detail::to_i64(n.copies);
    if (n.weight)
      e["weight"] = detail::to_i64(*n.weight);
    else
      e["weight"] = nullptr;
    e["essential"] = n.essential;
    e["label"] = n.label;
    j["nodes"].push_back(e);
  }
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back(e);
  return j;
}

inline ResolutionGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs nodes and edges");
  ResolutionGraph g;
  for (const auto& e : j.at("nodes")) {
    GraphNode n;
    n.id = e.at("id").get<int>();
    n.ray = detail::vec_from_json(e.at("ray"));
    n.copies = Int(e.at("copies").get<std::int64_t>());
    if (!e.at("weight").is_null()) n.weight = Int(e.at("weight").get<std::int64_t>());
    n.essential = e.at("essential").get<bool>();
    n.label = e.at("label").get<std::string>();
    g.nodes.push_back(std::move(n));
  }
  for (const auto& e : j.at("edges")) {
    auto v = e.get<std::vector<int>>();
    if (v.size() != 2) throw std::invalid_argument("graph JSON: edges are index pairs");
    for (int k : v)
      if (k < 0 || k >= static_cast<int>(g.nodes.size()))
        throw std::invalid_argument("graph JSON: edge endpoint out of range");
    g.edges.push_back({v[0], v[1]});
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    if (g.nodes[i].id != static_cast<int>(i))
      throw std::invalid_argument("graph JSON: node ids must be consecutive from 0");
  return g;
}

inline json series_to_json(const TruncSeries2& s) {
  json a = json::array();
  for (const auto& [e, c] : s.terms())
    a.push_back(json::array({detail::to_i64(e[0]), detail::to_i64(e[1]), rat_str(c)}));
  return a;
}

inline TruncSeries2 series_from_json(const json& a, const std::optional<Int>& trunc) {
  if (!a.is_array()) throw std::invalid_argument("wedge component must be an array of terms");
  TruncSeries2 s(trunc);
  for (const auto& t : a) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument("wedge term must be [e1, e2, coefficient]");
    Int e1(t[0].get<std::int64_t>()), e2(t[1].get<std::int64_t>());
    Rat c = t[2].is_string() ? detail::rat_from_string(t[2].get<std::string>())
                             : Rat(Int(t[2].get<std::int64_t>()));
    s.add_term({e1, e2}, c);
  }
  return s;
}

// {"x":[[e1,e2,"num/den"],...],"y":[...],"z":[...],"trunc":N}, null trunc
// meaning exact components
inline json wedge_to_json(const Wedge& w) {
  json j;
  j["x"] = series_to_json(w.x());
  j["y"] = series_to_json(w.y());
  j["z"] = series_to_json(w.z());
  std::optional<Int> tr;
  for (const auto* s : {&w.x(), &w.y(), &w.z()})
    if (s->trunc() && (!tr || *s->trunc() < *tr)) tr = s->trunc();
  if (tr)
    j["trunc"] = detail::to_i64(*tr);
  else
    j["trunc"] = nullptr;
  return j;
}

inline Wedge wedge_from_json(const json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("z"))
    throw std::invalid_argument("wedge JSON needs x, y and z components");
  std::optional<Int> trunc;
  if (j.contains("trunc") && !j.at("trunc").is_null())
    trunc = Int(j.at("trunc").get<std::int64_t>());
  return Wedge(series_from_json(j.at("x"), trunc), series_from_json(j.at("y"), trunc),
               series_from_json(j.at("z"), trunc));
}

// deterministic DOT: nodes by id, label "Ei (w)" with "?" for unknown
// weights, dashed border for non-essential divisors
inline std::string emit_dot(const ResolutionGraph& g) {
  std::ostringstream os;
  os << "graph resolution {\n";
  os << "  node [shape=circle];\n";
  for (const auto& n : g.nodes) {
    os << "  n" << n.id << " [label=\"" << n.label << " ("
       << (n.weight ? n.weight->str() : "?") << ")\"";
    if (!n.essential) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& e : g.edges) os << "  n" << e[0] << " -- n" << e[1] << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string fan_text(const Fan& fan) {
  std::ostringstream os;
  os << "rays\n";
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    os << "  " << i << ": " << fan.rays()[i].str() << "\n";
  os << "max cones\n";
  for (const auto& mc : fan.max_cones()) {
    os << " ";
    for (int i : mc) os << " " << i;
    os << "\n";
  }
  os << "walls\n";
  for (const auto& w : fan.walls()) os << "  " << w[0] << " " << w[1] << "\n";
  return os.str();
}

inline std::string gsub_text(const GSubdivision& s) {
  std::ostringstream os;
  os << "original\n" << fan_text(s.original());
  os << "refined\n" << fan_text(s.refined());
  os << "ray homes\n";
  const auto& hs = s.ray_homes();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    os << "  " << i << ": dim " << hs[i].dim << ", original rays";
    for (int r : hs[i].orig_rays) os << " " << r;
    os << "\n";
  }
  return os.str();
}

inline std::string graph_text(const ResolutionGraph& g) {
  std::ostringstream os;
  os << "nodes\n";
  for (const auto& n : g.nodes) {
    os << "  " << n.id << ": " << n.label << "  ray " << n.ray.str() << "  weight "
       << (n.weight ? n.weight->str() : "?") << "  copies " << n.copies.str();
    if (!n.essential) os << "  non-essential";
    os << "\n";
  }
  os << "edges\n";
  for (const auto& e : g.edges) os << "  " << e[0] << " -- " << e[1] << "\n";
  return os.str();
}

}  // namespace toric
