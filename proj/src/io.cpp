#include "lfforge/io.h"

#include <sstream>

namespace lf {

json to_json(const RibbonGraph& g, const std::vector<Curve>& curves) {
  json j;
  j["schema"] = kRibbonGraphSchema;
  json verts = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) verts.push_back(v);
  j["vertices"] = verts;
  json edges = json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    edges.push_back({{"id", e + 1}, {"half_edges", {tail_half(e), head_half(e)}}, {"twist", g.twisted(e)}});
  j["edges"] = edges;
  json rot = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) rot[std::to_string(v)] = g.rotation(v);
  j["rotation"] = rot;
  if (!g.labels().empty()) j["labels"] = g.labels();
  json cs = json::array();
  for (const auto& c : curves) cs.push_back({{"name", c.name}, {"walk", signed_from_darts(c.darts)}});
  j["curves"] = cs;
  return j;
}

RibbonGraph ribbon_graph_from_json(const json& j) {
  const int V = static_cast<int>(j.at("vertices").size());
  const auto& edges = j.at("edges");
  std::vector<bool> twist(edges.size(), false);
  for (const auto& e : edges) {
    int id = e.at("id").get<int>();
    if (id < 1 || id > static_cast<int>(edges.size())) throw std::invalid_argument("edge ids must be 1..E");
    auto halves = e.at("half_edges").get<std::vector<int>>();
    if (halves.size() != 2 || halves[0] != tail_half(id - 1) || halves[1] != head_half(id - 1))
      throw std::invalid_argument("edge " + std::to_string(id) + " must own half-edges 2(id-1), 2(id-1)+1");
    twist[id - 1] = e.value("twist", false);
  }
  std::vector<std::vector<HalfEdgeId>> rot(V);
  for (auto it = j.at("rotation").begin(); it != j.at("rotation").end(); ++it) {
    int v = std::stoi(it.key());
    if (v < 0 || v >= V) throw std::invalid_argument("rotation names unknown vertex " + it.key());
    rot[v] = it.value().get<std::vector<HalfEdgeId>>();
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return RibbonGraph(std::move(rot), std::move(twist), std::move(labels));
}

std::vector<Curve> curves_from_json(const json& j) {
  std::vector<Curve> out;
  if (!j.contains("curves")) return out;
  for (const auto& c : j.at("curves"))
    out.push_back({c.at("name").get<std::string>(), darts_from_signed(c.at("walk").get<std::vector<int>>())});
  return out;
}

json to_json(const LefschetzFibration& lf) {
  json j;
  j["schema"] = kFibrationSchema;
  j["construction"] = lf.construction;
  j["genus"] = lf.genus;
  j["fiber"] = to_json(lf.fiber);
  json cs = json::array();
  for (size_t i = 0; i < lf.cycles.size(); ++i)
    cs.push_back({{"name", lf.cycles[i].name},
                  {"family", family_name(lf.families[i])},
                  {"walk", signed_from_darts(lf.cycles[i].darts)}});
  j["cycles"] = cs;
  json order = json::array();
  for (int k : lf.word) order.push_back(lf.cycles[k].name);
  j["order"] = order;
  return j;
}

LefschetzFibration fibration_from_json(const json& j) {
  if (j.value("schema", std::string(kFibrationSchema)) != kFibrationSchema)
    throw std::invalid_argument("not a fibration document: " + j.value("schema", std::string()));
  LefschetzFibration lf;
  lf.construction = j.value("construction", std::string("custom"));
  lf.genus = j.value("genus", 0);
  lf.fiber = ribbon_graph_from_json(j.at("fiber"));
  for (const auto& c : j.at("cycles")) {
    lf.cycles.push_back({c.at("name").get<std::string>(), darts_from_signed(c.at("walk").get<std::vector<int>>())});
    lf.families.push_back(family_from_name(c.value("family", std::string("other"))));
  }
  for (const auto& name : j.at("order")) {
    int k = lf.cycle_index(name.get<std::string>());
    if (k < 0) throw std::invalid_argument("order names unknown cycle " + name.get<std::string>());
    lf.word.push_back(k);
  }
  validate(lf);
  return lf;
}

json to_json(const Divide& d) {
  json j;
  j["schema"] = kDivideSchema;
  j["ambient_genus"] = d.ambient_genus;
  j["front_dart"] = d.front_dart;
  json verts = json::array();
  for (VertexId v = 0; v < d.graph.vertex_count(); ++v) {
    const auto& r = d.graph.rotation(v);
    json strands = json::array();
    if (r.size() == 4) strands = {{r[0], r[2]}, {r[1], r[3]}};
    verts.push_back({{"id", v}, {"rotation", r}, {"strands", strands}});
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (EdgeId e = 0; e < d.graph.edge_count(); ++e)
    edges.push_back({{"id", e + 1}, {"half_edges", {tail_half(e), head_half(e)}}});
  j["edges"] = edges;
  json comps = json::array();
  for (const auto& c : d.components) {
    json ids = json::array();
    for (EdgeId e : c) ids.push_back(e + 1);
    comps.push_back(ids);
  }
  j["components"] = comps;
  return j;
}

Divide divide_from_json(const json& j) {
  Divide d;
  d.ambient_genus = j.at("ambient_genus").get<int>();
  d.front_dart = j.value("front_dart", 0);
  const auto& verts = j.at("vertices");
  std::vector<std::vector<HalfEdgeId>> rot(verts.size());
  for (const auto& v : verts) {
    int id = v.at("id").get<int>();
    if (id < 0 || id >= static_cast<int>(verts.size())) throw std::invalid_argument("divide vertex id out of range");
    rot[id] = v.at("rotation").get<std::vector<HalfEdgeId>>();
  }
  d.graph = RibbonGraph(std::move(rot), std::vector<bool>(j.at("edges").size(), false));
  if (j.contains("components"))
    for (const auto& c : j.at("components")) {
      std::vector<EdgeId> comp;
      for (int e : c.get<std::vector<int>>()) comp.push_back(e - 1);
      d.components.push_back(comp);
    }
  if (d.components.empty()) d.components = strand_components(d.graph);
  return d;
}

json to_json(const PlumbingPattern& p) {
  json j;
  j["schema"] = kPatternSchema;
  j["first"] = p.first_names;
  j["second"] = p.second_names;
  json sq = json::array();
  for (const auto& s : p.squares) sq.push_back({{"first", s.first}, {"second", s.second}, {"sign", s.sign}});
  j["squares"] = sq;
  j["first_order"] = p.first_order;
  j["second_order"] = p.second_order;
  return j;
}

json to_json(const FinAbGroup& g) {
  return {{"rank", g.free_rank}, {"torsion", g.torsion}, {"text", g.to_string()}};
}

std::string to_dot(const RibbonGraph& g, const std::string& name) {
  std::ostringstream o;
  o << "graph \"" << name << "\" {\n  node [shape=circle, fontsize=10];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    o << "  v" << v << " [label=\"" << (g.label(v).empty() ? std::to_string(v) : g.label(v)) << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    o << "  v" << g.tail(e) << " -- v" << g.head(e) << " [label=\"" << e + 1 << (g.twisted(e) ? " tw" : "") << "\"";
    if (g.twisted(e)) o << ", style=dashed";
    o << "];\n";
  }
  o << "}\n";
  return o.str();
}

} // namespace lf
