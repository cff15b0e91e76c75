#include "lfforge/divide.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace lf {

std::vector<std::vector<HalfEdgeId>> divide_faces(const Divide& d) {
  const RibbonGraph& g = d.graph;
  std::vector<char> seen(g.half_edge_count(), 0);
  std::vector<std::vector<HalfEdgeId>> faces;
  for (HalfEdgeId h0 = 0; h0 < g.half_edge_count(); ++h0) {
    if (seen[h0]) continue;
    std::vector<HalfEdgeId> f;
    for (HalfEdgeId h = h0; !seen[h]; h = g.rotate(opposite(h), 1)) {
      seen[h] = 1;
      f.push_back(h);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

std::vector<std::vector<EdgeId>> strand_components(const RibbonGraph& g) {
  std::vector<char> used(g.edge_count(), 0);
  std::vector<std::vector<EdgeId>> comps;
  for (EdgeId e0 = 0; e0 < g.edge_count(); ++e0) {
    if (used[e0]) continue;
    std::vector<EdgeId> comp;
    HalfEdgeId dart = tail_half(e0);
    while (!used[edge_of(dart)]) {
      used[edge_of(dart)] = 1;
      comp.push_back(edge_of(dart));
      HalfEdgeId arrive = opposite(dart);
      if (g.degree(g.vertex_of(arrive)) != 4) throw TopologyError("divide double point is not 4-valent");
      dart = g.rotate(arrive, 2);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

struct DualColoring {
  std::vector<int> color;
  std::vector<int> odd_cycle;
};

DualColoring two_color_faces(const RibbonGraph& g, const std::vector<std::vector<HalfEdgeId>>& faces, int root) {
  std::vector<int> face_of(g.half_edge_count(), -1);
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    for (HalfEdgeId h : faces[i]) face_of[h] = i;
  DualColoring out;
  out.color.assign(faces.size(), -1);
  std::vector<int> parent(faces.size(), -1);
  if (faces.empty()) return out;
  std::deque<int> queue{root};
  out.color[root] = 0;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (HalfEdgeId h : faces[i]) {
      int j = face_of[opposite(h)];
      if (out.color[j] < 0) {
        out.color[j] = 1 - out.color[i];
        parent[j] = i;
        queue.push_back(j);
      } else if (out.color[j] == out.color[i]) {
        // Tree paths from i and j to their common ancestor close an odd cycle.
        std::vector<int> pi, pj;
        for (int x = i; x >= 0; x = parent[x]) pi.push_back(x);
        for (int x = j; x >= 0; x = parent[x]) pj.push_back(x);
        while (pi.size() > 1 && pj.size() > 1 && pi[pi.size() - 2] == pj[pj.size() - 2]) {
          pi.pop_back();
          pj.pop_back();
        }
        out.odd_cycle = pi;
        for (int k = static_cast<int>(pj.size()) - 2; k >= 0; --k) out.odd_cycle.push_back(pj[k]);
        return out;
      }
    }
  }
  return out;
}

} // namespace

AdmissibilityReport check_admissible(const Divide& d) {
  AdmissibilityReport r;
  const RibbonGraph& g = d.graph;
  r.vertices = g.vertex_count();
  r.edges = g.edge_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 4) {
      r.structurally_valid = false;
      r.problems.push_back("double point " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  if (r.edges != 2 * r.vertices) {
    r.structurally_valid = false;
    r.problems.push_back("edge count is not twice the double point count");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.twisted(e)) {
      r.structurally_valid = false;
      r.problems.push_back("divide edge " + std::to_string(e) + " carries a twist bit");
    }
  if (d.ambient_genus < 0) {
    r.structurally_valid = false;
    r.problems.push_back("negative ambient genus");
  }
  auto faces = divide_faces(d);
  r.faces = static_cast<int>(faces.size());
  r.connected = is_connected(g);
  if (!r.connected) r.problems.push_back("divide graph is disconnected");
  r.faces_are_disks = r.connected && r.vertices - r.edges + r.faces == 2 - 2 * d.ambient_genus;
  if (!r.faces_are_disks)
    r.problems.push_back("V - E + F = " + std::to_string(r.vertices - r.edges + r.faces) + ", expected " +
                         std::to_string(2 - 2 * d.ambient_genus));
  if (!faces.empty()) {
    auto dual = two_color_faces(g, faces, 0);
    r.bipartite_dual = dual.odd_cycle.empty();
    if (!r.bipartite_dual) r.problems.push_back("face adjacency graph has an odd cycle");
  }
  return r;
}

int Coloring::white_count() const { return static_cast<int>(std::count(black.begin(), black.end(), 0)); }
int Coloring::black_count() const { return static_cast<int>(std::count(black.begin(), black.end(), 1)); }

std::vector<int> Coloring::faces_of_color(int color) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(black.size()); ++i)
    if (black[i] == color) out.push_back(i);
  return out;
}

Coloring checkerboard_coloring(const Divide& d) {
  Coloring c;
  c.faces = divide_faces(d);
  if (c.faces.empty()) return c;
  int root = 0;
  for (int i = 0; i < static_cast<int>(c.faces.size()); ++i)
    if (std::find(c.faces[i].begin(), c.faces[i].end(), d.front_dart) != c.faces[i].end()) root = i;
  auto dual = two_color_faces(d.graph, c.faces, root);
  if (!dual.odd_cycle.empty()) {
    std::ostringstream msg;
    msg << "no checkerboard colouring: odd face cycle";
    for (int f : dual.odd_cycle) msg << " " << f;
    throw ColoringError(msg.str(), dual.odd_cycle);
  }
  c.black = dual.color;
  return c;
}

Divide standard_divide(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  const int n = 2 * genus + 2;
  // Circle i consists of edges 2i and 2i+1, both running from double point
  // i-1 to double point i.
  std::vector<std::vector<HalfEdgeId>> rot(n);
  for (int i = 0; i < n; ++i) {
    int next = (i + 1) % n;
    rot[i] = {head_half(2 * i), tail_half(2 * next), head_half(2 * i + 1), tail_half(2 * next + 1)};
  }
  Divide d;
  d.ambient_genus = genus;
  d.graph = RibbonGraph(std::move(rot), std::vector<bool>(2 * n, false));
  for (int i = 0; i < n; ++i) d.components.push_back({2 * i, 2 * i + 1});
  return d;
}

MorseData morse_data(const Divide& d, const Coloring& c) {
  return {c.white_count(), d.graph.vertex_count(), c.black_count()};
}

Divide parse_divide_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int genus = -1;
  std::map<int, std::vector<HalfEdgeId>> rot;
  std::vector<std::vector<EdgeId>> comps;
  int max_edge = 0, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("divide text line " + std::to_string(lineno) + ": " + why);
    };
    if (key == "genus") {
      if (!(ls >> genus) || genus < 0) fail("bad genus");
    } else if (key == "v") {
      int id;
      if (!(ls >> id) || id < 0) fail("bad vertex id");
      std::string tok;
      std::vector<HalfEdgeId> ends;
      while (ls >> tok) {
        if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-')) fail("bad edge end '" + tok + "'");
        int e = std::stoi(tok.substr(0, tok.size() - 1));
        if (e < 1) fail("edge ids start at 1");
        max_edge = std::max(max_edge, e);
        ends.push_back(tok.back() == '+' ? tail_half(e - 1) : head_half(e - 1));
      }
      if (ends.size() != 4) fail("double point needs four edge ends");
      if (!rot.emplace(id, ends).second) fail("duplicate vertex");
    } else if (key == "c") {
      std::vector<EdgeId> comp;
      int e;
      while (ls >> e) comp.push_back(e - 1);
      comps.push_back(comp);
    } else {
      fail("unknown record '" + key + "'");
    }
  }
  if (genus < 0) throw std::invalid_argument("divide text lacks a genus line");
  std::vector<std::vector<HalfEdgeId>> rotation;
  int expect = 0;
  for (auto& [id, ends] : rot) {
    if (id != expect++) throw std::invalid_argument("divide vertex ids must be 0..V-1");
    rotation.push_back(ends);
  }
  Divide d;
  d.ambient_genus = genus;
  d.graph = RibbonGraph(std::move(rotation), std::vector<bool>(max_edge, false));
  d.components = comps.empty() ? strand_components(d.graph) : comps;
  return d;
}

std::string divide_to_text(const Divide& d) {
  std::ostringstream out;
  out << "genus " << d.ambient_genus << "\n";
  for (VertexId v = 0; v < d.graph.vertex_count(); ++v) {
    out << "v " << v;
    for (HalfEdgeId h : d.graph.rotation(v)) out << " " << edge_of(h) + 1 << ((h & 1) ? '-' : '+');
    out << "\n";
  }
  for (const auto& comp : d.components) {
    out << "c";
    for (EdgeId e : comp) out << " " << e + 1;
    out << "\n";
  }
  return out.str();
}

} // namespace lf
