#include "lfforge/ribbon_graph.h"

#include <algorithm>
#include <map>

namespace lf {

RibbonGraph::RibbonGraph(std::vector<std::vector<HalfEdgeId>> rotation, std::vector<bool> twisted,
                         std::vector<std::string> vertex_labels)
    : rotation_(std::move(rotation)), twisted_(std::move(twisted)), labels_(std::move(vertex_labels)) {
  const int H = half_edge_count();
  vertex_of_.assign(H, -1);
  slot_of_.assign(H, -1);
  for (VertexId v = 0; v < vertex_count(); ++v) {
    const auto& r = rotation_[v];
    for (int k = 0; k < static_cast<int>(r.size()); ++k) {
      HalfEdgeId h = r[k];
      if (h < 0 || h >= H)
        throw TopologyError("rotation at vertex " + std::to_string(v) + " names unknown half-edge " +
                            std::to_string(h));
      if (vertex_of_[h] != -1)
        throw TopologyError("half-edge " + std::to_string(h) + " appears twice in the rotation system");
      vertex_of_[h] = v;
      slot_of_[h] = k;
    }
  }
  for (HalfEdgeId h = 0; h < H; ++h)
    if (vertex_of_[h] == -1)
      throw TopologyError("half-edge " + std::to_string(h) + " missing from every rotation");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count())
    throw TopologyError("vertex label count does not match vertex count");
}

HalfEdgeId RibbonGraph::rotate(HalfEdgeId h, int step) const {
  const auto& r = rotation_[vertex_of_.at(h)];
  int n = static_cast<int>(r.size());
  return r[((slot_of_[h] + step) % n + n) % n];
}

const std::string& RibbonGraph::label(VertexId v) const {
  static const std::string empty;
  return labels_.empty() ? empty : labels_.at(v);
}

std::uint64_t RibbonGraph::fingerprint() const {
  std::uint64_t x = 1469598103934665603ull;
  auto mix = [&](std::uint64_t y) {
    x ^= y + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
  };
  mix(rotation_.size());
  for (const auto& r : rotation_) {
    mix(r.size());
    for (auto h : r) mix(static_cast<std::uint64_t>(h));
  }
  for (bool t : twisted_) mix(t ? 3 : 5);
  return x;
}

RibbonGraph RibbonGraph::mirrored() const {
  auto rot = rotation_;
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return RibbonGraph(std::move(rot), twisted_, labels_);
}

VertexId RibbonGraphBuilder::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  rotation_.emplace_back();
  return static_cast<VertexId>(labels_.size()) - 1;
}

EdgeId RibbonGraphBuilder::add_edge(VertexId from, VertexId to, bool twisted) {
  if (from < 0 || to < 0 || from >= static_cast<int>(labels_.size()) || to >= static_cast<int>(labels_.size()))
    throw TopologyError("edge endpoint out of range");
  ends_.emplace_back(from, to);
  twisted_.push_back(twisted);
  return static_cast<EdgeId>(ends_.size()) - 1;
}

void RibbonGraphBuilder::set_rotation(VertexId v, std::vector<HalfEdgeId> cyclic_order) {
  for (HalfEdgeId h : cyclic_order) {
    if (h < 0 || edge_of(h) >= static_cast<int>(ends_.size()))
      throw TopologyError("rotation names unknown half-edge");
    VertexId at = (h & 1) ? ends_[edge_of(h)].second : ends_[edge_of(h)].first;
    if (at != v)
      throw TopologyError("half-edge " + std::to_string(h) + " does not end at vertex " + std::to_string(v));
  }
  rotation_.at(v) = std::move(cyclic_order);
}

RibbonGraph RibbonGraphBuilder::build() const {
  bool any_label = std::any_of(labels_.begin(), labels_.end(), [](const auto& s) { return !s.empty(); });
  return RibbonGraph(rotation_, twisted_, any_label ? labels_ : std::vector<std::string>{});
}

std::vector<std::vector<HalfEdgeId>> boundary_walks(const RibbonGraph& g) {
  // Trace states (dart, direction). Every boundary curve shows up as two
  // orbits, one per traversal sense; the reverse of state (h, d) is
  // (opposite(h), -d) corrected by the twist of h.
  const int H = g.half_edge_count();
  auto idx = [](HalfEdgeId h, int d) { return 2 * h + (d > 0 ? 0 : 1); };
  std::vector<int> orbit_of(2 * H, -1);
  std::vector<std::vector<HalfEdgeId>> orbits;
  for (HalfEdgeId h0 = 0; h0 < H; ++h0)
    for (int d0 : {1, -1}) {
      if (orbit_of[idx(h0, d0)] != -1) continue;
      int k = static_cast<int>(orbits.size());
      orbits.emplace_back();
      HalfEdgeId h = h0;
      int d = d0;
      while (orbit_of[idx(h, d)] == -1) {
        orbit_of[idx(h, d)] = k;
        orbits[k].push_back(h);
        if (g.twisted(edge_of(h))) d = -d;
        h = g.rotate(opposite(h), d);
      }
    }
  std::vector<char> taken(orbits.size(), 0);
  std::vector<std::vector<HalfEdgeId>> out;
  for (HalfEdgeId h0 = 0; h0 < H; ++h0)
    for (int d0 : {1, -1}) {
      int k = orbit_of[idx(h0, d0)];
      if (taken[k]) continue;
      int rd = g.twisted(edge_of(h0)) ? d0 : -d0;
      taken[k] = 1;
      taken[orbit_of[idx(opposite(h0), rd)]] = 1;
      out.push_back(orbits[k]);
    }
  return out;
}

std::optional<std::vector<int>> orientation_signs(const RibbonGraph& g) {
  std::vector<int> eps(g.vertex_count(), 0);
  for (VertexId root = 0; root < g.vertex_count(); ++root) {
    if (eps[root]) continue;
    eps[root] = 1;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdgeId h : g.rotation(v)) {
        VertexId w = g.vertex_of(opposite(h));
        int want = g.twisted(edge_of(h)) ? -eps[v] : eps[v];
        if (!eps[w]) {
          eps[w] = want;
          stack.push_back(w);
        } else if (eps[w] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return eps;
}

bool is_connected(const RibbonGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (HalfEdgeId h : g.rotation(v)) {
      VertexId w = g.vertex_of(opposite(h));
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.vertex_count();
}

SurfaceInvariants surface_invariants(const RibbonGraph& g) {
  SurfaceInvariants s;
  s.euler = g.vertex_count() - g.edge_count();
  s.boundary_components = static_cast<int>(boundary_walks(g).size());
  s.orientable = orientation_signs(g).has_value();
  if (s.orientable) {
    int twice = 2 - s.euler - s.boundary_components;
    if (twice % 2 != 0 || twice < 0) throw TopologyError("inconsistent ribbon graph invariants");
    s.genus = twice / 2;
  }
  return s;
}

RibbonGraph untwisted(const RibbonGraph& g) {
  auto eps = orientation_signs(g);
  if (!eps) throw TopologyError("cannot untwist a non-orientable ribbon graph");
  std::vector<std::vector<HalfEdgeId>> rot;
  rot.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto r = g.rotation(v);
    if ((*eps)[v] < 0) std::reverse(r.begin(), r.end());
    rot.push_back(std::move(r));
  }
  return RibbonGraph(std::move(rot), std::vector<bool>(g.edge_count(), false), g.labels());
}

Contraction contract_edges(const RibbonGraph& input, const std::vector<EdgeId>& edges) {
  RibbonGraph g = untwisted(input);
  // Union-find over vertices, merging rotations edge by edge.
  std::vector<VertexId> parent(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) parent[v] = v;
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<std::vector<HalfEdgeId>> rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) rot[v] = g.rotation(v);
  std::vector<char> gone(g.edge_count(), 0);
  std::vector<EdgeId> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (EdgeId e : sorted) {
    if (e < 0 || e >= g.edge_count()) throw TopologyError("contracted edge out of range");
    VertexId u = find(g.tail(e)), w = find(g.head(e));
    if (u == w) throw TopologyError("contracting edge " + std::to_string(e) + " would collapse a cycle");
    auto& ru = rot[u];
    auto& rw = rot[w];
    auto iu = std::find(ru.begin(), ru.end(), tail_half(e));
    auto iw = std::find(rw.begin(), rw.end(), head_half(e));
    std::vector<HalfEdgeId> merged;
    merged.insert(merged.end(), iu + 1, ru.end());
    merged.insert(merged.end(), ru.begin(), iu);
    merged.insert(merged.end(), iw + 1, rw.end());
    merged.insert(merged.end(), rw.begin(), iw);
    parent[w] = u;
    ru = std::move(merged);
    rw.clear();
    gone[e] = 1;
  }
  Contraction out;
  out.edge_map.assign(g.edge_count(), -1);
  int next = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!gone[e]) out.edge_map[e] = next++;
  std::map<VertexId, VertexId> root_index;
  out.vertex_map.assign(g.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId r = find(v);
    auto [it, fresh] = root_index.try_emplace(r, static_cast<VertexId>(root_index.size()));
    out.vertex_map[v] = it->second;
  }
  std::vector<std::vector<HalfEdgeId>> new_rot(root_index.size());
  for (auto [r, idx] : root_index)
    for (HalfEdgeId h : rot[r]) new_rot[idx].push_back(2 * out.edge_map[edge_of(h)] + (h & 1));
  out.graph = RibbonGraph(std::move(new_rot), std::vector<bool>(next, false));
  return out;
}

} // namespace lf
