#pragma once

// Random connected orientable ribbon graphs, simple cycles and reduced
// closed walks for property tests.

#include "lfforge/curves.h"

#include <algorithm>
#include <numeric>
#include <random>

namespace randgen {

inline bool coin_flip(std::mt19937& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

inline lf::RibbonGraph surface(std::mt19937& rng, int max_vertices = 6, int max_extra = 6) {
  std::uniform_int_distribution<int> vd(1, max_vertices), ed(1, max_extra), coin(0, 1);
  const int V = vd(rng);
  std::vector<std::pair<int, int>> ends;
  for (int v = 1; v < V; ++v) ends.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  const int extra = ed(rng);
  for (int k = 0; k < extra; ++k)
    ends.push_back({std::uniform_int_distribution<int>(0, V - 1)(rng), std::uniform_int_distribution<int>(0, V - 1)(rng)});
  std::shuffle(ends.begin(), ends.end(), rng);
  // Random local orientation signs; an edge is twisted exactly when its ends
  // disagree, so the thickening stays orientable.
  std::vector<int> eps(V);
  for (auto& s : eps) s = coin(rng) ? 1 : -1;
  std::vector<std::vector<lf::HalfEdgeId>> rot(V);
  std::vector<bool> twist;
  for (size_t e = 0; e < ends.size(); ++e) {
    rot[ends[e].first].push_back(2 * static_cast<int>(e));
    rot[ends[e].second].push_back(2 * static_cast<int>(e) + 1);
    twist.push_back(eps[ends[e].first] != eps[ends[e].second]);
  }
  for (auto& r : rot) std::shuffle(r.begin(), r.end(), rng);
  return lf::RibbonGraph(rot, twist);
}

/// Simple cycle: a random spanning tree plus one random edge outside it.
inline std::vector<lf::HalfEdgeId> simple_cycle(const lf::RibbonGraph& g, std::mt19937& rng) {
  const int V = g.vertex_count();
  std::vector<int> parent_dart(V, -1), order;
  std::vector<char> seen(V, 0), tree(g.edge_count(), 0);
  std::vector<int> frontier{std::uniform_int_distribution<int>(0, V - 1)(rng)};
  seen[frontier[0]] = 1;
  int root = frontier[0];
  while (!frontier.empty()) {
    size_t pick = std::uniform_int_distribution<size_t>(0, frontier.size() - 1)(rng);
    int v = frontier[pick];
    frontier.erase(frontier.begin() + pick);
    auto halves = g.rotation(v);
    std::shuffle(halves.begin(), halves.end(), rng);
    for (int h : halves) {
      int w = g.vertex_of(lf::opposite(h));
      if (!seen[w]) {
        seen[w] = 1;
        tree[lf::edge_of(h)] = 1;
        parent_dart[w] = h;
        frontier.push_back(w);
      }
    }
  }
  std::vector<int> cot;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!tree[e]) cot.push_back(e);
  if (cot.empty()) return {};
  int e = cot[std::uniform_int_distribution<size_t>(0, cot.size() - 1)(rng)];
  auto path = [&](int v) {
    std::vector<int> p;
    while (v != root) {
      p.push_back(parent_dart[v]);
      v = g.vertex_of(parent_dart[v]);
    }
    std::reverse(p.begin(), p.end());
    return p;
  };
  auto pt = path(g.tail(e)), ph = path(g.head(e));
  std::vector<int> w = pt;
  w.push_back(2 * e);
  for (auto it = ph.rbegin(); it != ph.rend(); ++it) w.push_back(lf::opposite(*it));
  w = lf::reduce_walk(w, true);
  if (coin_flip(rng)) w = lf::reverse_walk(w);
  return w;
}

/// Random reduced closed walk: a non-backtracking random walk closed up
/// through a spanning tree, then cyclically reduced. May come out empty.
inline std::vector<lf::HalfEdgeId> closed_walk(const lf::RibbonGraph& g, std::mt19937& rng, int steps) {
  int start = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
  std::vector<int> w;
  int at = start;
  for (int s = 0; s < steps; ++s) {
    const auto& r = g.rotation(at);
    std::vector<int> options;
    for (int h : r)
      if (w.empty() || h != lf::opposite(w.back())) options.push_back(h);
    if (options.empty()) break;
    int h = options[std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng)];
    w.push_back(h);
    at = g.vertex_of(lf::opposite(h));
  }
  // Return to start by breadth-first search.
  std::vector<int> via(g.vertex_count(), -2);
  std::vector<int> queue{at};
  via[at] = -1;
  for (size_t q = 0; q < queue.size(); ++q)
    for (int h : g.rotation(queue[q])) {
      int x = g.vertex_of(lf::opposite(h));
      if (via[x] == -2) {
        via[x] = h;
        queue.push_back(x);
      }
    }
  std::vector<int> back;
  for (int v = start; v != at; v = g.vertex_of(via[v])) back.push_back(via[v]);
  std::reverse(back.begin(), back.end());
  w.insert(w.end(), back.begin(), back.end());
  return lf::reduce_walk(w, true);
}

} // namespace randgen
