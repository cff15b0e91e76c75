#include "lfforge/homology.h"

#include <algorithm>
#include <deque>

namespace lf {

HomologyBasis::HomologyBasis(const RibbonGraph& g) : oriented_(untwisted(g)) {
  if (!is_connected(g)) throw TopologyError("homology basis needs a connected surface");
  const RibbonGraph& G = oriented_;
  std::vector<char> seen(G.vertex_count(), 0), tree(G.edge_count(), 0);
  parent_dart_.assign(G.vertex_count(), -1);
  if (G.vertex_count() > 0) {
    std::deque<VertexId> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      auto halves = G.rotation(v);
      std::sort(halves.begin(), halves.end());
      for (HalfEdgeId h : halves) {
        VertexId w = G.vertex_of(opposite(h));
        if (!seen[w]) {
          seen[w] = 1;
          tree[edge_of(h)] = 1;
          parent_dart_[w] = h;
          queue.push_back(w);
        }
      }
    }
  }
  coordinate_.assign(G.edge_count(), -1);
  for (EdgeId e = 0; e < G.edge_count(); ++e)
    if (!tree[e]) {
      coordinate_[e] = static_cast<int>(cotree_.size());
      cotree_.push_back(e);
    }

  // Contract the tree: walking around its thickening lists cotree half-edges
  // in the cyclic order they meet a single vertex.
  const int n = rank();
  form_.assign(n, std::vector<std::int64_t>(n, 0));
  if (n == 0) return;
  std::vector<int> position(G.half_edge_count(), -1);
  int count = 0;
  const HalfEdgeId start = G.rotation(0).front();
  HalfEdgeId h = start;
  do {
    if (tree[edge_of(h)]) {
      h = G.rotate(opposite(h), 1);
    } else {
      position[h] = count++;
      h = G.rotate(h, 1);
    }
  } while (h != start);
  if (count != 2 * n) throw TopologyError("tree contraction did not visit every cotree half-edge");

  auto between = [&](int a, int x, int b) { // x strictly inside the ccw interval (a, b)
    int m = count;
    int dx = ((x - a) % m + m) % m, db = ((b - a) % m + m) % m;
    return dx > 0 && dx < db;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int se = position[tail_half(cotree_[i])], te = position[head_half(cotree_[i])];
      int sf = position[tail_half(cotree_[j])], tf = position[head_half(cotree_[j])];
      if (between(se, sf, te) && between(te, tf, se))
        form_[i][j] = 1;
      else if (between(se, tf, te) && between(te, sf, se))
        form_[i][j] = -1;
    }
}

ClassVector HomologyBasis::class_of(const std::vector<HalfEdgeId>& walk) const {
  ClassVector x(rank(), 0);
  for (size_t k = 0; k < walk.size(); ++k) {
    HalfEdgeId d = walk[k];
    if (d < 0 || d >= oriented_.half_edge_count()) throw TopologyError("walk names unknown half-edge");
    HalfEdgeId next = walk[(k + 1) % walk.size()];
    if (oriented_.vertex_of(opposite(d)) != oriented_.vertex_of(next))
      throw TopologyError("walk is not closed at step " + std::to_string(k));
    int i = coordinate_[edge_of(d)];
    if (i >= 0) x[i] += (d & 1) ? -1 : 1;
  }
  return x;
}

std::int64_t HomologyBasis::pairing(const ClassVector& x, const ClassVector& y) const {
  if (static_cast<int>(x.size()) != rank() || static_cast<int>(y.size()) != rank())
    throw std::invalid_argument("class vector has wrong length");
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < rank(); ++j) s += x[i] * form_[i][j] * y[j];
  }
  return s;
}

ClassVector HomologyBasis::unit(int i) const {
  ClassVector x(rank(), 0);
  x.at(i) = 1;
  return x;
}

std::vector<HalfEdgeId> HomologyBasis::fundamental_cycle(int i) const {
  EdgeId e = cotree_.at(i);
  auto root_path = [&](VertexId v) { // darts from the root to v
    std::vector<HalfEdgeId> p;
    while (parent_dart_[v] >= 0) {
      p.push_back(parent_dart_[v]);
      v = oriented_.vertex_of(parent_dart_[v]);
    }
    std::reverse(p.begin(), p.end());
    return p;
  };
  auto to_tail = root_path(oriented_.tail(e));
  auto to_head = root_path(oriented_.head(e));
  std::vector<HalfEdgeId> walk = to_tail;
  walk.push_back(tail_half(e));
  for (auto it = to_head.rbegin(); it != to_head.rend(); ++it) walk.push_back(opposite(*it));
  // Drop the common stem so the walk is reduced.
  size_t lo = 0, hi = walk.size();
  while (hi - lo >= 2 && walk[hi - 1] == opposite(walk[lo])) {
    ++lo;
    --hi;
  }
  return std::vector<HalfEdgeId>(walk.begin() + lo, walk.begin() + hi);
}

ClassVector dehn_twist_on_class(const HomologyBasis& H, const ClassVector& c, const ClassVector& x) {
  std::int64_t k = H.pairing(c, x);
  ClassVector y = x;
  for (size_t i = 0; i < y.size(); ++i) y[i] += k * c[i];
  return y;
}

IntMatrix twist_matrix(const HomologyBasis& H, const ClassVector& c) {
  const int n = H.rank();
  IntMatrix M(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    ClassVector col = dehn_twist_on_class(H, c, H.unit(j));
    for (int i = 0; i < n; ++i) M[i][j] = col[i];
  }
  return M;
}

} // namespace lf
