#include "lfforge/curves.h"

#include <algorithm>
#include <set>

namespace lf {

void check_closed_walk(const RibbonGraph& g, const std::vector<HalfEdgeId>& darts) {
  if (darts.empty()) throw TopologyError("closed walk is empty");
  for (size_t k = 0; k < darts.size(); ++k) {
    HalfEdgeId d = darts[k];
    if (d < 0 || d >= g.half_edge_count()) throw TopologyError("walk names unknown half-edge " + std::to_string(d));
    HalfEdgeId next = darts[(k + 1) % darts.size()];
    if (next < 0 || next >= g.half_edge_count()) throw TopologyError("walk names unknown half-edge");
    if (g.vertex_of(opposite(d)) != g.vertex_of(next))
      throw TopologyError("walk breaks between steps " + std::to_string(k) + " and " + std::to_string(k + 1));
  }
}

void check_path(const RibbonGraph& g, const CombPath& p) {
  auto valid = [&](HalfEdgeId h) { return h >= 0 && h < g.half_edge_count(); };
  if (!valid(p.start_corner) || !valid(p.end_corner)) throw TopologyError("path corner out of range");
  VertexId at = g.vertex_of(p.start_corner);
  for (HalfEdgeId d : p.darts) {
    if (!valid(d)) throw TopologyError("path names unknown half-edge");
    if (g.vertex_of(d) != at) throw TopologyError("path breaks at half-edge " + std::to_string(d));
    at = g.vertex_of(opposite(d));
  }
  if (g.vertex_of(p.end_corner) != at) throw TopologyError("path does not end at its end corner");
}

bool is_edge_simple(const std::vector<HalfEdgeId>& darts) {
  std::set<EdgeId> used;
  for (HalfEdgeId d : darts)
    if (!used.insert(edge_of(d)).second) return false;
  return true;
}

std::vector<HalfEdgeId> reduce_walk(std::vector<HalfEdgeId> darts, bool cyclic) {
  std::vector<HalfEdgeId> out;
  out.reserve(darts.size());
  for (HalfEdgeId d : darts) {
    if (!out.empty() && out.back() == opposite(d))
      out.pop_back();
    else
      out.push_back(d);
  }
  if (cyclic) {
    size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[hi - 1] == opposite(out[lo])) {
      ++lo;
      --hi;
    }
    out = std::vector<HalfEdgeId>(out.begin() + lo, out.begin() + hi);
  }
  return out;
}

std::vector<HalfEdgeId> reverse_walk(const std::vector<HalfEdgeId>& darts) {
  std::vector<HalfEdgeId> r(darts.rbegin(), darts.rend());
  for (auto& d : r) d = opposite(d);
  return r;
}

bool same_cycle(const std::vector<HalfEdgeId>& x, const std::vector<HalfEdgeId>& y, bool allow_reverse) {
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  auto rotated_equal = [](const std::vector<HalfEdgeId>& a, const std::vector<HalfEdgeId>& b) {
    const size_t n = a.size();
    for (size_t s = 0; s < n; ++s) {
      if (a[s] != b[0]) continue;
      bool ok = true;
      for (size_t k = 0; k < n && ok; ++k) ok = a[(s + k) % n] == b[k];
      if (ok) return true;
    }
    return false;
  };
  return rotated_equal(x, y) || (allow_reverse && rotated_equal(x, reverse_walk(y)));
}

namespace {

// Positions around a vertex in oriented order: half-edge in slot k sits at
// 2k, the corner following it at 2k+1.
struct Strand {
  VertexId vertex;
  int in_pos, out_pos;
  HalfEdgeId in_half, out_half; // -1 for corners
};

int half_pos(const RibbonGraph& G, HalfEdgeId h) { return 2 * G.slot_of(h); }
int corner_pos(const RibbonGraph& G, HalfEdgeId h) { return 2 * G.slot_of(h) + 1; }

bool strictly_between(int a, int x, int b, int m) {
  int dx = ((x - a) % m + m) % m, db = ((b - a) % m + m) % m;
  return dx > 0 && dx < db;
}

// +1: left of the strand, -1: right.
int side_of(const RibbonGraph& G, const Strand& s, int pos) {
  int m = 2 * G.degree(s.vertex);
  if (strictly_between(s.out_pos, pos, s.in_pos, m)) return 1;
  if (strictly_between(s.in_pos, pos, s.out_pos, m)) return -1;
  throw TopologyError("position coincides with a curve strand");
}

std::vector<Strand> closed_strands(const RibbonGraph& G, const std::vector<HalfEdgeId>& darts) {
  std::vector<Strand> s;
  const size_t n = darts.size();
  s.reserve(n);
  for (size_t j = 0; j < n; ++j) {
    HalfEdgeId in = opposite(darts[(j + n - 1) % n]), out = darts[j];
    s.push_back({G.vertex_of(out), half_pos(G, in), half_pos(G, out), in, out});
  }
  return s;
}

std::vector<Strand> path_strands(const RibbonGraph& G, const CombPath& p) {
  std::vector<Strand> s;
  const size_t n = p.darts.size();
  for (size_t j = 0; j <= n; ++j) {
    Strand t{};
    if (j == 0) {
      t.in_half = -1;
      t.in_pos = corner_pos(G, p.start_corner);
      t.vertex = G.vertex_of(p.start_corner);
    } else {
      t.in_half = opposite(p.darts[j - 1]);
      t.in_pos = half_pos(G, t.in_half);
      t.vertex = G.vertex_of(t.in_half);
    }
    if (j == n) {
      t.out_half = -1;
      t.out_pos = corner_pos(G, p.end_corner);
    } else {
      t.out_half = p.darts[j];
      t.out_pos = half_pos(G, t.out_half);
    }
    s.push_back(t);
  }
  return s;
}

std::vector<Crossing> find_crossings(const RibbonGraph& G, const std::vector<Strand>& curve,
                                     const std::vector<Strand>& walk, bool walk_cyclic) {
  std::vector<Crossing> out;
  const int nc = static_cast<int>(curve.size()), nw = static_cast<int>(walk.size());
  for (int j = 0; j < nw; ++j) {
    const Strand& w = walk[j];
    for (int i = 0; i < nc; ++i) {
      const Strand& c = curve[i];
      if (c.vertex != w.vertex) continue;
      if (w.in_half >= 0 && (w.in_half == c.in_half || w.in_half == c.out_half)) continue;
      int entry = side_of(G, c, w.in_pos);
      Crossing x;
      x.walk_strand = j;
      x.curve_strand = i;
      int exit;
      if (w.out_half < 0 || (w.out_half != c.in_half && w.out_half != c.out_half)) {
        exit = side_of(G, c, w.out_pos);
      } else {
        x.parallel = w.out_half == c.out_half;
        int step = x.parallel ? 1 : -1;
        int jj = j, ii = i;
        while (true) {
          ++x.overlap;
          if (x.overlap > nw) throw TopologyError("walk runs along the curve forever");
          jj = jj + 1;
          if (jj == nw) {
            if (!walk_cyclic) throw TopologyError("path ends on a curve edge");
            jj = 0;
          }
          ii = ((ii + step) % nc + nc) % nc;
          const Strand& wn = walk[jj];
          const Strand& cn = curve[ii];
          HalfEdgeId follow = x.parallel ? cn.out_half : cn.in_half;
          if (wn.out_half >= 0 && wn.out_half == follow) continue;
          exit = side_of(G, cn, wn.out_pos);
          break;
        }
      }
      if (entry == exit) continue;
      x.sign = entry < 0 ? 1 : -1;
      out.push_back(x);
    }
  }
  return out;
}

Curve as_curve_checked(const HomologyBasis& H, const Curve& c) {
  check_closed_walk(H.oriented(), c.darts);
  if (reduce_walk(c.darts, true).size() != c.darts.size())
    throw TopologyError("twist curve " + c.name + " is not reduced");
  return c;
}

std::vector<HalfEdgeId> loop_from(const Curve& c, int i, int sign) {
  const int n = static_cast<int>(c.darts.size());
  std::vector<HalfEdgeId> loop;
  loop.reserve(n);
  if (sign > 0)
    for (int k = 0; k < n; ++k) loop.push_back(c.darts[(i + k) % n]);
  else
    for (int k = 1; k <= n; ++k) loop.push_back(opposite(c.darts[((i - k) % n + n) % n]));
  return loop;
}

std::vector<HalfEdgeId> splice(const Curve& c, const std::vector<HalfEdgeId>& darts, std::vector<Crossing> xs) {
  std::sort(xs.begin(), xs.end(), [](const Crossing& a, const Crossing& b) {
    return a.walk_strand != b.walk_strand ? a.walk_strand > b.walk_strand : a.curve_strand > b.curve_strand;
  });
  std::vector<HalfEdgeId> out = darts;
  for (const auto& x : xs) {
    auto loop = loop_from(c, x.curve_strand, x.sign);
    out.insert(out.begin() + x.walk_strand, loop.begin(), loop.end());
  }
  return out;
}

} // namespace

std::vector<Crossing> crossings(const HomologyBasis& H, const Curve& c, const std::vector<HalfEdgeId>& walk) {
  const RibbonGraph& G = H.oriented();
  as_curve_checked(H, c);
  check_closed_walk(G, walk);
  if (reduce_walk(walk, true).size() != walk.size()) throw TopologyError("walk is not reduced");
  return find_crossings(G, closed_strands(G, c.darts), closed_strands(G, walk), true);
}

std::vector<Crossing> crossings(const HomologyBasis& H, const Curve& c, const CombPath& p) {
  const RibbonGraph& G = H.oriented();
  as_curve_checked(H, c);
  check_path(G, p);
  if (reduce_walk(p.darts, false).size() != p.darts.size()) throw TopologyError("path is not reduced");
  return find_crossings(G, closed_strands(G, c.darts), path_strands(G, p), false);
}

int local_intersection(const HomologyBasis& H, const Curve& c, const std::vector<HalfEdgeId>& walk) {
  int s = 0;
  for (const auto& x : crossings(H, c, walk)) s += x.sign;
  return s;
}

int local_intersection(const HomologyBasis& H, const Curve& c, const CombPath& p) {
  int s = 0;
  for (const auto& x : crossings(H, c, p)) s += x.sign;
  return s;
}

Curve dehn_twist_on_path(const HomologyBasis& H, const Curve& c, const Curve& x) {
  auto walk = reduce_walk(x.darts, true);
  if (walk.empty()) return {x.name, {}};
  auto xs = crossings(H, c, walk);
  return {x.name, reduce_walk(splice(c, walk, std::move(xs)), true)};
}

CombPath dehn_twist_on_path(const HomologyBasis& H, const Curve& c, const CombPath& p) {
  CombPath q{p.start_corner, reduce_walk(p.darts, false), p.end_corner};
  auto xs = crossings(H, c, q);
  q.darts = reduce_walk(splice(c, q.darts, std::move(xs)), false);
  return q;
}

std::vector<CombPath> cutting_arc_system(const HomologyBasis& H) {
  std::vector<CombPath> arcs;
  for (EdgeId e : H.cotree_edges()) arcs.push_back({tail_half(e), {tail_half(e)}, head_half(e)});
  return arcs;
}

ClassVector arc_difference_class(const HomologyBasis& H, const CombPath& p, const CombPath& q) {
  if (p.start_corner != q.start_corner || p.end_corner != q.end_corner)
    throw TopologyError("arcs do not share endpoints");
  std::vector<HalfEdgeId> loop = p.darts;
  auto back = reverse_walk(q.darts);
  loop.insert(loop.end(), back.begin(), back.end());
  loop = reduce_walk(std::move(loop), true);
  if (loop.empty()) return ClassVector(H.rank(), 0);
  return H.class_of(loop);
}

std::vector<HalfEdgeId> darts_from_signed(const std::vector<int>& signed_edges) {
  std::vector<HalfEdgeId> d;
  for (int s : signed_edges) {
    if (s == 0) throw std::invalid_argument("signed edge id 0 is not allowed");
    d.push_back(s > 0 ? tail_half(s - 1) : head_half(-s - 1));
  }
  return d;
}

std::vector<int> signed_from_darts(const std::vector<HalfEdgeId>& darts) {
  std::vector<int> s;
  for (HalfEdgeId d : darts) s.push_back((d & 1) ? -(edge_of(d) + 1) : edge_of(d) + 1);
  return s;
}

} // namespace lf
