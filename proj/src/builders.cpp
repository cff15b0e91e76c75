#include "lfforge/builders.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lf {

void check_pattern(const PlumbingPattern& p) {
  const int nf = static_cast<int>(p.first_names.size()), ns = static_cast<int>(p.second_names.size());
  if (static_cast<int>(p.first_order.size()) != nf || static_cast<int>(p.second_order.size()) != ns)
    throw std::invalid_argument("pattern order lists do not match annulus names");
  std::vector<int> in_first(p.squares.size(), 0), in_second(p.squares.size(), 0);
  for (int i = 0; i < nf; ++i)
    for (int s : p.first_order[i]) {
      if (s < 0 || s >= static_cast<int>(p.squares.size())) throw std::invalid_argument("unknown square in order");
      if (p.squares[s].first != i) throw std::invalid_argument("square listed on the wrong horizontal annulus");
      ++in_first[s];
    }
  for (int j = 0; j < ns; ++j)
    for (int s : p.second_order[j]) {
      if (s < 0 || s >= static_cast<int>(p.squares.size())) throw std::invalid_argument("unknown square in order");
      if (p.squares[s].second != j) throw std::invalid_argument("square listed on the wrong vertical annulus");
      ++in_second[s];
    }
  for (size_t s = 0; s < p.squares.size(); ++s) {
    if (in_first[s] != 1 || in_second[s] != 1)
      throw std::invalid_argument("square " + std::to_string(s) + " must sit once on each of its annuli");
    if (p.squares[s].sign != 1 && p.squares[s].sign != -1) throw std::invalid_argument("square sign must be +1 or -1");
  }
}

PlumbingPattern johns_pattern(int genus) {
  if (genus < 0) throw std::invalid_argument("genus must be non-negative");
  const int n = 2 * genus + 2;
  PlumbingPattern p;
  p.first_names = {"a1", "a2"};
  for (int j = 0; j < n; ++j) p.second_names.push_back("b" + std::to_string(j + 1));
  p.first_order.resize(2);
  p.second_order.resize(n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < n; ++j) {
      int s = static_cast<int>(p.squares.size());
      p.squares.push_back({i, j, 1});
      p.first_order[i].push_back(s);
    }
  for (int j = 0; j < n; ++j) p.second_order[j] = {j, n + j};
  return p;
}

Realization realize_plumbing(const PlumbingPattern& p) {
  check_pattern(p);
  RibbonGraphBuilder b;
  for (const auto& sq : p.squares) b.add_vertex(p.first_names.at(sq.first) + "x" + p.second_names.at(sq.second));
  const int S = static_cast<int>(p.squares.size());
  std::vector<HalfEdgeId> first_out(S), first_in(S), second_out(S), second_in(S);
  Realization r;
  auto lay = [&](const std::vector<int>& order, std::vector<HalfEdgeId>& out, std::vector<HalfEdgeId>& in,
                 const std::string& name) {
    Curve c{name, {}};
    for (size_t t = 0; t < order.size(); ++t) {
      int from = order[t], to = order[(t + 1) % order.size()];
      EdgeId e = b.add_edge(from, to);
      out[from] = tail_half(e);
      in[to] = head_half(e);
      c.darts.push_back(tail_half(e));
    }
    return c;
  };
  for (size_t i = 0; i < p.first_order.size(); ++i)
    r.first.push_back(lay(p.first_order[i], first_out, first_in, p.first_names[i]));
  for (size_t j = 0; j < p.second_order.size(); ++j)
    r.second.push_back(lay(p.second_order[j], second_out, second_in, p.second_names[j]));
  for (int s = 0; s < S; ++s) {
    if (p.squares[s].sign > 0)
      b.set_rotation(s, {first_out[s], second_out[s], first_in[s], second_in[s]});
    else
      b.set_rotation(s, {first_out[s], second_in[s], first_in[s], second_out[s]});
  }
  r.fiber = b.build();
  return r;
}

namespace {

struct Junction {
  int curve;     // index in the combined list (first curves, then second)
  int leave;     // strand where the traced component leaves this curve
  int enter;     // strand where it re-enters this curve after the partner's stretch
  int partner;   // junction id on the other curve
};

std::vector<HalfEdgeId> canonical_start(std::vector<HalfEdgeId> w) {
  if (w.empty()) return w;
  auto it = std::min_element(w.begin(), w.end());
  std::rotate(w.begin(), it, w.end());
  return w;
}

} // namespace

std::vector<Curve> simultaneous_surgery(const RibbonGraph& fiber, const std::vector<Curve>& first,
                                        const std::vector<Curve>& second_in, const std::string& prefix) {
  HomologyBasis H(fiber);
  std::vector<Curve> second = second_in;
  const int na = static_cast<int>(first.size()), nb = static_cast<int>(second.size());
  std::vector<std::vector<std::vector<Crossing>>> xs(nb, std::vector<std::vector<Crossing>>(na));
  for (int l = 0; l < nb; ++l) {
    int pos = 0, neg = 0;
    for (int k = 0; k < na; ++k) {
      xs[l][k] = crossings(H, first[k], second[l].darts);
      for (const auto& x : xs[l][k]) (x.sign > 0 ? pos : neg)++;
    }
    if (pos && neg)
      throw TopologyError("curve " + second[l].name + " crosses the first multicurve with both signs");
    if (neg) {
      second[l].darts = reverse_walk(second[l].darts);
      for (int k = 0; k < na; ++k) xs[l][k] = crossings(H, first[k], second[l].darts);
    }
  }

  // Each crossing cuts both curves. On the first curve the component
  // arriving before the crossing continues along the second curve, and vice
  // versa; a shared stretch traversed in opposite directions is dropped.
  std::vector<Curve> all = first;
  all.insert(all.end(), second.begin(), second.end());
  std::vector<Junction> junctions;
  for (int l = 0; l < nb; ++l)
    for (int k = 0; k < na; ++k)
      for (const auto& x : xs[l][k]) {
        const int ma = static_cast<int>(first[k].darts.size());
        const int mb = static_cast<int>(second[l].darts.size());
        int ja = static_cast<int>(junctions.size()), jb = ja + 1;
        if (x.parallel || x.overlap == 0) {
          junctions.push_back({k, x.curve_strand, x.curve_strand, jb});
          junctions.push_back({na + l, x.walk_strand, x.walk_strand, ja});
        } else {
          int a_join = ((x.curve_strand - x.overlap) % ma + ma) % ma;
          junctions.push_back({k, a_join, x.curve_strand, jb});
          junctions.push_back({na + l, x.walk_strand, (x.walk_strand + x.overlap) % mb, ja});
        }
      }

  // Junctions along each curve, sorted by where the curve is left.
  std::vector<std::vector<int>> along(all.size());
  for (int id = 0; id < static_cast<int>(junctions.size()); ++id) along[junctions[id].curve].push_back(id);
  std::vector<int> next_on_curve(junctions.size(), -1);
  for (auto& list : along) {
    std::sort(list.begin(), list.end(), [&](int x, int y) { return junctions[x].leave < junctions[y].leave; });
    for (size_t t = 0; t < list.size(); ++t) next_on_curve[list[t]] = list[(t + 1) % list.size()];
  }

  std::vector<std::vector<HalfEdgeId>> comps;
  std::vector<char> used(junctions.size(), 0);
  for (int start = 0; start < static_cast<int>(junctions.size()); ++start) {
    if (used[start]) continue;
    std::vector<HalfEdgeId> walk;
    int j = start; // we are entering the curve of junction j at its `enter` strand
    while (!used[j]) {
      used[j] = 1;
      const Junction& cur = junctions[j];
      const auto& darts = all[cur.curve].darts;
      const int m = static_cast<int>(darts.size());
      int nxt = next_on_curve[j];
      int len = ((junctions[nxt].leave - cur.enter) % m + m) % m;
      if (len == 0 && nxt == j) len = m;
      for (int t = 0; t < len; ++t) walk.push_back(darts[(cur.enter + t) % m]);
      j = junctions[nxt].partner;
    }
    walk = reduce_walk(std::move(walk), true);
    if (walk.empty()) throw TopologyError("surgery produced a null-homotopic component");
    comps.push_back(canonical_start(std::move(walk)));
  }
  for (size_t c = 0; c < all.size(); ++c)
    if (along[c].empty()) comps.push_back(all[c].darts);

  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
    auto ex = [](const std::vector<HalfEdgeId>& w) {
      EdgeId m = edge_of(w.front());
      for (auto d : w) m = std::min(m, edge_of(d));
      return m;
    };
    return ex(x) < ex(y);
  });
  std::vector<Curve> out;
  for (size_t i = 0; i < comps.size(); ++i) out.push_back({prefix + std::to_string(i + 1), comps[i]});
  return out;
}

void check_fiber_gate(const RibbonGraph& fiber, int genus, const std::string& who) {
  auto s = surface_invariants(fiber);
  SurfaceInvariants want{-4 * genus - 4, 4 * genus + 4, true, 1};
  if (!(s == want))
    throw TopologyError(who + ": fiber has chi=" + std::to_string(s.euler) + " b=" +
                        std::to_string(s.boundary_components) + (s.orientable ? "" : " (non-orientable)") +
                        ", expected a genus one surface with " + std::to_string(4 * genus + 4) +
                        " boundary components");
}

LefschetzFibration johns_fibration(int genus) {
  auto pattern = johns_pattern(genus);
  auto r = realize_plumbing(pattern);
  check_fiber_gate(r.fiber, genus, "johns_fibration");
  auto resolved = simultaneous_surgery(r.fiber, r.first, r.second, "c");
  if (resolved.size() != 2)
    throw TopologyError("resolution produced " + std::to_string(resolved.size()) + " components, expected 2");
  LefschetzFibration lf;
  lf.construction = "johns";
  lf.genus = genus;
  lf.fiber = r.fiber;
  for (auto& c : r.first) {
    lf.cycles.push_back(c);
    lf.families.push_back(CycleFamily::first);
  }
  for (auto& c : r.second) {
    lf.cycles.push_back(c);
    lf.families.push_back(CycleFamily::second);
  }
  for (auto& c : resolved) {
    lf.cycles.push_back(c);
    lf.families.push_back(CycleFamily::resolved);
  }
  for (int i = 0; i < static_cast<int>(lf.cycles.size()); ++i) lf.word.push_back(i);
  validate(lf);
  return lf;
}

ACampoFiber acampo_fiber(const Divide& d) {
  auto report = check_admissible(d);
  if (!report.structurally_valid) throw TopologyError("divide is malformed: " + report.problems.front());
  const RibbonGraph& D = d.graph;
  const int V = D.vertex_count();
  // Bipartition of the double points; the side each band leaves a roundabout
  // alternates with it so that the half twists cancel around every face.
  std::vector<int> parity(V, -1);
  for (VertexId root = 0; root < V; ++root) {
    if (parity[root] >= 0) continue;
    parity[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (HalfEdgeId h : D.rotation(v)) {
        VertexId w = D.vertex_of(opposite(h));
        if (parity[w] < 0) {
          parity[w] = 1 - parity[v];
          queue.push_back(w);
        }
      }
    }
  }
  RibbonGraphBuilder b;
  for (VertexId v = 0; v < V; ++v)
    for (int k = 0; k < 4; ++k) b.add_vertex("r" + std::to_string(v + 1) + "." + std::to_string(k));
  for (VertexId v = 0; v < V; ++v)
    for (int k = 0; k < 4; ++k) b.add_edge(4 * v + k, 4 * v + (k + 1) % 4);
  for (EdgeId e = 0; e < D.edge_count(); ++e)
    b.add_edge(4 * D.tail(e) + D.slot_of(tail_half(e)), 4 * D.head(e) + D.slot_of(head_half(e)), true);
  for (VertexId v = 0; v < V; ++v)
    for (int k = 0; k < 4; ++k) {
      HalfEdgeId h = D.rotation(v)[k];
      HalfEdgeId band = 2 * (4 * V + edge_of(h)) + (h & 1);
      HalfEdgeId arc_in = head_half(4 * v + (k + 3) % 4), arc_out = tail_half(4 * v + k);
      if ((k + parity[v]) % 2 == 0)
        b.set_rotation(4 * v + k, {arc_in, band, arc_out});
      else
        b.set_rotation(4 * v + k, {arc_in, arc_out, band});
    }
  ACampoFiber f;
  f.fiber = b.build();
  f.vertex_count = V;
  for (VertexId v = 0; v < V; ++v) {
    Curve c{"beta" + std::to_string(v + 1), {}};
    for (int k = 0; k < 4; ++k) c.darts.push_back(tail_half(4 * v + k));
    f.roundabouts.push_back(std::move(c));
  }
  return f;
}

DivideCycles divide_vanishing_cycles(const Divide& d, const Coloring& col, const ACampoFiber& f) {
  const RibbonGraph& D = d.graph;
  const int V = D.vertex_count();
  if (f.vertex_count != V) throw TopologyError("A'Campo fiber does not belong to this divide");
  auto face_curve = [&](const std::vector<HalfEdgeId>& face, const std::string& name) {
    Curve c{name, {}};
    for (HalfEdgeId h : face) {
      c.darts.push_back(2 * (4 * V + edge_of(h)) + (h & 1));
      HalfEdgeId arrive = opposite(h);
      c.darts.push_back(tail_half(4 * D.vertex_of(arrive) + D.slot_of(arrive)));
    }
    if (!is_edge_simple(c.darts)) throw TopologyError("face curve " + name + " is not edge-simple");
    return c;
  };
  DivideCycles out;
  for (int i : col.faces_of_color(0))
    out.white.push_back(face_curve(col.faces[i], "alpha" + std::to_string(out.white.size() + 1)));
  // Black face curves run against the face tracing; this is the direction
  // in which they come out of resolving the white curves with the roundabouts.
  for (int i : col.faces_of_color(1)) {
    Curve c = face_curve(col.faces[i], "gamma" + std::to_string(out.black.size() + 1));
    c.darts = canonical_start(reverse_walk(c.darts));
    out.black.push_back(std::move(c));
  }
  HomologyBasis H(f.fiber);
  for (Curve beta : f.roundabouts) {
    int pos = 0, neg = 0;
    for (const auto& alpha : out.white)
      for (const auto& x : crossings(H, alpha, beta.darts)) (x.sign > 0 ? pos : neg)++;
    if (pos && neg) throw TopologyError("roundabout " + beta.name + " meets the white curves with both signs");
    if (neg) beta.darts = canonical_start(reverse_walk(beta.darts));
    out.roundabouts.push_back(std::move(beta));
  }
  return out;
}

LefschetzFibration ishikawa_fibration(int genus) {
  Divide d = standard_divide(genus);
  auto report = check_admissible(d);
  if (!report.admissible()) throw TopologyError("standard divide is not admissible: " + report.problems.front());
  Coloring col = checkerboard_coloring(d);
  ACampoFiber f = acampo_fiber(d);
  check_fiber_gate(f.fiber, genus, "ishikawa_fibration");
  DivideCycles cyc = divide_vanishing_cycles(d, col, f);
  LefschetzFibration lf;
  lf.construction = "ishikawa";
  lf.genus = genus;
  lf.fiber = f.fiber;
  auto add = [&](const std::vector<Curve>& list, CycleFamily fam) {
    for (const auto& c : list) {
      lf.cycles.push_back(c);
      lf.families.push_back(fam);
    }
  };
  add(cyc.white, CycleFamily::first);
  add(cyc.roundabouts, CycleFamily::second);
  add(cyc.black, CycleFamily::resolved);
  for (int i = 0; i < static_cast<int>(lf.cycles.size()); ++i) lf.word.push_back(i);
  validate(lf);
  return lf;
}

LefschetzFibration sphere_planar_fibration() {
  LefschetzFibration lf;
  lf.construction = "sphere";
  lf.genus = 0;
  lf.fiber = RibbonGraph({{0, 1}}, {false}, {"core"});
  lf.cycles = {{"core", {0}}};
  lf.families = {CycleFamily::other};
  lf.word = {0, 0};
  validate(lf);
  return lf;
}

} // namespace lf
