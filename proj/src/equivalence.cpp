#include "lfforge/equivalence.h"

#include "lfforge/invariants.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace lf {

namespace {

std::vector<int> family_indices(const LefschetzFibration& lf, CycleFamily f) {
  std::vector<int> out;
  std::vector<char> seen(lf.cycles.size(), 0);
  for (int i : lf.word)
    if (!seen[i] && lf.families[i] == f) {
      seen[i] = 1;
      out.push_back(i);
    }
  return out;
}

std::string invariants_text(const LefschetzFibration& lf) {
  auto s = surface_invariants(lf.fiber);
  std::ostringstream o;
  o << "chi=" << s.euler << " b=" << s.boundary_components << " h=" << (s.genus ? std::to_string(*s.genus) : "-")
    << " letters=" << lf.word_length();
  return o.str();
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const size_t n = x.size(), m = y.empty() ? 0 : y[0].size(), k = y.size();
  IntMatrix z(n, std::vector<std::int64_t>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (x[i][t])
        for (size_t j = 0; j < m; ++j) z[i][j] += x[i][t] * y[t][j];
  return z;
}

IntMatrix identity(int n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Extends a seed dart correspondence through the rotation systems.
std::optional<std::vector<HalfEdgeId>> propagate(const RibbonGraph& g1, const RibbonGraph& g2, HalfEdgeId from,
                                                 HalfEdgeId to, int step) {
  if (g1.half_edge_count() != g2.half_edge_count() || g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  std::vector<HalfEdgeId> f(g1.half_edge_count(), -1), inv(g2.half_edge_count(), -1);
  std::deque<HalfEdgeId> queue;
  auto assign = [&](HalfEdgeId h, HalfEdgeId x) {
    if (f[h] == x) return true;
    if (f[h] != -1 || inv[x] != -1) return false;
    if (g1.degree(g1.vertex_of(h)) != g2.degree(g2.vertex_of(x))) return false;
    f[h] = x;
    inv[x] = h;
    queue.push_back(h);
    return true;
  };
  if (!assign(from, to)) return std::nullopt;
  while (!queue.empty()) {
    HalfEdgeId h = queue.front();
    queue.pop_front();
    if (!assign(opposite(h), opposite(f[h]))) return std::nullopt;
    if (!assign(g1.rotate(h, 1), g2.rotate(f[h], step))) return std::nullopt;
  }
  if (std::find(f.begin(), f.end(), -1) != f.end()) return std::nullopt;
  return f;
}

std::vector<HalfEdgeId> map_walk(const std::vector<HalfEdgeId>& f, const std::vector<HalfEdgeId>& w) {
  std::vector<HalfEdgeId> out;
  out.reserve(w.size());
  for (HalfEdgeId d : w) out.push_back(f[d]);
  return out;
}

} // namespace

bool IsoSearch::all_pass() const {
  return iso.has_value() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

PlumbingSpine plumbing_spine(const LefschetzFibration& lf) {
  std::set<EdgeId> in_first, shared;
  for (int i : family_indices(lf, CycleFamily::first))
    for (HalfEdgeId d : lf.cycles[i].darts) in_first.insert(edge_of(d));
  for (int j : family_indices(lf, CycleFamily::second))
    for (HalfEdgeId d : lf.cycles[j].darts)
      if (in_first.count(edge_of(d))) shared.insert(edge_of(d));
  PlumbingSpine s;
  s.contraction = contract_edges(lf.fiber, std::vector<EdgeId>(shared.begin(), shared.end()));
  s.graph = s.contraction.graph;
  for (const auto& c : lf.cycles) {
    Curve m{c.name, {}};
    for (HalfEdgeId d : c.darts) {
      EdgeId e = s.contraction.edge_map[edge_of(d)];
      if (e >= 0) m.darts.push_back(2 * e + (d & 1));
    }
    if (m.darts.empty()) throw TopologyError("cycle " + c.name + " collapses in the plumbing spine");
    check_closed_walk(s.graph, m.darts);
    s.cycles.push_back(std::move(m));
  }
  return s;
}

PlumbingPattern extract_plumbing_pattern(const LefschetzFibration& lf) {
  auto firsts = family_indices(lf, CycleFamily::first);
  auto seconds = family_indices(lf, CycleFamily::second);
  if (firsts.empty() || seconds.empty()) throw TopologyError("fibration has no plumbing families");
  PlumbingSpine spine = plumbing_spine(lf);
  HomologyBasis H(spine.graph);
  struct Found {
    int first, second, sign, along_first, along_second;
  };
  std::vector<Found> found;
  for (int i = 0; i < static_cast<int>(firsts.size()); ++i)
    for (int j = 0; j < static_cast<int>(seconds.size()); ++j)
      for (const auto& x : crossings(H, spine.cycles[firsts[i]], spine.cycles[seconds[j]].darts)) {
        if (x.overlap) throw TopologyError("cycles still overlap after contraction; not a plumbing");
        found.push_back({i, j, x.sign, x.curve_strand, x.walk_strand});
      }
  std::sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
    return std::tie(x.first, x.along_first) < std::tie(y.first, y.along_first);
  });
  PlumbingPattern p;
  for (int i : firsts) p.first_names.push_back(lf.cycles[i].name);
  for (int j : seconds) p.second_names.push_back(lf.cycles[j].name);
  p.first_order.resize(firsts.size());
  p.second_order.resize(seconds.size());
  for (int s = 0; s < static_cast<int>(found.size()); ++s) {
    p.squares.push_back({found[s].first, found[s].second, found[s].sign});
    p.first_order[found[s].first].push_back(s);
  }
  for (int j = 0; j < static_cast<int>(seconds.size()); ++j) {
    std::vector<int> sq;
    for (int s = 0; s < static_cast<int>(found.size()); ++s)
      if (found[s].second == j) sq.push_back(s);
    std::sort(sq.begin(), sq.end(), [&](int x, int y) { return found[x].along_second < found[y].along_second; });
    if (!sq.empty()) std::rotate(sq.begin(), std::min_element(sq.begin(), sq.end()), sq.end());
    p.second_order[j] = sq;
  }
  for (auto& order : p.first_order)
    if (!order.empty()) std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
  check_pattern(p);
  return p;
}

std::optional<PatternRelabeling> match_patterns(const PlumbingPattern& p, const PlumbingPattern& q) {
  const int nf = static_cast<int>(p.first_order.size()), ns = static_cast<int>(p.second_order.size());
  if (nf != static_cast<int>(q.first_order.size()) || ns != static_cast<int>(q.second_order.size()) ||
      p.squares.size() != q.squares.size())
    return std::nullopt;
  PatternRelabeling r;
  r.first_map.assign(nf, -1);
  r.second_map.assign(ns, -1);
  r.square_map.assign(p.squares.size(), -1);
  std::vector<char> first_used(nf, 0);
  std::vector<int> second_inv(ns, -1);

  auto cyclic_equal = [](const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) return false;
    if (x.empty()) return true;
    for (size_t s = 0; s < y.size(); ++s) {
      bool ok = true;
      for (size_t k = 0; k < x.size() && ok; ++k) ok = x[k] == y[(s + k) % y.size()];
      if (ok) return true;
    }
    return false;
  };
  auto finish = [&]() {
    // Vertical annuli without squares pair up in index order.
    std::vector<int> free_q;
    for (int j = 0; j < ns; ++j)
      if (second_inv[j] < 0) free_q.push_back(j);
    size_t next = 0;
    for (int j = 0; j < ns; ++j)
      if (r.second_map[j] < 0) {
        if (next >= free_q.size() || !p.second_order[j].empty() || !q.second_order[free_q[next]].empty()) return false;
        r.second_map[j] = free_q[next++];
      }
    for (int j = 0; j < ns; ++j) {
      std::vector<int> mapped;
      for (int s : p.second_order[j]) mapped.push_back(r.square_map[s]);
      if (!cyclic_equal(mapped, q.second_order[r.second_map[j]])) return false;
    }
    return true;
  };
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == nf) return finish();
    const auto& src = p.first_order[i];
    for (int t = 0; t < nf; ++t) {
      if (first_used[t] || q.first_order[t].size() != src.size()) continue;
      const auto& dst = q.first_order[t];
      const size_t len = std::max<size_t>(dst.size(), 1);
      for (size_t off = 0; off < len; ++off) {
        auto saved_second = r.second_map;
        auto saved_inv = second_inv;
        bool ok = true;
        for (size_t k = 0; k < src.size() && ok; ++k) {
          int a = src[k], b = dst[(k + off) % dst.size()];
          int sa = p.squares[a].second, sb = q.squares[b].second;
          if (p.squares[a].sign != q.squares[b].sign) ok = false;
          else if (r.second_map[sa] == -1 && second_inv[sb] == -1) {
            r.second_map[sa] = sb;
            second_inv[sb] = sa;
          } else if (r.second_map[sa] != sb) {
            ok = false;
          }
          if (ok) r.square_map[a] = b;
        }
        if (ok) {
          first_used[t] = 1;
          r.first_map[i] = t;
          if (place(i + 1)) return true;
          first_used[t] = 0;
          r.first_map[i] = -1;
        }
        r.second_map = saved_second;
        second_inv = saved_inv;
        if (src.empty()) break;
      }
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return r;
}

IsoSearch find_isomorphism(const LefschetzFibration& a, const LefschetzFibration& b) {
  IsoSearch out;
  const std::string inv_a = invariants_text(a), inv_b = invariants_text(b);
  out.checks.push_back({"fiber invariants", inv_a, inv_b, inv_a == inv_b});
  if (inv_a != inv_b) return out;

  PlumbingSpine sa = plumbing_spine(a), sb = plumbing_spine(b);
  const RibbonGraph &g1 = sa.graph, &g2 = sb.graph;
  auto firsts_a = family_indices(a, CycleFamily::first), firsts_b = family_indices(b, CycleFamily::first);

  // Seeds: the first dart of the first horizontal core goes to every dart of
  // its partner, in both directions and both orientations.
  std::vector<std::pair<HalfEdgeId, HalfEdgeId>> seeds;
  if (!firsts_a.empty() && firsts_a.size() == firsts_b.size()) {
    const auto& src = sa.cycles[firsts_a[0]].darts;
    const auto& dst = sb.cycles[firsts_b[0]].darts;
    for (HalfEdgeId x : dst) seeds.push_back({src[0], x});
    for (HalfEdgeId x : reverse_walk(dst)) seeds.push_back({src[0], x});
  } else if (firsts_a.empty() && firsts_b.empty()) {
    for (HalfEdgeId x = 0; x < g2.half_edge_count(); ++x) seeds.push_back({0, x});
  }

  bool graph_iso_seen = false;
  for (int step : {1, -1}) {
    for (auto [from, to] : seeds) {
      auto f = propagate(g1, g2, from, to, step);
      if (!f) continue;
      graph_iso_seen = true;
      // Cycle correspondence, family by family.
      std::vector<int> cmap(a.cycles.size(), -1);
      std::vector<char> taken(b.cycles.size(), 0);
      bool ok = true;
      for (CycleFamily fam : {CycleFamily::first, CycleFamily::second, CycleFamily::resolved, CycleFamily::other}) {
        auto xs = family_indices(a, fam), ys = family_indices(b, fam);
        if (xs.size() != ys.size()) {
          ok = false;
          break;
        }
        for (size_t t = 0; t < xs.size() && ok; ++t) {
          auto img = map_walk(*f, sa.cycles[xs[t]].darts);
          if (fam == CycleFamily::first) {
            ok = same_cycle(img, sb.cycles[ys[t]].darts, true);
            if (ok) cmap[xs[t]] = ys[t], taken[ys[t]] = 1;
            continue;
          }
          ok = false;
          for (int y : ys)
            if (!taken[y] && same_cycle(img, sb.cycles[y].darts, true)) {
              cmap[xs[t]] = y;
              taken[y] = 1;
              ok = true;
              break;
            }
        }
        if (!ok) break;
      }
      if (!ok) continue;

      FibrationIso iso;
      iso.dart_map = *f;
      iso.orientation_preserving = step == 1;
      iso.cycle_map = cmap;
      iso.vertex_map.assign(g1.vertex_count(), -1);
      for (VertexId v = 0; v < g1.vertex_count(); ++v) iso.vertex_map[v] = g2.vertex_of((*f)[g1.rotation(v).front()]);

      std::ostringstream cm;
      for (size_t i = 0; i < cmap.size(); ++i)
        cm << (i ? " " : "") << a.cycles[i].name << "->" << b.cycles[cmap[i]].name;
      out.checks.push_back({"ribbon graph isomorphism", "found", step == 1 ? "orientation preserving" : "orientation reversing", true});
      out.checks.push_back({"cycle correspondence", "first family in order, others reindexed", cm.str(), true});

      // Word letters map to letters of the same family.
      bool word_ok = a.word_length() == b.word_length();
      for (int k = 0; word_ok && k < a.word_length(); ++k)
        word_ok = a.families[a.word[k]] == b.families[b.word[k]];
      out.checks.push_back({"word families align", "true", word_ok ? "true" : "false", word_ok});

      // Surgery compatibility in the second spine.
      auto xs_first = family_indices(a, CycleFamily::first), xs_second = family_indices(a, CycleFamily::second);
      auto ys_res = family_indices(b, CycleFamily::resolved);
      if (!xs_first.empty() && !xs_second.empty() && !ys_res.empty()) {
        std::vector<Curve> fa, fb;
        for (int i : xs_first) fa.push_back({a.cycles[i].name, map_walk(*f, sa.cycles[i].darts)});
        for (int j : xs_second) fb.push_back({a.cycles[j].name, map_walk(*f, sa.cycles[j].darts)});
        std::string got;
        bool pass;
        try {
          auto res = simultaneous_surgery(g2, fa, fb, "r");
          std::vector<char> hit(ys_res.size(), 0);
          int matched = 0;
          for (const auto& r : res)
            for (size_t k = 0; k < ys_res.size(); ++k)
              if (!hit[k] && same_cycle(r.darts, sb.cycles[ys_res[k]].darts, !iso.orientation_preserving)) {
                hit[k] = 1;
                ++matched;
                break;
              }
          pass = matched == static_cast<int>(ys_res.size()) && res.size() == ys_res.size();
          got = std::to_string(res.size()) + " components, " + std::to_string(matched) + " matched";
        } catch (const std::exception& e) {
          pass = false;
          got = e.what();
        }
        out.checks.push_back({"surgery compatibility", "image of the resolution equals the resolved cycles", got, pass});
      }

      // Homology map and intertwining of the twist actions.
      HomologyBasis h1(g1), h2(g2);
      const int n = h1.rank();
      bool hom_ok = n == h2.rank();
      IntMatrix M(h2.rank(), std::vector<std::int64_t>(n, 0));
      for (int i = 0; hom_ok && i < n; ++i) {
        auto col = h2.class_of(map_walk(*f, h1.fundamental_cycle(i)));
        for (int r = 0; r < h2.rank(); ++r) M[r][i] = col[r];
      }
      if (hom_ok) hom_ok = cokernel_of_rows(M, n).is_trivial() && kernel_rank_of_rows(M, n) == 0;
      out.checks.push_back({"homology map invertible", "true", hom_ok ? "true" : "false", hom_ok});
      iso.homology_map = M;
      if (hom_ok) {
        bool inter = true;
        IntMatrix left = identity(n), right = identity(n);
        for (int k = 0; k < a.word_length(); ++k) {
          IntMatrix t1 = twist_matrix(h1, h1.class_of(sa.cycles[a.word[k]].darts));
          IntMatrix t2 = twist_matrix(h2, h2.class_of(sb.cycles[cmap[a.word[k]]].darts));
          if (!iso.orientation_preserving)
            for (int r = 0; r < n; ++r)
              for (int c = 0; c < n; ++c) t2[r][c] = (r == c ? 2 : 0) - t2[r][c];
          inter = inter && multiply(M, t1) == multiply(t2, M);
          left = multiply(left, t1);
          right = multiply(right, t2);
        }
        inter = inter && multiply(M, left) == multiply(right, M);
        out.checks.push_back({"twist actions intertwined", "M T = T' M for every letter and the full word",
                              inter ? "equal" : "differ", inter});
      }

      // Plumbing patterns.
      if (!xs_first.empty() && !xs_second.empty()) {
        std::string got;
        bool pass;
        try {
          auto rel = match_patterns(extract_plumbing_pattern(a), extract_plumbing_pattern(b));
          pass = rel.has_value();
          got = pass ? "match" : "no relabeling";
        } catch (const std::exception& e) {
          pass = false;
          got = e.what();
        }
        out.checks.push_back({"plumbing pattern", "equal up to relabeling", got, pass});
      }
      out.iso = std::move(iso);
      return out;
    }
  }
  out.checks.push_back({"ribbon graph isomorphism", "found", graph_iso_seen ? "cycles do not correspond" : "none", false});
  return out;
}

} // namespace lf
