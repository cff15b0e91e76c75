#pragma once

#include "lfforge/homology.h"

#include <string>
#include <vector>

namespace lf {

/// Closed curve carried by a ribbon graph: a cyclic sequence of darts.
struct Curve {
  std::string name;
  std::vector<HalfEdgeId> darts;

  bool operator==(const Curve&) const = default;
};

/// Arc with endpoints on the boundary. A corner is named by the half-edge
/// it follows in the oriented rotation of its vertex; corners lie on
/// boundary walks, so two arcs never share an endpoint passage with a curve.
struct CombPath {
  HalfEdgeId start_corner = 0;
  std::vector<HalfEdgeId> darts;
  HalfEdgeId end_corner = 0;

  bool operator==(const CombPath&) const = default;
};

/// Throws TopologyError unless the darts form a closed walk on g.
void check_closed_walk(const RibbonGraph& g, const std::vector<HalfEdgeId>& darts);
/// Throws unless consecutive darts and corners of p meet at common vertices.
void check_path(const RibbonGraph& g, const CombPath& p);
/// No edge traversed twice in either direction.
bool is_edge_simple(const std::vector<HalfEdgeId>& darts);

/// Cancels backtracks (d followed by opposite(d)); `cyclic` also cancels
/// across the wrap-around.
std::vector<HalfEdgeId> reduce_walk(std::vector<HalfEdgeId> darts, bool cyclic);
std::vector<HalfEdgeId> reverse_walk(const std::vector<HalfEdgeId>& darts);

/// Same cyclic walk, possibly traversed in reverse, possibly started elsewhere.
bool same_cycle(const std::vector<HalfEdgeId>& x, const std::vector<HalfEdgeId>& y, bool allow_reverse);

/// One signed passage of a walk from one side of a curve to the other.
/// Overlapping stretches (runs of shared edges) count as a single passage
/// recorded at the strand where the walk joins the curve.
struct Crossing {
  int walk_strand = 0;  // index of the walk's strand where the passage starts
  int curve_strand = 0; // the curve strand met there
  int sign = 0;         // +1 when the walk passes from the curve's right to its left
  int overlap = 0;      // number of shared edges along the passage
  bool parallel = true; // overlap traversed in the curve's direction
};

/// Signed crossings of a reduced closed walk / path with curve c. Sums of
/// signs equal <[c], [walk]>.
std::vector<Crossing> crossings(const HomologyBasis& H, const Curve& c, const std::vector<HalfEdgeId>& closed_walk);
std::vector<Crossing> crossings(const HomologyBasis& H, const Curve& c, const CombPath& p);

int local_intersection(const HomologyBasis& H, const Curve& c, const std::vector<HalfEdgeId>& closed_walk);
int local_intersection(const HomologyBasis& H, const Curve& c, const CombPath& p);

/// Right-handed twist along c applied to a walk: a copy of c or its reverse
/// is spliced in at every crossing, then the walk is freely reduced.
Curve dehn_twist_on_path(const HomologyBasis& H, const Curve& c, const Curve& x);
CombPath dehn_twist_on_path(const HomologyBasis& H, const Curve& c, const CombPath& p);

/// One arc per basis edge, running along that edge between the corners that
/// follow its two half-edges. Cutting the surface along all of them leaves a disk.
std::vector<CombPath> cutting_arc_system(const HomologyBasis& H);

/// Class of the closed walk p followed by q reversed; p and q must share endpoints.
ClassVector arc_difference_class(const HomologyBasis& H, const CombPath& p, const CombPath& q);

/// Curves given with signed 1-based edge ids (+e: tail to head).
std::vector<HalfEdgeId> darts_from_signed(const std::vector<int>& signed_edges);
std::vector<int> signed_from_darts(const std::vector<HalfEdgeId>& darts);

} // namespace lf
