#pragma once

#include "lfforge/ribbon_graph.h"

#include <cstdint>
#include <vector>

namespace lf {

using ClassVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// H_1 of an orientable ribbon graph surface with a fixed basis: one
/// generator per edge outside a breadth-first spanning tree (rooted at vertex 0,
/// scanning half-edges in increasing id). Coordinates count signed traversals
/// of those cotree edges.
class HomologyBasis {
public:
  explicit HomologyBasis(const RibbonGraph& g);

  int rank() const { return static_cast<int>(cotree_.size()); }
  const std::vector<EdgeId>& cotree_edges() const { return cotree_; }
  bool in_tree(EdgeId e) const { return coordinate_.at(e) < 0; }
  /// Index of e in the basis, or -1 for tree edges.
  int coordinate(EdgeId e) const { return coordinate_.at(e); }

  /// Same graph with twist bits removed; all position arithmetic uses this.
  const RibbonGraph& oriented() const { return oriented_; }

  /// Class of a closed walk given as darts. Throws if the walk is not closed.
  ClassVector class_of(const std::vector<HalfEdgeId>& closed_walk) const;

  /// Algebraic intersection matrix on the basis (antisymmetric).
  const IntMatrix& form() const { return form_; }
  std::int64_t pairing(const ClassVector& x, const ClassVector& y) const;

  /// Basis vector i.
  ClassVector unit(int i) const;

  /// Closed walk through the tree and basis edge i, in the edge's direction.
  std::vector<HalfEdgeId> fundamental_cycle(int i) const;

private:
  RibbonGraph oriented_;
  std::vector<EdgeId> cotree_;
  std::vector<int> coordinate_;
  std::vector<HalfEdgeId> parent_dart_; // tree dart arriving at each vertex, -1 at the root
  IntMatrix form_;
};

/// Right-handed twist along c acting on a class: x + <c, x> c.
ClassVector dehn_twist_on_class(const HomologyBasis& H, const ClassVector& c, const ClassVector& x);

/// Matrix of the twist along c, columns are images of basis vectors.
IntMatrix twist_matrix(const HomologyBasis& H, const ClassVector& c);

} // namespace lf
