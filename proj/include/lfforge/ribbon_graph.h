#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lf {

using VertexId = int;
using EdgeId = int;
// Half-edge 2e sits at the tail of edge e, 2e+1 at its head. A directed
// traversal of an edge is identified with the half-edge it departs from
// (a "dart"), so dart d arrives at opposite(d).
using HalfEdgeId = int;

inline constexpr HalfEdgeId opposite(HalfEdgeId h) { return h ^ 1; }
inline constexpr EdgeId edge_of(HalfEdgeId h) { return h >> 1; }
inline constexpr HalfEdgeId tail_half(EdgeId e) { return 2 * e; }
inline constexpr HalfEdgeId head_half(EdgeId e) { return 2 * e + 1; }

class TopologyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Combinatorial surface with boundary: a graph with a cyclic order of
/// half-edges at every vertex and a half-twist flag per edge. The surface is
/// the band thickening of the graph. Immutable once constructed.
class RibbonGraph {
public:
  RibbonGraph() = default;

  /// `rotation[v]` lists the half-edges at v in cyclic order; `twisted[e]`
  /// flags edge e. Every half-edge 0..2E-1 must occur in exactly one rotation.
  RibbonGraph(std::vector<std::vector<HalfEdgeId>> rotation, std::vector<bool> twisted,
              std::vector<std::string> vertex_labels = {});

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return static_cast<int>(twisted_.size()); }
  int half_edge_count() const { return 2 * edge_count(); }

  const std::vector<HalfEdgeId>& rotation(VertexId v) const { return rotation_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(rotation_.at(v).size()); }
  bool twisted(EdgeId e) const { return twisted_.at(e); }
  const std::vector<bool>& twist_bits() const { return twisted_; }

  VertexId vertex_of(HalfEdgeId h) const { return vertex_of_.at(h); }
  /// Index of h inside rotation(vertex_of(h)).
  int slot_of(HalfEdgeId h) const { return slot_of_.at(h); }
  /// Neighbour of h in its vertex's rotation, `step` = +1 (successor) or -1.
  HalfEdgeId rotate(HalfEdgeId h, int step) const;

  VertexId tail(EdgeId e) const { return vertex_of(tail_half(e)); }
  VertexId head(EdgeId e) const { return vertex_of(head_half(e)); }

  const std::string& label(VertexId v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structural hash; equal graphs give equal fingerprints.
  std::uint64_t fingerprint() const;

  /// Same graph with every rotation reversed (orientation reversal).
  RibbonGraph mirrored() const;

  bool operator==(const RibbonGraph& other) const {
    return rotation_ == other.rotation_ && twisted_ == other.twisted_;
  }

private:
  std::vector<std::vector<HalfEdgeId>> rotation_;
  std::vector<bool> twisted_;
  std::vector<std::string> labels_;
  std::vector<VertexId> vertex_of_;
  std::vector<int> slot_of_;
};

/// Incremental construction helper for builders.
class RibbonGraphBuilder {
public:
  VertexId add_vertex(std::string label = {});
  /// Adds an edge oriented from `from` to `to`; returns its id.
  EdgeId add_edge(VertexId from, VertexId to, bool twisted = false);
  void set_rotation(VertexId v, std::vector<HalfEdgeId> cyclic_order);
  RibbonGraph build() const;

private:
  std::vector<std::string> labels_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<bool> twisted_;
  std::vector<std::vector<HalfEdgeId>> rotation_;
};

struct SurfaceInvariants {
  int euler = 0;
  int boundary_components = 0;
  bool orientable = false;
  std::optional<int> genus; // only for orientable surfaces

  bool operator==(const SurfaceInvariants&) const = default;
};

/// Boundary walks of the thickening, each listed once as a sequence of darts
/// (twisted edges flip the tracing direction).
std::vector<std::vector<HalfEdgeId>> boundary_walks(const RibbonGraph& g);

/// Local orientation sign per vertex, consistent across every edge (a twisted
/// edge joins opposite signs). Empty when the thickening is non-orientable.
std::optional<std::vector<int>> orientation_signs(const RibbonGraph& g);

bool is_connected(const RibbonGraph& g);

SurfaceInvariants surface_invariants(const RibbonGraph& g);

/// Equivalent graph with all twist bits cleared: rotations at vertices with
/// negative orientation sign are reversed. Throws on non-orientable input.
RibbonGraph untwisted(const RibbonGraph& g);

struct Contraction {
  RibbonGraph graph;
  std::vector<EdgeId> edge_map;     // old edge -> new edge, -1 if contracted
  std::vector<VertexId> vertex_map; // old vertex -> merged vertex
};

/// Contracts the given non-loop edges of an orientable ribbon graph. The
/// result is untwisted and thickens to the same surface.
Contraction contract_edges(const RibbonGraph& g, const std::vector<EdgeId>& edges);

} // namespace lf
