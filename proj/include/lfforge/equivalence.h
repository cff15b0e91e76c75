#pragma once

#include "lfforge/builders.h"
#include "lfforge/homology.h"

#include <optional>
#include <string>
#include <vector>

namespace lf {

/// The fiber with every edge shared by a first-family and a second-family
/// cycle contracted. Both constructions reduce to one vertex per plumbing
/// square. Cycles keep their indices; contracted darts are dropped.
struct PlumbingSpine {
  RibbonGraph graph;
  std::vector<Curve> cycles;
  Contraction contraction;
};

PlumbingSpine plumbing_spine(const LefschetzFibration& lf);

/// Squares are the crossings of first-family with second-family cycles,
/// numbered along the first-family cycles; orders start at their smallest
/// square. Throws TopologyError if the families do not look plumbed.
PlumbingPattern extract_plumbing_pattern(const LefschetzFibration& lf);

struct PatternRelabeling {
  std::vector<int> first_map, second_map, square_map; // from p to q
};

/// Relabeling of annuli and squares carrying p onto q, preserving signs and
/// cyclic orders. Lexicographically least one, or none.
std::optional<PatternRelabeling> match_patterns(const PlumbingPattern& p, const PlumbingPattern& q);

struct CheckResult {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// Ribbon graph isomorphism between the two plumbing spines, with the
/// matching of vanishing cycles it induces.
struct FibrationIso {
  std::vector<HalfEdgeId> dart_map; // spine of the first fibration -> spine of the second
  std::vector<VertexId> vertex_map;
  std::vector<int> cycle_map;       // cycle index -> cycle index
  bool orientation_preserving = true;
  IntMatrix homology_map;           // columns: images of the first spine's basis classes
};

struct IsoSearch {
  std::optional<FibrationIso> iso;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// Searches for an isomorphism sending the first-family cycles to the
/// first-family cycles in word order and the other families onto each other
/// up to reindexing. When one is found, verifies surgery compatibility,
/// the intertwining of the twist actions on H1, and the plumbing patterns.
IsoSearch find_isomorphism(const LefschetzFibration& a, const LefschetzFibration& b);

} // namespace lf
