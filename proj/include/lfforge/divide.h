#pragma once

#include "lfforge/ribbon_graph.h"

#include <string>
#include <vector>

namespace lf {

/// Immersed circles on a closed orientable surface, stored as a 4-valent
/// rotation system. Each double point pairs opposite half-edges (slots k and
/// k+2) into the two strands passing through it.
struct Divide {
  int ambient_genus = 0;
  RibbonGraph graph;
  /// Edges of each immersed circle in traversal order; derived from the
  /// strand pairing when left empty.
  std::vector<std::vector<EdgeId>> components;
  /// Dart whose face is painted white by checkerboard_coloring.
  HalfEdgeId front_dart = 0;
};

/// Faces of the divide complement, traced by h -> successor of opposite(h).
std::vector<std::vector<HalfEdgeId>> divide_faces(const Divide& d);

/// Circles of the divide obtained by following strands through double points.
std::vector<std::vector<EdgeId>> strand_components(const RibbonGraph& g);

struct AdmissibilityReport {
  bool structurally_valid = true;
  bool connected = false;
  bool faces_are_disks = false; // V - E + F = 2 - 2g
  bool bipartite_dual = false;
  int vertices = 0, edges = 0, faces = 0;
  std::vector<std::string> problems;

  bool admissible() const { return structurally_valid && connected && faces_are_disks && bipartite_dual; }
};

AdmissibilityReport check_admissible(const Divide& d);

struct Coloring {
  std::vector<std::vector<HalfEdgeId>> faces;
  std::vector<int> black; // 0 white, 1 black, per face

  int white_count() const;
  int black_count() const;
  std::vector<int> faces_of_color(int color) const;
};

class ColoringError : public TopologyError {
public:
  ColoringError(const std::string& what, std::vector<int> odd_cycle)
      : TopologyError(what), odd_cycle_(std::move(odd_cycle)) {}
  /// Face indices around a cycle of odd length in the dual graph.
  const std::vector<int>& odd_cycle() const { return odd_cycle_; }

private:
  std::vector<int> odd_cycle_;
};

/// Two-colouring of the faces with the front face white. Throws
/// ColoringError when the dual graph has an odd cycle.
Coloring checkerboard_coloring(const Divide& d);

/// The necklace of 2g+2 circles, consecutive ones meeting once.
Divide standard_divide(int genus);

struct MorseData {
  int index0 = 0, index1 = 0, index2 = 0;
  bool operator==(const MorseData&) const = default;
};

MorseData morse_data(const Divide& d, const Coloring& c);

/// Plain text: "genus N" then one "v <id> <end> <end> <end> <end>" line per
/// double point, ends written as <edge>+ (edge leaves here) or <edge>-
/// (edge arrives here), 1-based edge ids, in rotation order. "#" comments.
Divide parse_divide_text(const std::string& text);
std::string divide_to_text(const Divide& d);

} // namespace lf
