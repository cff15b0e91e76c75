#pragma once

#include "lfforge/divide.h"
#include "lfforge/fibration.h"

#include <string>
#include <vector>

namespace lf {

/// Annuli plumbed at squares. Squares are numbered; each lists the
/// horizontal ("first") and vertical ("second") annulus it joins and a local
/// orientation sign. Each annulus lists its squares in cyclic order along
/// its core.
struct PlumbingPattern {
  struct Square {
    int first = 0;
    int second = 0;
    int sign = 1;
    bool operator==(const Square&) const = default;
  };
  std::vector<std::string> first_names, second_names;
  std::vector<Square> squares;
  std::vector<std::vector<int>> first_order, second_order;

  bool operator==(const PlumbingPattern&) const = default;
};

/// Throws std::invalid_argument when squares and orders disagree.
void check_pattern(const PlumbingPattern& p);

/// Two horizontal annuli A1, A2 and 2g+2 vertical ones B1.., every vertical
/// annulus crossing both horizontal ones once, all squares positive.
PlumbingPattern johns_pattern(int genus);

struct Realization {
  RibbonGraph fiber;
  std::vector<Curve> first;  // horizontal cores
  std::vector<Curve> second; // vertical cores
};

/// One vertex per square and one edge per stretch of annulus between
/// consecutive squares; the cores become graph cycles.
Realization realize_plumbing(const PlumbingPattern& p);

/// Oriented resolution of every crossing of the first multicurve with the
/// second one. Second-family curves whose crossings are all negative are
/// reversed first; overlapping stretches are resolved as one crossing.
/// Curves without crossings are passed through. Output names are
/// `prefix1`, `prefix2`, ... ordered by smallest edge.
std::vector<Curve> simultaneous_surgery(const RibbonGraph& fiber, const std::vector<Curve>& first,
                                        const std::vector<Curve>& second, const std::string& prefix = "c");

/// Fails with TopologyError unless the fiber is a genus-one surface with
/// 4g+4 boundary components.
void check_fiber_gate(const RibbonGraph& fiber, int genus, const std::string& who);

LefschetzFibration johns_fibration(int genus);

struct ACampoFiber {
  RibbonGraph fiber;
  std::vector<Curve> roundabouts; // one per double point, named beta1..
  /// Edge of the roundabout arc at (double point v, slot k) is 4v+k; band
  /// edge of divide edge e is 4V+e.
  int vertex_count = 0;
};

/// Roundabout per double point and a half-twisted band per divide edge.
/// Roundabout cores follow the arcs in slot order.
ACampoFiber acampo_fiber(const Divide& d);

struct DivideCycles {
  std::vector<Curve> white, roundabouts, black;
};

/// Boundary curves of the white faces, roundabout cores, boundary curves of
/// the black faces. Roundabouts are reversed where needed so the white
/// curves cross them positively.
DivideCycles divide_vanishing_cycles(const Divide& d, const Coloring& col, const ACampoFiber& f);

LefschetzFibration ishikawa_fibration(int genus);

/// Annulus with the square of the twist along its core.
LefschetzFibration sphere_planar_fibration();

} // namespace lf
