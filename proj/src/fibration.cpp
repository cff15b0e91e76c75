#include "lfforge/fibration.h"

#include <stdexcept>

namespace lf {

std::string family_name(CycleFamily f) {
  switch (f) {
  case CycleFamily::first: return "first";
  case CycleFamily::second: return "second";
  case CycleFamily::resolved: return "resolved";
  case CycleFamily::other: return "other";
  }
  return "other";
}

CycleFamily family_from_name(const std::string& s) {
  if (s == "first") return CycleFamily::first;
  if (s == "second") return CycleFamily::second;
  if (s == "resolved") return CycleFamily::resolved;
  if (s == "other") return CycleFamily::other;
  throw std::invalid_argument("unknown cycle family '" + s + "'");
}

std::vector<Curve> LefschetzFibration::word_curves() const {
  std::vector<Curve> out;
  out.reserve(word.size());
  for (int i : word) out.push_back(cycles.at(i));
  return out;
}

int LefschetzFibration::cycle_index(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    if (cycles[i].name == name) return i;
  return -1;
}

std::vector<Curve> LefschetzFibration::family_cycles(CycleFamily f) const {
  std::vector<Curve> out;
  std::vector<char> seen(cycles.size(), 0);
  for (int i : word)
    if (!seen[i] && families.at(i) == f) {
      seen[i] = 1;
      out.push_back(cycles[i]);
    }
  return out;
}

void validate(const LefschetzFibration& lf) {
  if (lf.families.size() != lf.cycles.size()) throw TopologyError("cycle family list does not match cycles");
  if (!is_connected(lf.fiber)) throw TopologyError("fiber is disconnected");
  if (!orientation_signs(lf.fiber)) throw TopologyError("fiber is not orientable");
  for (const auto& c : lf.cycles) {
    check_closed_walk(lf.fiber, c.darts);
    if (!is_edge_simple(c.darts)) throw TopologyError("cycle " + c.name + " uses an edge twice");
  }
  for (int i : lf.word)
    if (i < 0 || i >= static_cast<int>(lf.cycles.size())) throw TopologyError("word refers to a missing cycle");
}

} // namespace lf
