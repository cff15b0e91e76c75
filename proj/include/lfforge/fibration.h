#pragma once

#include "lfforge/curves.h"

#include <string>
#include <vector>

namespace lf {

/// Role of a vanishing cycle in the plumbing picture: core of a horizontal
/// annulus, core of a vertical annulus, or a component of their resolution.
enum class CycleFamily { first, second, resolved, other };

std::string family_name(CycleFamily f);
CycleFamily family_from_name(const std::string& s);

/// Fiber plus monodromy word of positive Dehn twists. The word is written as
/// a composition of maps: word[0] is the leftmost factor, so the last letter
/// acts first.
struct LefschetzFibration {
  std::string construction; // "johns", "ishikawa", "sphere", or free-form
  int genus = 0;
  RibbonGraph fiber;
  std::vector<Curve> cycles;          // distinct named curves
  std::vector<CycleFamily> families;  // parallel to cycles
  std::vector<int> word;              // indices into cycles

  int word_length() const { return static_cast<int>(word.size()); }
  const Curve& letter(int k) const { return cycles.at(word.at(k)); }
  std::vector<Curve> word_curves() const;
  /// Index into cycles by name, -1 if absent.
  int cycle_index(const std::string& name) const;
  /// Cycles of a family in word order (first occurrence).
  std::vector<Curve> family_cycles(CycleFamily f) const;
};

/// Structural checks: cycles carried by the fiber, reduced, word indices in
/// range, fiber connected and orientable. Throws TopologyError.
void validate(const LefschetzFibration& lf);

} // namespace lf
