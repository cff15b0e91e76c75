#pragma once

#include "lfforge/builders.h"
#include "lfforge/equivalence.h"
#include "lfforge/smith.h"

#include "json.hpp"

#include <string>

namespace lf {

using json = nlohmann::json;

inline constexpr const char* kRibbonGraphSchema = "lf-forge/ribbon-graph/1";
inline constexpr const char* kFibrationSchema = "lf-forge/fibration/1";
inline constexpr const char* kDivideSchema = "lf-forge/divide/1";
inline constexpr const char* kPatternSchema = "lf-forge/plumbing-pattern/1";

// Edge ids are 1-based in documents so walks can be written as signed edge
// ids; vertices and half-edges are 0-based.

json to_json(const RibbonGraph& g, const std::vector<Curve>& curves = {});
RibbonGraph ribbon_graph_from_json(const json& j);
std::vector<Curve> curves_from_json(const json& j);

json to_json(const LefschetzFibration& lf);
LefschetzFibration fibration_from_json(const json& j);

json to_json(const Divide& d);
Divide divide_from_json(const json& j);

json to_json(const PlumbingPattern& p);
json to_json(const FinAbGroup& g);

/// Graphviz rendering; edges labeled with their id, twisted ones marked.
std::string to_dot(const RibbonGraph& g, const std::string& name = "fiber");

} // namespace lf
