#include "lfforge/report.h"

#include <algorithm>
#include <cstdlib>

namespace lf {

namespace {

std::string fiber_text(const SurfaceInvariants& s) {
  return "chi=" + std::to_string(s.euler) + " b=" + std::to_string(s.boundary_components) +
         " h=" + (s.genus ? std::to_string(*s.genus) : std::string("non-orientable"));
}

void add(std::vector<CheckResult>& checks, const std::string& name, const std::string& expected,
         const std::string& got) {
  checks.push_back({name, expected, got, expected == got});
}

ClassVector sum_classes(const HomologyBasis& H, const std::vector<Curve>& cs) {
  ClassVector s(H.rank(), 0);
  for (const auto& c : cs) {
    auto x = H.class_of(c.darts);
    for (int i = 0; i < H.rank(); ++i) s[i] += x[i];
  }
  return s;
}

} // namespace

bool Certificate::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> Certificate::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name);
  return out;
}

Certificate certify(const LefschetzFibration& lf) {
  Certificate c;
  c.construction = lf.construction;
  c.genus = lf.genus;
  c.fiber = surface_invariants(lf.fiber);
  c.cycles = lf.word_length();
  c.chi_total = total_space_euler(lf);
  auto th = total_space_homology(lf);
  c.h1 = th.h1;
  c.h2 = th.h2;
  c.boundary_h1 = open_book_h1(boundary_open_book(lf));

  const int g = lf.genus;
  const bool planar = lf.construction == "sphere";
  if (planar || lf.construction == "johns" || lf.construction == "ishikawa") {
    SurfaceInvariants want = planar ? SurfaceInvariants{0, 2, true, 0} : SurfaceInvariants{-4 * g - 4, 4 * g + 4, true, 1};
    add(c.checks, "fiber", fiber_text(want), fiber_text(c.fiber));
    add(c.checks, "word length", std::to_string(planar ? 2 : 2 * g + 6), std::to_string(c.cycles));
    add(c.checks, "total space euler characteristic", std::to_string(2 - 2 * g), std::to_string(c.chi_total));
    add(c.checks, "total space H1", FinAbGroup::free(2 * g).to_string(), c.h1.to_string());
    add(c.checks, "total space H2", FinAbGroup::free(1).to_string(), c.h2.to_string());
    add(c.checks, "boundary H1", FinAbGroup::with_cyclic(2 * g, 2 - 2 * g).to_string(), c.boundary_h1.to_string());
  }

  auto first = lf.family_cycles(CycleFamily::first);
  auto second = lf.family_cycles(CycleFamily::second);
  auto resolved = lf.family_cycles(CycleFamily::resolved);
  if (!first.empty() && !second.empty() && !resolved.empty()) {
    auto out = simultaneous_surgery(lf.fiber, first, second, "r");
    add(c.checks, "resolution components", std::to_string(resolved.size()), std::to_string(out.size()));
    HomologyBasis H(lf.fiber);
    auto before = sum_classes(H, first), extra = sum_classes(H, second), after = sum_classes(H, out);
    for (int i = 0; i < H.rank(); ++i) before[i] += extra[i];
    add(c.checks, "resolution conserves homology", "true", before == after ? "true" : "false");
    int matched = 0;
    for (const auto& r : resolved)
      for (const auto& o : out)
        if (same_cycle(o.darts, r.darts, false)) {
          ++matched;
          break;
        }
    add(c.checks, "resolution reproduces resolved cycles", std::to_string(resolved.size()), std::to_string(matched));
  }
  return c;
}

json to_json(const Certificate& c) {
  json j;
  j["schema"] = "lf-forge/certificate/1";
  j["construction"] = c.construction;
  j["genus"] = c.genus;
  j["fiber"] = {{"chi", c.fiber.euler},
                {"b", c.fiber.boundary_components},
                {"h", c.fiber.genus ? json(*c.fiber.genus) : json(nullptr)}};
  j["cycles"] = c.cycles;
  j["chi_total"] = c.chi_total;
  j["H1"] = to_json(c.h1);
  j["H2"] = to_json(c.h2);
  j["boundary_H1"] = to_json(c.boundary_h1);
  json checks = json::array();
  for (const auto& k : c.checks)
    checks.push_back({{"name", k.name}, {"expected", k.expected}, {"got", k.got}, {"pass", k.pass}});
  j["checks"] = checks;
  j["pass"] = c.all_pass();
  return j;
}

json iso_certificate(int genus, const LefschetzFibration& a, const LefschetzFibration& b, const IsoSearch& r) {
  json j;
  j["schema"] = "lf-forge/isomorphism/1";
  j["genus"] = genus;
  j["source"] = a.construction + ":" + std::to_string(a.genus);
  j["target"] = b.construction + ":" + std::to_string(b.genus);
  j["found"] = r.all_pass();
  json cmap = json::object();
  if (r.iso)
    for (size_t i = 0; i < r.iso->cycle_map.size(); ++i) cmap[a.cycles[i].name] = b.cycles[r.iso->cycle_map[i]].name;
  j["cycle_map"] = cmap;
  j["orientation_preserving"] = r.iso ? json(r.iso->orientation_preserving) : json(nullptr);
  json checks = json::array();
  for (const auto& k : r.checks)
    checks.push_back({{"name", k.name}, {"expected", k.expected}, {"got", k.got}, {"pass", k.pass}});
  j["checks"] = checks;
  return j;
}

} // namespace lf
