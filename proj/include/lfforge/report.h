#pragma once

#include "lfforge/equivalence.h"
#include "lfforge/invariants.h"
#include "lfforge/io.h"

namespace lf {

/// Computed invariants of one fibration plus named checks against the values
/// expected of a fibration on the disk cotangent bundle of the genus-g surface.
struct Certificate {
  std::string construction;
  int genus = 0;
  SurfaceInvariants fiber;
  int cycles = 0;
  int chi_total = 0;
  FinAbGroup h1, h2, boundary_h1;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::vector<std::string> failures() const;
};

Certificate certify(const LefschetzFibration& lf);

json to_json(const Certificate& c);
json iso_certificate(int genus, const LefschetzFibration& a, const LefschetzFibration& b, const IsoSearch& r);

} // namespace lf
