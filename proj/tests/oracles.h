#pragma once

// Independent reference computations used by the tests. None of these call
// the path-level machinery they are compared against.

#include "lfforge/homology.h"
#include "lfforge/smith.h"

#include <cstdint>
#include <vector>

namespace oracle {

/// H1 of the circle bundle over the genus-g surface with Euler number
/// +-(2-2g), from the Gysin sequence: Z^{2g} + Z/|2-2g| (Z/0 read as Z).
inline lf::FinAbGroup unit_tangent_h1(int g) { return lf::FinAbGroup::with_cyclic(2 * g, 2 - 2 * g); }

/// DT*Sigma_g retracts to Sigma_g.
inline lf::FinAbGroup disk_bundle_h1(int g) { return lf::FinAbGroup::free(2 * g); }
inline lf::FinAbGroup disk_bundle_h2() { return lf::FinAbGroup::free(1); }
inline int disk_bundle_euler(int g) { return 2 - 2 * g; }

/// Variation route to the open-book relations: each twist shifts the image
/// of the arc dual to basis edge e by (<c, arc> + <c, z>) c, where <c, arc>
/// is minus the coefficient of e in c. Twists are applied last letter first.
inline lf::IntMatrix variation_relations(const lf::HomologyBasis& H, const std::vector<lf::ClassVector>& word) {
  const int n = H.rank();
  lf::IntMatrix rows;
  for (int e = 0; e < n; ++e) {
    lf::ClassVector z(n, 0);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      std::int64_t k = -(*it)[e] + H.pairing(*it, z);
      for (int i = 0; i < n; ++i) z[i] += k * (*it)[i];
    }
    rows.push_back(z);
  }
  return rows;
}

/// Tries every 2-colouring of the faces; returns the number of proper ones.
inline int proper_two_colourings(int faces, const std::vector<std::pair<int, int>>& adjacent) {
  int count = 0;
  for (std::uint32_t mask = 0; mask < (1u << faces); ++mask) {
    bool ok = true;
    for (auto [x, y] : adjacent) ok = ok && (((mask >> x) & 1) != ((mask >> y) & 1));
    count += ok;
  }
  return count;
}

/// Determinant of a small integer matrix by cofactor expansion.
inline std::int64_t determinant(const lf::IntMatrix& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t d = 0;
  for (size_t c = 0; c < n; ++c) {
    if (!m[0][c]) continue;
    lf::IntMatrix minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += ((c % 2) ? -1 : 1) * m[0][c] * determinant(minor);
  }
  return d;
}

} // namespace oracle
