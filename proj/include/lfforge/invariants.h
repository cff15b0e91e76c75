#pragma once

#include "lfforge/fibration.h"
#include "lfforge/smith.h"

namespace lf {

/// Euler characteristic of the total space: one 2-handle per word letter on
/// top of fiber times disk.
int total_space_euler(const LefschetzFibration& lf);

struct TotalSpaceHomology {
  FinAbGroup h1, h2;
};

/// H1 = cokernel and H2 = kernel of the map sending each word letter to the
/// class of its curve.
TotalSpaceHomology total_space_homology(const LefschetzFibration& lf);

/// Page plus monodromy word; the boundary of the fibration's total space.
struct OpenBook {
  RibbonGraph page;
  std::vector<Curve> word; // composition order, last letter acts first
};

OpenBook boundary_open_book(const LefschetzFibration& lf);

/// Image of an arc under the monodromy.
CombPath apply_monodromy(const HomologyBasis& H, const std::vector<Curve>& word, const CombPath& arc);

/// H1 of the open book: page homology modulo [phi(arc) - arc] for every
/// cutting arc.
FinAbGroup open_book_h1(const OpenBook& ob);

/// The relation rows used by open_book_h1, one per cutting arc.
IntMatrix open_book_relations(const OpenBook& ob);

} // namespace lf
