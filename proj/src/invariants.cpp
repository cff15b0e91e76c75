#include "lfforge/invariants.h"

namespace lf {

int total_space_euler(const LefschetzFibration& lf) {
  return lf.fiber.vertex_count() - lf.fiber.edge_count() + lf.word_length();
}

TotalSpaceHomology total_space_homology(const LefschetzFibration& lf) {
  HomologyBasis H(lf.fiber);
  IntMatrix rows;
  for (int k = 0; k < lf.word_length(); ++k) rows.push_back(H.class_of(lf.letter(k).darts));
  return {cokernel_of_rows(rows, H.rank()), FinAbGroup::free(kernel_rank_of_rows(rows, H.rank()))};
}

OpenBook boundary_open_book(const LefschetzFibration& lf) { return {lf.fiber, lf.word_curves()}; }

CombPath apply_monodromy(const HomologyBasis& H, const std::vector<Curve>& word, const CombPath& arc) {
  CombPath p = arc;
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = dehn_twist_on_path(H, *it, p);
  return p;
}

IntMatrix open_book_relations(const OpenBook& ob) {
  HomologyBasis H(ob.page);
  IntMatrix rows;
  for (const auto& arc : cutting_arc_system(H)) rows.push_back(arc_difference_class(H, apply_monodromy(H, ob.word, arc), arc));
  return rows;
}

FinAbGroup open_book_h1(const OpenBook& ob) {
  HomologyBasis H(ob.page);
  return cokernel_of_rows(open_book_relations(ob), H.rank());
}

} // namespace lf
