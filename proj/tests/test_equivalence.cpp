#include "doctest.h"

#include "lfforge/builders.h"
#include "lfforge/equivalence.h"

using namespace lf;

TEST_CASE("johns pattern survives the round trip through the fiber") {
  for (int g = 0; g <= 4; ++g) {
    CAPTURE(g);
    auto p = extract_plumbing_pattern(johns_fibration(g));
    CHECK(match_patterns(p, johns_pattern(g)).has_value());
    CHECK(p.squares.size() == static_cast<size_t>(4 * g + 4));
  }
}

TEST_CASE("ishikawa fibration has the johns plumbing pattern") {
  for (int g = 0; g <= 4; ++g) {
    CAPTURE(g);
    auto p = extract_plumbing_pattern(ishikawa_fibration(g));
    CHECK(match_patterns(p, johns_pattern(g)).has_value());
  }
}

TEST_CASE("patterns of different genus do not match") {
  CHECK_FALSE(match_patterns(johns_pattern(1), johns_pattern(2)).has_value());
  auto p = johns_pattern(1);
  p.squares[0].sign = -1;
  CHECK_FALSE(match_patterns(p, johns_pattern(1)).has_value());
}

TEST_CASE("spine of the johns fibration has one vertex per square") {
  auto sp = plumbing_spine(johns_fibration(2));
  CHECK(sp.graph.vertex_count() == 12);
  for (VertexId v = 0; v < sp.graph.vertex_count(); ++v) CHECK(sp.graph.degree(v) == 4);
  CHECK(surface_invariants(sp.graph) == surface_invariants(johns_fibration(2).fiber));
}

TEST_CASE("johns and ishikawa fibrations are isomorphic") {
  for (int g = 0; g <= 8; ++g) {
    CAPTURE(g);
    auto j = johns_fibration(g), i = ishikawa_fibration(g);
    auto r = find_isomorphism(j, i);
    REQUIRE(r.iso.has_value());
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    const auto& m = r.iso->cycle_map;
    CHECK(i.cycles[m[j.cycle_index("a1")]].name == "alpha1");
    CHECK(i.cycles[m[j.cycle_index("a2")]].name == "alpha2");
    // Second-family cores agree up to a cyclic shift of the index.
    const int n = 2 * g + 2;
    for (int k = 1; k <= n; ++k) {
      int expect = (k + n - 2) % n + 1;
      CHECK(i.cycles[m[j.cycle_index("b" + std::to_string(k))]].name == "beta" + std::to_string(expect));
    }
    CHECK(i.cycles[m[j.cycle_index("c1")]].name == "gamma1");
    CHECK(i.cycles[m[j.cycle_index("c2")]].name == "gamma2");
  }
}

TEST_CASE("isomorphism is reflexive and symmetric") {
  auto j = johns_fibration(1), i = ishikawa_fibration(1);
  CHECK(find_isomorphism(j, j).all_pass());
  CHECK(find_isomorphism(i, i).all_pass());
  CHECK(find_isomorphism(i, j).all_pass());
}

TEST_CASE("negative control: different genus") {
  auto r = find_isomorphism(johns_fibration(1), johns_fibration(2));
  CHECK_FALSE(r.iso.has_value());
  CHECK_FALSE(r.all_pass());
  CHECK_FALSE(find_isomorphism(johns_fibration(2), ishikawa_fibration(1)).iso.has_value());
}

TEST_CASE("negative control: same fiber, altered word") {
  auto j = johns_fibration(1);
  auto k = j;
  // Replace c2 by a second copy of c1: the families no longer correspond.
  k.cycles[k.cycle_index("c2")].darts = k.cycles[k.cycle_index("c1")].darts;
  CHECK_FALSE(find_isomorphism(j, k).all_pass());
}
