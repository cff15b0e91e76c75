#include "doctest.h"

#include "lfforge/divide.h"
#include "lfforge/io.h"
#include "oracles.h"

using namespace lf;

namespace {

std::vector<std::pair<int, int>> face_adjacency(const Divide& d, const std::vector<std::vector<HalfEdgeId>>& faces) {
  std::vector<int> face_of(d.graph.half_edge_count());
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    for (HalfEdgeId h : faces[i]) face_of[h] = i;
  std::vector<std::pair<int, int>> adj;
  for (EdgeId e = 0; e < d.graph.edge_count(); ++e) adj.push_back({face_of[tail_half(e)], face_of[head_half(e)]});
  return adj;
}

// Meridian and longitude of the torus meeting once: the single face borders
// itself across every edge.
Divide torus_cross() {
  Divide d;
  d.ambient_genus = 1;
  d.graph = RibbonGraph({{0, 2, 1, 3}}, {false, false});
  return d;
}

} // namespace

TEST_CASE("standard divide counts for g = 0..8") {
  for (int g = 0; g <= 8; ++g) {
    Divide d = standard_divide(g);
    auto r = check_admissible(d);
    CAPTURE(g);
    CHECK(r.admissible());
    CHECK(r.vertices == 2 * g + 2);
    CHECK(r.edges == 4 * g + 4);
    CHECK(r.faces == 4);
    CHECK(r.vertices - r.edges + r.faces == 2 - 2 * g);
    CHECK(d.components.size() == static_cast<size_t>(2 * g + 2));
    auto col = checkerboard_coloring(d);
    CHECK(col.white_count() == 2);
    CHECK(col.black_count() == 2);
    auto m = morse_data(d, col);
    CHECK(m == MorseData{2, 2 * g + 2, 2});
    CHECK(m.index0 - m.index1 + m.index2 == 2 - 2 * g);
  }
}

TEST_CASE("colouring matches a brute-force search") {
  for (int g = 0; g <= 4; ++g) {
    Divide d = standard_divide(g);
    auto col = checkerboard_coloring(d);
    auto adj = face_adjacency(d, col.faces);
    // Exactly two proper colourings (one up to swapping colours).
    CHECK(oracle::proper_two_colourings(static_cast<int>(col.faces.size()), adj) == 2);
    for (auto [x, y] : adj) CHECK(col.black[x] != col.black[y]);
    // The face holding the front dart is white.
    for (size_t i = 0; i < col.faces.size(); ++i)
      for (HalfEdgeId h : col.faces[i])
        if (h == d.front_dart) CHECK(col.black[i] == 0);
  }
}

TEST_CASE("meridian plus longitude admits no colouring") {
  Divide d = torus_cross();
  auto faces = divide_faces(d);
  CHECK(oracle::proper_two_colourings(static_cast<int>(faces.size()), face_adjacency(d, faces)) == 0);
  auto r = check_admissible(d);
  CHECK(r.connected);
  CHECK(r.faces_are_disks);
  CHECK_FALSE(r.bipartite_dual);
  try {
    checkerboard_coloring(d);
    FAIL("colouring should fail");
  } catch (const ColoringError& e) {
    CHECK(e.odd_cycle().size() % 2 == 1);
  }
}

TEST_CASE("two disjoint circles are not admissible") {
  // Each circle drawn as a figure-eight so every vertex stays 4-valent.
  Divide d;
  d.ambient_genus = 0;
  d.graph = RibbonGraph({{0, 2, 1, 3}, {4, 6, 5, 7}}, std::vector<bool>(4, false));
  auto r = check_admissible(d);
  CHECK_FALSE(r.connected);
  CHECK_FALSE(r.admissible());
}

TEST_CASE("structural problems are reported") {
  Divide d;
  d.ambient_genus = 0;
  d.graph = RibbonGraph({{0, 1}}, {false});
  auto r = check_admissible(d);
  CHECK_FALSE(r.structurally_valid);
  CHECK_FALSE(r.problems.empty());
}

TEST_CASE("text format round trip") {
  Divide d = standard_divide(2);
  std::string text = divide_to_text(d);
  Divide back = parse_divide_text(text);
  CHECK(back.ambient_genus == 2);
  CHECK(back.graph == d.graph);
  CHECK(back.components == d.components);
  CHECK(check_admissible(back).admissible());
  CHECK_THROWS_AS(parse_divide_text("v 0 1+ 1- 2+ 2-\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divide_text("genus 0\nv 0 1+ 1-\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_divide_text("genus 0\nw 0\n"), std::invalid_argument);
}

TEST_CASE("text format without component lines derives circles from strands") {
  Divide d = parse_divide_text("# g = 1 necklace\ngenus 1\n"
                               "v 0 1- 3+ 2- 4+\nv 1 3- 5+ 4- 6+\nv 2 5- 7+ 6- 8+\nv 3 7- 1+ 8- 2+\n");
  CHECK(d.components.size() == 4);
  CHECK(check_admissible(d).admissible());
}

TEST_CASE("JSON round trip") {
  Divide d = standard_divide(1);
  auto j = to_json(d);
  CHECK(j["schema"] == kDivideSchema);
  CHECK(j["vertices"][0]["strands"].size() == 2);
  Divide back = divide_from_json(j);
  CHECK(back.graph == d.graph);
  CHECK(back.components == d.components);
}
