#include "doctest.h"

#include "lfforge/builders.h"
#include "lfforge/io.h"
#include "lfforge/report.h"

using namespace lf;

TEST_CASE("ribbon graph JSON round trip") {
  RibbonGraph g({{0, 2, 1, 3}}, {false, true});
  auto j = to_json(g, {{"x", {0, 2}}});
  CHECK(j["schema"] == kRibbonGraphSchema);
  CHECK(ribbon_graph_from_json(j) == g);
  auto cs = curves_from_json(j);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].darts == std::vector<HalfEdgeId>{0, 2});
}

TEST_CASE("fibration JSON round trip") {
  for (const auto& lf : {johns_fibration(2), ishikawa_fibration(1), sphere_planar_fibration()}) {
    auto j = to_json(lf);
    CHECK(j["schema"] == kFibrationSchema);
    auto back = fibration_from_json(j);
    CHECK(back.fiber == lf.fiber);
    CHECK(back.word == lf.word);
    CHECK(back.families == lf.families);
    REQUIRE(back.cycles.size() == lf.cycles.size());
    for (size_t k = 0; k < lf.cycles.size(); ++k) {
      CHECK(back.cycles[k].name == lf.cycles[k].name);
      CHECK(back.cycles[k].darts == lf.cycles[k].darts);
    }
    CHECK(to_json(back) == j);
  }
}

TEST_CASE("fibration JSON rejects bad input") {
  auto j = to_json(johns_fibration(0));
  auto bad = j;
  bad["schema"] = "something/else";
  CHECK_THROWS(fibration_from_json(bad));
  bad = j;
  bad["order"].push_back("nope");
  CHECK_THROWS(fibration_from_json(bad));
  bad = j;
  bad["cycles"][0]["walk"] = json::array({9999});
  CHECK_THROWS(fibration_from_json(bad));
}

TEST_CASE("output is deterministic") {
  CHECK(to_json(johns_fibration(3)).dump() == to_json(johns_fibration(3)).dump());
  CHECK(to_json(ishikawa_fibration(3)).dump() == to_json(ishikawa_fibration(3)).dump());
  CHECK(johns_fibration(4).fiber.fingerprint() == johns_fibration(4).fiber.fingerprint());
}

TEST_CASE("frozen certificate fields") {
  auto c = to_json(certify(johns_fibration(2)));
  CHECK(c["schema"] == "lf-forge/certificate/1");
  CHECK(c["boundary_H1"]["text"] == "Z^4 + Z/2");
  CHECK(c["H1"]["text"] == "Z^4");
  CHECK(c["H2"]["text"] == "Z");
  CHECK(c["chi_total"] == -2);
  auto s = to_json(certify(sphere_planar_fibration()));
  CHECK(s["boundary_H1"]["text"] == "Z/2");
}

TEST_CASE("divide and pattern documents") {
  auto d = standard_divide(1);
  auto j = to_json(d);
  CHECK(j["schema"] == kDivideSchema);
  CHECK(divide_from_json(j).graph == d.graph);
  auto p = to_json(johns_pattern(1));
  CHECK(p["schema"] == kPatternSchema);
  CHECK(p["squares"].size() == 8);
}

TEST_CASE("group JSON") {
  auto j = to_json(FinAbGroup::with_cyclic(4, 2));
  CHECK(j["rank"] == 4);
  CHECK(j["torsion"] == json::array({2}));
  CHECK(j["text"] == "Z^4 + Z/2");
}

TEST_CASE("DOT output lists every edge") {
  RibbonGraph g({{0, 2, 1, 3}}, {false, true});
  auto dot = to_dot(g);
  CHECK(dot.find("graph \"fiber\"") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  CHECK(dot.find("label=\"2 tw\"") != std::string::npos);
}
