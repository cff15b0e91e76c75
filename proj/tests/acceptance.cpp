// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lfforge/builders.h"
#include "lfforge/equivalence.h"
#include "lfforge/invariants.h"
#include "oracles.h"
#include "random_surfaces.h"

using namespace lf;

namespace {

constexpr int kMaxGenus = 8;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << what;
      pass = false;
    }
  }
};

ClassVector sum_classes(const HomologyBasis& H, const std::vector<Curve>& cs) {
  ClassVector s(H.rank(), 0);
  for (const auto& c : cs) {
    auto x = H.class_of(c.darts);
    for (int i = 0; i < H.rank(); ++i) s[i] += x[i];
  }
  return s;
}

std::vector<std::string> expected_order(const std::string& first, const std::string& second,
                                        const std::string& resolved, int g) {
  std::vector<std::string> out = {first + "1", first + "2"};
  for (int k = 1; k <= 2 * g + 2; ++k) out.push_back(second + std::to_string(k));
  out.push_back(resolved + "1");
  out.push_back(resolved + "2");
  return out;
}

void fiber_invariants(Outcome& o) {
  for (int g = 0; g <= kMaxGenus; ++g) {
    const SurfaceInvariants want{-4 * g - 4, 4 * g + 4, true, 1};
    o.expect(surface_invariants(johns_fibration(g).fiber) == want, "johns g=" + std::to_string(g));
    o.expect(surface_invariants(ishikawa_fibration(g).fiber) == want, "ishikawa g=" + std::to_string(g));
  }
}

void word_length(Outcome& o) {
  for (int g = 0; g <= kMaxGenus; ++g) {
    for (auto [lf, names] : {std::pair{johns_fibration(g), expected_order("a", "b", "c", g)},
                             std::pair{ishikawa_fibration(g), expected_order("alpha", "beta", "gamma", g)}}) {
      std::vector<std::string> got;
      for (int k = 0; k < lf.word_length(); ++k) got.push_back(lf.letter(k).name);
      o.expect(lf.word_length() == 2 * g + 6 && got == names, lf.construction + " g=" + std::to_string(g));
    }
  }
}

void surgery(Outcome& o) {
  for (int g = 0; g <= kMaxGenus; ++g) {
    for (const auto& lf : {johns_fibration(g), ishikawa_fibration(g)}) {
      const std::string tag = lf.construction + " g=" + std::to_string(g);
      auto a = lf.family_cycles(CycleFamily::first), b = lf.family_cycles(CycleFamily::second);
      auto out = simultaneous_surgery(lf.fiber, a, b);
      o.expect(out.size() == 2, tag + ": component count");
      HomologyBasis H(lf.fiber);
      auto lhs = sum_classes(H, out), ra = sum_classes(H, a), rb = sum_classes(H, b);
      for (int i = 0; i < H.rank(); ++i) ra[i] += rb[i];
      o.expect(lhs == ra, tag + ": homology not conserved");
      if (lf.construction == "ishikawa") {
        auto gamma = lf.family_cycles(CycleFamily::resolved);
        int matched = 0;
        for (const auto& x : out)
          for (const auto& y : gamma) matched += same_cycle(x.darts, y.darts, false);
        o.expect(matched == 2 && gamma.size() == 2, tag + ": outputs differ from face cycles");
      }
    }
  }
}

void total_space(Outcome& o) {
  for (int g = 0; g <= kMaxGenus; ++g) {
    for (const auto& lf : {johns_fibration(g), ishikawa_fibration(g)}) {
      auto h = total_space_homology(lf);
      o.expect(total_space_euler(lf) == oracle::disk_bundle_euler(g) && h.h1 == oracle::disk_bundle_h1(g) &&
                   h.h2 == oracle::disk_bundle_h2(),
               lf.construction + " g=" + std::to_string(g));
    }
  }
}

void boundary(Outcome& o) {
  for (int g = 0; g <= kMaxGenus; ++g) {
    for (const auto& lf : {johns_fibration(g), ishikawa_fibration(g)}) {
      auto got = open_book_h1(boundary_open_book(lf));
      o.expect(got == oracle::unit_tangent_h1(g), lf.construction + " g=" + std::to_string(g) + " got " + got.to_string());
    }
  }
  o.expect(open_book_h1(boundary_open_book(johns_fibration(0))) == FinAbGroup{0, {2}}, "g=0 is not Z/2");
  o.expect(open_book_h1(boundary_open_book(johns_fibration(1))) == FinAbGroup::free(3), "g=1 is not Z^3");
}

void unit_oracles(Outcome& o) {
  auto annulus = [](int n) {
    OpenBook ob{RibbonGraph({{0, 1}}, {false}), {}};
    for (int k = 0; k < n; ++k) ob.word.push_back({"core", {0}});
    return ob;
  };
  o.expect(open_book_h1(annulus(0)) == FinAbGroup::free(1), "annulus, empty word");
  o.expect(open_book_h1(annulus(1)).is_trivial(), "annulus, one twist");
  o.expect(open_book_h1(annulus(2)) == FinAbGroup{0, {2}}, "annulus, two twists");
  OpenBook torus{RibbonGraph({{0, 2, 1, 3}}, {false, false}), {{"a", {0}}, {"b", {2}}}};
  o.expect(open_book_h1(torus).is_trivial(), "punctured torus");
}

void isomorphism(Outcome& o) {
  for (int g = 0; g <= kMaxGenus; ++g) {
    auto j = johns_fibration(g), i = ishikawa_fibration(g);
    auto r = find_isomorphism(j, i);
    const std::string tag = "g=" + std::to_string(g);
    if (!r.iso || !r.all_pass()) {
      o.expect(false, tag + ": not found");
      continue;
    }
    // a_i -> alpha_i, c_k -> gamma_k, b_j -> beta_{j-1} (indices mod 2g+2).
    const auto& m = r.iso->cycle_map;
    const int n = 2 * g + 2;
    auto image = [&](const std::string& name) { return i.cycles[m[j.cycle_index(name)]].name; };
    bool ok = image("a1") == "alpha1" && image("a2") == "alpha2" && image("c1") == "gamma1" && image("c2") == "gamma2";
    for (int k = 1; k <= n; ++k) ok = ok && image("b" + std::to_string(k)) == "beta" + std::to_string((k + n - 2) % n + 1);
    o.expect(ok, tag + ": cycle map");
  }
  auto neg = find_isomorphism(johns_fibration(1), johns_fibration(2));
  o.expect(!neg.iso && !neg.all_pass(), "negative control found an isomorphism");
}

void twist_algebra(Outcome& o) {
  std::mt19937 rng(20261018);
  int cases = 0, attempts = 0, moved = 0;
  while (cases < 1000 && attempts < 20000) {
    ++attempts;
    auto g = randgen::surface(rng, 6, 6);
    auto c = randgen::simple_cycle(g, rng);
    auto w = randgen::closed_walk(g, rng, 10);
    auto v = randgen::closed_walk(g, rng, 10);
    if (c.empty() || w.empty() || v.empty()) continue;
    HomologyBasis H(g);
    ClassVector cc = H.class_of(c), x = H.class_of(w), y = H.class_of(v);
    auto tx = dehn_twist_on_class(H, cc, x), ty = dehn_twist_on_class(H, cc, y);
    const std::string tag = "case " + std::to_string(cases);
    o.expect(H.pairing(tx, ty) == H.pairing(x, y), tag + ": pairing");
    o.expect(dehn_twist_on_class(H, cc, cc) == cc, tag + ": curve class moved");
    auto img = dehn_twist_on_path(H, Curve{"c", c}, Curve{"x", w});
    o.expect(H.class_of(img.darts) == tx, tag + ": path twist disagrees");
    moved += tx != x;
    ++cases;
  }
  o.expect(cases == 1000, "only " + std::to_string(cases) + " cases generated");
  // Guard against a generator that only produces disjoint pairs.
  o.expect(moved >= 200, "only " + std::to_string(moved) + " cases with a nontrivial twist");
}

void divide_suite(Outcome& o) {
  for (int g = 0; g <= kMaxGenus; ++g) {
    const std::string tag = "g=" + std::to_string(g);
    auto d = standard_divide(g);
    auto rep = check_admissible(d);
    o.expect(rep.admissible(), tag + ": not admissible");
    o.expect(rep.vertices == 2 * g + 2 && rep.edges == 4 * g + 4 && rep.faces == 4, tag + ": counts");
    auto m = morse_data(d, checkerboard_coloring(d));
    o.expect(m == MorseData{2, 2 * g + 2, 2}, tag + ": Morse data");
    o.expect(m.index0 - m.index1 + m.index2 == 2 - 2 * g, tag + ": Morse equality");
  }
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"fiber invariants", fiber_invariants},
      {"word length and order", word_length},
      {"simultaneous surgery", surgery},
      {"total space homology", total_space},
      {"boundary homology", boundary},
      {"open book unit oracles", unit_oracles},
      {"johns and ishikawa isomorphic", isomorphism},
      {"twist algebra, 1000 random cases", twist_algebra},
      {"standard divide", divide_suite},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name;
    if (!o.pass) std::cout << " -- " << o.detail.str();
    std::cout << " (" << static_cast<int>(ms) << " ms)\n";
    failures += !o.pass;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures;
}
