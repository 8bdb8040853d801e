#include <catch2/catch.hpp>
#include <random>

#include "qak/builder.hpp"
#include "qak/canonical.hpp"
#include "qak/invariants.hpp"
#include "qak/pdcode.hpp"
#include "qak/simplify.hpp"
#include "support/random_diagrams.hpp"

using namespace qak;
using namespace qak::testsupport;

static TemplateLibrary& lib() {
  static TemplateLibrary l;
  return l;
}

TEST_CASE("kinks and poked pairs vanish") {
  // 1-crossing unknot: a kink
  PlanarDiagram kink({PlanarDiagram::Crossing{{0, 0, 1, 1}}}, 0);
  auto r = simplify(kink);
  CHECK(r.diagram.size() == 0);
  CHECK(r.diagram.free_loops() == 1);
  CHECK(r.log.size() == 1);

  // R2 pair from poking a 0-crossing loop twice cannot be built directly;
  // poke a trefoil edge instead and check the pair reduces back
  PlanarDiagram t = build_conway("3", lib());
  std::mt19937 rng(7);
  PlanarDiagram poked = random_insertion(t, rng);
  auto s = simplify(poked);
  CHECK(s.diagram.size() == 3);
}

TEST_CASE("move log replays to the simplified diagram") {
  std::mt19937 rng(11);
  for (const char* base : {"3", "22", "3,21,-2", "-20:-20:-20"}) {
    PlanarDiagram d = build_conway(base, lib());
    for (int trial = 0; trial < 10; ++trial) {
      PlanarDiagram messy = d;
      for (int k = 0; k < 3; ++k) messy = random_insertion(messy, rng);
      auto res = simplify(messy);
      PlanarDiagram replayed = replay(messy, res.log);
      CHECK(replayed == res.diagram);
      CHECK(res.diagram.size() <= messy.size());
    }
  }
}

TEST_CASE("simplify is idempotent") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    PlanarDiagram d = random_diagram(8, rng, lib());
    auto once = simplify(d);
    auto twice = simplify(once.diagram);
    CHECK(twice.diagram.size() == once.diagram.size());
  }
}

TEST_CASE("smoothing 8_20 simplifies below 7 crossings") {
  PlanarDiagram d = build_conway("3,21,-2", lib());
  bool found = false;
  for (int c = 0; c < d.size(); ++c)
    for (Resolution r : {Resolution::zero, Resolution::infinity}) {
      auto s = simplify(d.smooth(c, r));
      if (s.diagram.size() < 7) found = true;
      PlanarDiagram replayed = replay(d.smooth(c, r), s.log);
      CHECK(replayed == s.diagram);
    }
  CHECK(found);
}

TEST_CASE("determinant and signature survive simplification and insertions") {
  std::mt19937 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    PlanarDiagram d = random_diagram(8, rng, lib());
    if (!d.is_connected()) continue;
    long long det = determinant(d);
    int sig = signature(d);
    PlanarDiagram messy = d;
    for (int k = 0; k < 3; ++k) messy = random_insertion(messy, rng);
    REQUIRE(messy.is_connected());
    CHECK(determinant(messy) == det);
    CHECK(signature(messy) == sig);
    auto sr = simplify(messy);
    CHECK(determinant(sr.diagram) == det);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("r3 alone preserves invariants") {
  // alternating diagrams admit no slide, so look among the non-alternating
  // polyhedral fixtures for triangles with a strand fully over
  int tested = 0;
  for (const char* s : {"6*2.21.-20.-1.-2", "8*-20", "2.21.-2.2", ".2.(-21,2).2", "-3:2:2"}) {
    PlanarDiagram d = build_conway(s, lib());
    long long det = determinant(d);
    LaurentPoly j = jones(d);
    for (auto& mv : find_r3(d)) {
      PlanarDiagram slid = apply_r3(d, mv);
      CHECK(slid.size() == d.size());
      CHECK(determinant(slid) == det);
      CHECK(jones(slid) == j);
      ++tested;
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("canonical codes are relabeling invariant") {
  std::mt19937 rng(23);
  for (const char* s : {"3", "22", "3,21,-2", "8*-20"}) {
    PlanarDiagram d = build_conway(s, lib());
    std::string code = canonical_code(d);
    for (int trial = 0; trial < 50; ++trial) {
      PlanarDiagram rel = random_relabel(d, rng);
      CHECK(canonical_code(rel) == code);
    }
  }
}

TEST_CASE("canonical codes separate chirality and knot type") {
  PlanarDiagram t = build_conway("3", lib());
  CHECK(canonical_code(t) != canonical_code(t.mirror()));
  CHECK(canonical_code(t) != canonical_code(build_conway("22", lib())));
  // two independent builds of the same expression agree
  CHECK(canonical_code(build_conway("3,21,-2", lib())) ==
        canonical_code(build_conway("3,21,-2", lib())));
  CHECK(canonical_code(parse_pd(to_pd(t))) == canonical_code(t));
}

TEST_CASE("random insertions preserve canonical class after simplify") {
  std::mt19937 rng(29);
  PlanarDiagram t = build_conway("3", lib());
  std::string code = canonical_code(t);
  for (int trial = 0; trial < 20; ++trial) {
    PlanarDiagram messy = t;
    for (int k = 0; k < 2; ++k) messy = random_insertion(messy, rng);
    auto s = simplify(messy);
    CHECK(canonical_code(s.diagram) == code);
  }
}
