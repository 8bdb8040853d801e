#include <catch2/catch.hpp>

#include "qak/invariants.hpp"
#include "qak/pdcode.hpp"

using namespace qak;

static const char* kLeftTrefoilPD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
static const char* kHopfPD = "X[1,4,2,3] X[3,2,4,1]";

static PlanarDiagram unknot0() { return PlanarDiagram({}, 1); }

TEST_CASE("determinants of the smallest diagrams") {
  CHECK(determinant(unknot0()) == 1);
  PlanarDiagram t = parse_pd(kLeftTrefoilPD);
  CHECK(determinant(t) == 3);
  CHECK(determinant(t.mirror()) == 3);
  PlanarDiagram h = parse_pd(kHopfPD);
  CHECK(determinant(h) == 2);
  // split: det 0
  PlanarDiagram two(std::vector<PlanarDiagram::Crossing>{}, 2);
  CHECK(determinant(two) == 0);
}

TEST_CASE("goeritz matrix shapes") {
  auto g0 = goeritz(unknot0());
  CHECK(g0.matrix.empty());
  CHECK(g0.mu == 0);
  PlanarDiagram t = parse_pd(kLeftTrefoilPD);
  auto g = goeritz(t);
  // one checkerboard color has 2 faces, the other 3
  CHECK((g.matrix.size() == 1 || g.matrix.size() == 2));
}

TEST_CASE("signature convention: all-positive trefoil is -2") {
  PlanarDiagram t = parse_pd(kLeftTrefoilPD);
  auto o = t.orient();
  int common = o.sign[0];
  PlanarDiagram pos = common > 0 ? t : t.mirror();
  PlanarDiagram neg = common > 0 ? t.mirror() : t;
  CHECK(signature(pos) == -2);
  CHECK(signature(neg) == 2);
  CHECK(signature(unknot0()) == 0);
}

TEST_CASE("signature of the positive hopf link is -1") {
  PlanarDiagram h = parse_pd(kHopfPD);
  auto o = h.orient();
  PlanarDiagram pos = o.sign[0] > 0 ? h : h.mirror();
  CHECK(signature(pos) == -1);
}

TEST_CASE("figure eight: determinant 5, signature 0") {
  PlanarDiagram f = parse_dt("4 6 8 2");
  CHECK(determinant(f) == 5);
  CHECK(signature(f) == 0);
}

TEST_CASE("bracket and jones of tiny diagrams") {
  CHECK(kauffman_bracket(unknot0()) == LaurentPoly::monomial(1, 0));
  LaurentPoly ju = jones(unknot0());
  LaurentPoly expect;
  expect.add(1, 1);
  expect.add(-1, 1);
  CHECK(ju == expect);

  CHECK(jones_determinant(parse_pd(kHopfPD)) == 2);
  CHECK(jones_determinant(parse_pd(kLeftTrefoilPD)) == 3);
  CHECK(jones_determinant(parse_dt("4 6 8 2")) == 5);
}

TEST_CASE("determinant agrees with the jones evaluation") {
  for (const char* code : {kLeftTrefoilPD, kHopfPD}) {
    PlanarDiagram d = parse_pd(code);
    CHECK(determinant(d) == jones_determinant(d));
    for (int c = 0; c < d.size(); ++c)
      for (Resolution r : {Resolution::zero, Resolution::infinity}) {
        PlanarDiagram s = d.smooth(c, r);
        if (s.is_connected()) CHECK(determinant(s) == jones_determinant(s));
      }
  }
}

TEST_CASE("determinant additivity on the trefoil") {
  PlanarDiagram t = parse_pd(kLeftTrefoilPD);
  for (int c = 0; c < 3; ++c) {
    long long d0 = determinant(t.smooth(c, Resolution::zero));
    long long d1 = determinant(t.smooth(c, Resolution::infinity));
    CHECK(d0 + d1 == 3);
    CHECK(std::min(d0, d1) == 1);
  }
}

TEST_CASE("signature flips under mirror") {
  for (const char* code : {kLeftTrefoilPD, kHopfPD}) {
    PlanarDiagram d = parse_pd(code);
    CHECK(signature(d.mirror()) == -signature(d));
    CHECK(determinant(d.mirror()) == determinant(d));
  }
}
