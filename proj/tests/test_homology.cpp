#include <catch2/catch.hpp>
#include <random>

#include "qak/builder.hpp"
#include "qak/homology.hpp"
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

static LaurentPoly euler_of(const RankTable& t) {
  LaurentPoly p;
  for (auto& [ij, r] : t.rank) p.add(ij.second, (ij.first % 2 == 0 ? 1 : -1) * r);
  return p;
}

TEST_CASE("unknot homology") {
  PlanarDiagram u({}, 1);
  for (Coeff c : {Coeff::f2, Coeff::rational}) {
    RankTable t = khovanov_ranks(u, c);
    REQUIRE(t.rank.size() == 2);
    CHECK(t.rank.at({0, 1}) == 1);
    CHECK(t.rank.at({0, -1}) == 1);
  }
  auto v = thinness(khovanov_ranks(u, Coeff::f2), 0);
  CHECK(v.thin);
  CHECK(v.diagonals == std::set<int>{-1, 1});
}

TEST_CASE("trefoil homology matches the standard table") {
  PlanarDiagram t = build_conway("3", lib());
  auto o = t.orient();
  PlanarDiagram pos = o.sign[0] > 0 ? t : t.mirror();  // right-handed

  RankTable q = khovanov_ranks(pos, Coeff::rational);
  std::map<std::pair<int, int>, long long> expect = {
      {{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{3, 9}, 1}};
  CHECK(q.rank == expect);

  RankTable f2 = khovanov_ranks(pos, Coeff::f2);
  std::map<std::pair<int, int>, long long> expect2 = {
      {{0, 1}, 1}, {{0, 3}, 1}, {{2, 5}, 1}, {{2, 7}, 1}, {{3, 7}, 1}, {{3, 9}, 1}};
  CHECK(f2.rank == expect2);

  CHECK(signature(pos) == -2);
  CHECK(thinness(f2, -2).thin);
  CHECK(thinness(f2, -2).diagonals == std::set<int>{1, 3});

  // mirror symmetry
  RankTable qm = khovanov_ranks(pos.mirror(), Coeff::rational);
  for (auto& [ij, r] : q.rank) CHECK(qm.rank.at({-ij.first, -ij.second}) == r);
}

TEST_CASE("hopf link homology") {
  PlanarDiagram h = build_conway("2", lib());
  RankTable q = khovanov_ranks(h, Coeff::rational);
  CHECK(q.total() == 4);
  auto v = thinness(khovanov_ranks(h, Coeff::f2), signature(h));
  CHECK(v.thin);
}

TEST_CASE("d squared vanishes") {
  for (const char* s : {"3", "22", "3,21,-2", "3,3,-2", "-20:-20:-20"}) {
    KhComplex kh(build_conway(s, lib()));
    CHECK(d_squared_is_zero(kh));
  }
}

TEST_CASE("graded euler characteristic equals the jones polynomial") {
  for (const char* s : {"3", "22", "2", "3,21,-2", "3,3,-3", "8*-20", "22,22,-2"}) {
    PlanarDiagram d = build_conway(s, lib());
    KhComplex kh(d);
    LaurentPoly j = jones(d);
    CHECK(kh.graded_euler() == j);
    CHECK(euler_of(khovanov_ranks(kh, Coeff::rational)) == j);
  }
}

TEST_CASE("figure eight is thin with the right total rank") {
  PlanarDiagram f = build_conway("22", lib());
  RankTable q = khovanov_ranks(f, Coeff::rational);
  CHECK(q.total() == 6);  // det + 1 for a thin knot
  CHECK(thinness(khovanov_ranks(f, Coeff::f2), 0).thin);
  CHECK(thinness(q, 0).diagonals == std::set<int>{-1, 1});
}

TEST_CASE("field-two rank dominates rational rank by an even difference") {
  for (const char* s : {"3", "22", "3,3,-2", "3,21,-2", "3,3,-3"}) {
    PlanarDiagram d = build_conway(s, lib());
    long long f2 = khovanov_ranks(d, Coeff::f2).total();
    long long q = khovanov_ranks(d, Coeff::rational).total();
    CHECK(f2 >= q);
    CHECK((f2 - q) % 2 == 0);
  }
}

TEST_CASE("thickness verdicts match the paper's small cases") {
  // 8_19 is thick, 8_20 and 8_21 thin; 9_46 thin over F2
  struct Row {
    const char* s;
    bool thin;
  };
  for (auto& r : {Row{"3,3,-2", false}, Row{"3,21,-2", true}, Row{"21,21,-2", true},
                  Row{"3,3,-3", true}, Row{"22,3,-2", false}, Row{"4,3,-3", true}}) {
    PlanarDiagram d = build_conway(r.s, lib());
    auto v = thinness(khovanov_ranks(d, Coeff::f2), signature(d));
    INFO(r.s);
    CHECK(v.thin == r.thin);
    if (!r.thin) CHECK(v.diagonals.size() >= 3);
  }
}

TEST_CASE("alternating fixtures are thin") {
  for (const char* s : {"3", "22", "5", "32", "42", "312", "2112", "62", "3113",
                        "3,3,2", "21,21,2", ".2.2", "8*"}) {
    PlanarDiagram d = build_conway(s, lib());
    auto v = thinness(khovanov_ranks(d, Coeff::f2), signature(d));
    INFO(s);
    CHECK(v.thin);
  }
}

TEST_CASE("rank tables survive reidemeister moves") {
  std::mt19937 rng(31);
  for (const char* s : {"3", "22", "3,3,-2"}) {
    PlanarDiagram d = build_conway(s, lib());
    RankTable base = khovanov_ranks(d, Coeff::f2);
    RankTable baseq = khovanov_ranks(d, Coeff::rational);
    for (int trial = 0; trial < 5; ++trial) {
      PlanarDiagram m = d;
      for (int k = 0; k < 2; ++k) m = random_insertion(m, rng);
      CHECK(khovanov_ranks(m, Coeff::f2).rank == base.rank);
      CHECK(khovanov_ranks(m, Coeff::rational).rank == baseq.rank);
      auto sr = simplify(m);
      CHECK(khovanov_ranks(sr.diagram, Coeff::f2).rank == base.rank);
    }
  }
}
