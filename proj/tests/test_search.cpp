#include <catch2/catch.hpp>
#include <random>

#include "qak/builder.hpp"
#include "qak/extend.hpp"
#include "qak/pdcode.hpp"
#include "qak/search.hpp"
#include "support/brute_qa.hpp"
#include "support/random_diagrams.hpp"

using namespace qak;
using namespace qak::testsupport;

static TemplateLibrary& lib() {
  static TemplateLibrary l;
  return l;
}

TEST_CASE("unknot and small links certify") {
  PlanarDiagram u({}, 1);
  Verdict v = search_qa(u);
  REQUIRE(v.kind == Verdict::Kind::certified);
  CHECK(v.certificate->unknot_leaf);

  for (const char* s : {"2", "3", "22", "3,21,-2"}) {
    PlanarDiagram d = build_conway(s, lib());
    Verdict w = search_qa(d);
    INFO(s);
    REQUIRE(w.kind == Verdict::Kind::certified);
    CHECK(verify_certificate(d, *w.certificate));
  }
}

TEST_CASE("det_filter behaves on the trefoil and figure eight") {
  PlanarDiagram t = build_conway("3", lib());
  auto f = det_filter(t);
  REQUIRE(f.size() == 3);
  for (auto& e : f) CHECK(std::min(e.det_zero, e.det_infinity) == 1);

  PlanarDiagram f8 = build_conway("22", lib());
  CHECK(det_filter(f8).size() == 4);
}

TEST_CASE("table 2 diagrams exhaust their search space") {
  for (const char* s : {"3,3,-3", "4,3,-3"}) {
    PlanarDiagram d = build_conway(s, lib());
    Verdict v = search_qa(d);
    INFO(s);
    CHECK(v.kind == Verdict::Kind::exhausted);
    CHECK(v.reason == "space explored");
  }
}

TEST_CASE("budget exhaustion is reported as such") {
  PlanarDiagram d = build_conway("-22,22,3", lib());
  SearchOptions opt;
  opt.budget.max_nodes = 10;
  Verdict v = search_qa(d, opt);
  CHECK(v.kind == Verdict::Kind::exhausted);
  CHECK(v.reason.find("budget") == 0);
}

TEST_CASE("homology gate obstructs thick knots") {
  PlanarDiagram d = build_conway("3,3,-2", lib());  // the (3,4) torus knot
  SearchOptions opt;
  opt.homology_gate = true;
  Verdict v = search_qa(d, opt);
  CHECK(v.kind == Verdict::Kind::obstructed);
  CHECK(v.thickness_evidence.size() >= 3);
}

TEST_CASE("certificates replay and tampering is caught") {
  PlanarDiagram d = build_conway("3,21,-2", lib());
  Verdict v = search_qa(d);
  REQUIRE(v.kind == Verdict::Kind::certified);
  REQUIRE(verify_certificate(d, *v.certificate));

  Certificate bad = *v.certificate;
  bad.det_zero += 1;
  CHECK(!verify_certificate(d, bad));

  Certificate leaf = Certificate::leaf({});
  CHECK(!verify_certificate(build_conway("3", lib()), leaf));
}

TEST_CASE("memoized search agrees with the brute-force recursion") {
  std::mt19937 rng(41);
  Memo memo;
  SearchOptions opt;
  opt.memo = &memo;
  int agreements = 0;
  for (int trial = 0; trial < 60; ++trial) {
    PlanarDiagram d = random_diagram(6, rng, lib());
    if (!d.is_connected()) continue;
    bool brute = brute_qa(d);
    Verdict v = search_qa(d, opt);
    REQUIRE(v.kind != Verdict::Kind::obstructed);
    bool fast = v.kind == Verdict::Kind::certified;
    INFO(to_pd(d));
    CHECK(fast == brute);
    if (fast == brute) ++agreements;
    if (fast) CHECK(verify_certificate(d, *v.certificate));
  }
  CHECK(agreements >= 50);
}

TEST_CASE("certificate nodes satisfy determinant additivity") {
  std::function<void(const Certificate&)> walk = [&](const Certificate& c) {
    if (c.unknot_leaf) return;
    CHECK(c.det_total == c.det_zero + c.det_infinity);
    CHECK(c.det_zero >= 1);
    CHECK(c.det_infinity >= 1);
    REQUIRE(c.children.size() == 2);
    walk(c.children[0]);
    walk(c.children[1]);
  };
  for (const char* s : {"3,21,-2", "21,21,-3", "8*-20", "-20:-20:-20"}) {
    Verdict v = search_qa(build_conway(s, lib()));
    REQUIRE(v.kind == Verdict::Kind::certified);
    walk(*v.certificate);
  }
}

TEST_CASE("memo cache round trips through a file") {
  Memo memo;
  SearchOptions opt;
  opt.memo = &memo;
  PlanarDiagram d = build_conway("21,21,-2", lib());
  Verdict v1 = search_qa(d, opt);
  memo.save("/tmp/qak_memo_test.txt");
  Memo memo2;
  memo2.load("/tmp/qak_memo_test.txt");
  CHECK(memo2.size() == memo.size());
  SearchOptions opt2;
  opt2.memo = &memo2;
  Verdict v2 = search_qa(d, opt2);
  CHECK(v1.kind == v2.kind);
}

TEST_CASE("extension of the hopf link gives the trefoil") {
  TangleExpr hopf = parse_conway("2");
  TangleExpr tau = parse_conway("2");
  TangleExpr ext = extend_qa(hopf, CrossingLocator{0, 0}, tau, lib());
  CHECK(ext == TangleExpr::integer(3));
  PlanarDiagram t = build_diagram(ext, lib());
  CHECK(determinant(t) == 3);
  CHECK(canonical_code(t) == canonical_code(build_conway("3", lib())));
  Verdict v = search_qa(t);
  CHECK(v.kind == Verdict::Kind::certified);
}

TEST_CASE("extension conditions reject sign violations with the index") {
  TangleExpr hopf = parse_conway("2");
  CHECK_NOTHROW(extend_qa(hopf, CrossingLocator{0, 0}, parse_conway("21"), lib()));
  try {
    extend_qa(hopf, CrossingLocator{0, 0}, TangleExpr::rational({2, -1}), lib());
    FAIL("expected rejection");
  } catch (const extend_error& e) {
    CHECK(e.failing_index == 2);
  }
  // negative crossing requires negative coefficients
  TangleExpr neg = parse_conway("-2");
  CHECK_NOTHROW(extend_qa(neg, CrossingLocator{0, 0}, parse_conway("-21"), lib()));
  CHECK_THROWS_AS(extend_qa(neg, CrossingLocator{0, 0}, parse_conway("2"), lib()), extend_error);
}

TEST_CASE("extensions grow the determinant and stay quasi-alternating") {
  std::mt19937 rng(43);
  for (const char* s : {"3,21,-2", "21,21,-2", "22"}) {
    TangleExpr base = parse_conway(s);
    PlanarDiagram d0 = build_diagram(base, lib());
    long long det0 = determinant(d0);
    bool qa0 = search_qa(d0).kind == Verdict::Kind::certified;
    // try extending the first crossing of each leaf
    for (int leaf = 0; leaf < 4; ++leaf) {
      TangleExpr ext;
      try {
        int eps = 0;
        {
          // discover the sign by trying +2 then -2
          try {
            ext = extend_qa(base, CrossingLocator{leaf, 0}, parse_conway("2"), lib());
            eps = 1;
          } catch (const extend_error&) {
            ext = extend_qa(base, CrossingLocator{leaf, 0}, parse_conway("-2"), lib());
            eps = -1;
          }
        }
        PlanarDiagram d1 = build_diagram(ext, lib());
        CHECK(determinant(d1) > det0);
        if (qa0) CHECK(search_qa(d1).kind == Verdict::Kind::certified);
      } catch (const extend_error&) {
        break;  // ran out of leaves
      }
    }
  }
}

TEST_CASE("families from the eleven-crossing example") {
  auto qa = generate_family("6*2.p1.-20.-1.-2", 2, 3, lib());
  for (auto& e : qa) {
    INFO(e.parameter);
    CHECK(e.verdict.kind == Verdict::Kind::certified);
  }
  auto non = generate_family("(3,-21)(p1,2)", 2, 3, lib());
  for (auto& e : non) {
    INFO(e.parameter);
    CHECK(e.verdict.kind == Verdict::Kind::exhausted);
    CHECK(e.verdict.reason == "space explored");
  }
  CHECK(generate_family("6*2.p1.-20.-1.-2", 3, 2, lib()).empty());
  CHECK_THROWS_AS(generate_family("3,21,-2", 2, 3, lib()), extend_error);
}
