#pragma once

// Reidemeister simplification with a replayable move log.
//
// R1 and R2 removals rewire the strands straight through the removed
// crossings. R3 slides a strand that passes entirely over (or under) the
// other two sides of a triangle face; a slide is committed only when the
// following R1/R2 fixpoint actually drops the crossing count, so every
// logged move sequence strictly reduces the diagram. Up to three full
// no-progress R3 sweeps are attempted before giving up.

#include <optional>
#include <string>
#include <vector>

#include "qak/diagram.hpp"

namespace qak {

struct Move {
  enum class Kind { r1, r2, r3 } kind;
  // r1: (c0, s0) = crossing and kink-edge slot
  // r2: (c0, s0) = one bigon dart, (c1, s1) = the other
  // r3: (c0, s0), (c1, s1), (c2, s2) = triangle darts, slide strand through e0
  int c0 = -1, s0 = -1, c1 = -1, s1 = -1, c2 = -1, s2 = -1;
};

using MoveLog = std::vector<Move>;

namespace detail_simplify {

inline std::vector<std::vector<Dart>> face_orbits(const PlanarDiagram& d) {
  std::vector<std::vector<Dart>> faces;
  std::vector<char> seen(d.size() * 4, 0);
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      if (seen[4 * c + s]) continue;
      std::vector<Dart> orbit;
      Dart t{c, s};
      while (!seen[4 * t.c + t.s]) {
        seen[4 * t.c + t.s] = 1;
        orbit.push_back(t);
        Dart m = d.mate(t);
        t = Dart{m.c, (m.s + 1) & 3};
      }
      faces.push_back(std::move(orbit));
    }
  return faces;
}

}  // namespace detail_simplify

// --- single moves --------------------------------------------------------------

inline std::optional<Move> find_r1(const PlanarDiagram& d) {
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      Dart m = d.mate(Dart{c, s});
      if (m.c == c && m.s == ((s + 1) & 3)) return Move{Move::Kind::r1, c, s};
    }
  return std::nullopt;
}

inline PlanarDiagram apply_r1(const PlanarDiagram& d, const Move& mv) {
  Dart m = d.mate(Dart{mv.c0, mv.s0});
  if (m.c != mv.c0 || m.s != ((mv.s0 + 1) & 3)) throw diagram_error("r1: move does not apply");
  return d.rewire({mv.c0}, {{Dart{mv.c0, 0}, Dart{mv.c0, 2}}, {Dart{mv.c0, 1}, Dart{mv.c0, 3}}});
}

inline std::optional<Move> find_r2(const PlanarDiagram& d) {
  for (auto& face : detail_simplify::face_orbits(d)) {
    if (face.size() != 2) continue;
    Dart u = face[0];
    Dart m = d.mate(u);
    if (u.c == m.c) continue;  // kink-shaped, r1 territory
    // reducible: one strand passes over at both crossings, so each bigon
    // edge keeps one parity; mixed parities mean a clasp
    if ((u.s & 1) != (m.s & 1)) continue;
    return Move{Move::Kind::r2, u.c, u.s, face[1].c, face[1].s};
  }
  return std::nullopt;
}

inline PlanarDiagram apply_r2(const PlanarDiagram& d, const Move& mv) {
  Dart u{mv.c0, mv.s0}, m = d.mate(u);
  if (m.c != mv.c1 || ((m.s + 1) & 3) != mv.s1 || u.c == m.c)
    throw diagram_error("r2: move does not apply");
  if ((u.s & 1) != (m.s & 1)) throw diagram_error("r2: clasp bigon");
  int a = mv.c0, b = mv.c1;
  return d.rewire({a, b}, {{Dart{a, 0}, Dart{a, 2}},
                           {Dart{a, 1}, Dart{a, 3}},
                           {Dart{b, 0}, Dart{b, 2}},
                           {Dart{b, 1}, Dart{b, 3}}});
}

// Triangle faces admitting a slide, canonical dart order; the strand
// carrying the edge at the first listed dart is the one that slides.
inline std::vector<Move> find_r3(const PlanarDiagram& d) {
  std::vector<Move> out;
  for (auto& face : detail_simplify::face_orbits(d)) {
    if (face.size() != 3) continue;
    if (face[0].c == face[1].c || face[1].c == face[2].c || face[0].c == face[2].c) continue;
    for (int r = 0; r < 3; ++r) {
      Dart d0 = face[r], d1 = face[(r + 1) % 3], d2 = face[(r + 2) % 3];
      // strand through edge at d0 is over (or under) at both of its crossings
      if ((d0.s & 1) != (d1.s & 1))
        out.push_back(Move{Move::Kind::r3, d0.c, d0.s, d1.c, d1.s, d2.c, d2.s});
    }
  }
  return out;
}

inline PlanarDiagram apply_r3(const PlanarDiagram& d, const Move& mv) {
  Dart d0{mv.c0, mv.s0}, d1{mv.c1, mv.s1}, d2{mv.c2, mv.s2};
  // verify the triangle
  {
    Dart m = d.mate(d0);
    if (!(Dart{m.c, (m.s + 1) & 3} == d1)) throw diagram_error("r3: not a face");
    m = d.mate(d1);
    if (!(Dart{m.c, (m.s + 1) & 3} == d2)) throw diagram_error("r3: not a face");
    m = d.mate(d2);
    if (!(Dart{m.c, (m.s + 1) & 3} == d0)) throw diagram_error("r3: not a face");
    if ((d0.s & 1) == (d1.s & 1)) throw diagram_error("r3: strand not slideable");
  }
  auto at = [&](Dart t) { return d.crossing(t.c).end[t.s & 3]; };
  auto slot = [](int s) { return s & 3; };
  // outer edges
  int ea_in = at(Dart{d0.c, slot(d0.s + 2)});
  int ec_top = at(Dart{d0.c, slot(d0.s + 1)});
  int ea_out = at(Dart{d1.c, slot(d1.s + 1)});
  int eb_top = at(Dart{d1.c, slot(d1.s + 2)});
  int eb_bot = at(Dart{d2.c, slot(d2.s + 1)});
  int ec_bot = at(Dart{d2.c, slot(d2.s + 2)});
  // strand over/under relations
  bool a_over = (d0.s & 1) == 1;                 // slides over both others
  bool b_over_c = ((d2.s + 3) & 1) == 1;         // parity of s2-1
  // fresh internal edges
  int base = 0;
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) base = std::max(base, d.crossing(c).end[s] + 1);
  int eA = base, eB = base + 1, eC = base + 2;

  std::vector<PlanarDiagram::Crossing> cr;
  std::vector<int> keep;
  for (int c = 0; c < d.size(); ++c)
    if (c != d0.c && c != d1.c && c != d2.c) {
      cr.push_back(d.crossing(c));
      keep.push_back(c);
    }
  PlanarDiagram::Crossing n2{}, n1{}, n0{};
  if (b_over_c)
    n2.end = {ec_top, eB, eC, eb_top};  // under = C
  else
    n2.end = {eb_top, ec_top, eB, eC};  // under = B
  if (a_over) {
    n1.end = {eB, ea_in, eb_bot, eA};   // under = B
    n0.end = {eC, eA, ec_bot, ea_out};  // under = C
  } else {
    n1.end = {eA, eB, ea_in, eb_bot};   // under = A
    n0.end = {ea_out, eC, eA, ec_bot};  // under = A
  }
  cr.push_back(n2);
  cr.push_back(n1);
  cr.push_back(n0);
  return PlanarDiagram(std::move(cr), d.free_loops());
}

inline PlanarDiagram apply_move(const PlanarDiagram& d, const Move& mv) {
  switch (mv.kind) {
    case Move::Kind::r1: return apply_r1(d, mv);
    case Move::Kind::r2: return apply_r2(d, mv);
    case Move::Kind::r3: return apply_r3(d, mv);
  }
  throw diagram_error("unknown move");
}

inline PlanarDiagram replay(const PlanarDiagram& d, const MoveLog& log) {
  PlanarDiagram cur = d;
  for (auto& mv : log) cur = apply_move(cur, mv);
  return cur;
}

// --- the simplifier --------------------------------------------------------------

namespace detail_simplify {

inline PlanarDiagram r1r2_fixpoint(PlanarDiagram d, MoveLog& log) {
  while (true) {
    if (auto mv = find_r1(d)) {
      log.push_back(*mv);
      d = apply_r1(d, *mv);
      continue;
    }
    if (auto mv = find_r2(d)) {
      log.push_back(*mv);
      d = apply_r2(d, *mv);
      continue;
    }
    return d;
  }
}

}  // namespace detail_simplify

struct SimplifyResult {
  PlanarDiagram diagram;
  MoveLog log;
};

inline SimplifyResult simplify(const PlanarDiagram& input) {
  using namespace detail_simplify;
  SimplifyResult res;
  res.diagram = r1r2_fixpoint(input, res.log);
  // Each committed slide strictly reduces the crossing count, so this
  // terminates; a sweep that commits nothing has tried every triangle.
  while (res.diagram.size() > 2) {
    bool progressed = false;
    for (auto& mv : find_r3(res.diagram)) {
      PlanarDiagram slid = apply_r3(res.diagram, mv);
      MoveLog sublog;
      PlanarDiagram reduced = r1r2_fixpoint(slid, sublog);
      if (reduced.size() < res.diagram.size()) {
        res.log.push_back(mv);
        for (auto& m : sublog) res.log.push_back(m);
        res.diagram = std::move(reduced);
        progressed = true;
        break;
      }
    }
    if (!progressed) break;
  }
  return res;
}

}  // namespace qak
