#pragma once

// Test helpers: random Reidemeister insertions (the inverses of R1/R2),
// random relabelings, and random small diagrams via Conway expressions and
// smoothings. Deterministic under a caller-supplied RNG.

#include <random>
#include <vector>

#include "qak/builder.hpp"
#include "qak/diagram.hpp"
#include "qak/simplify.hpp"

namespace qak::testsupport {

// Adds a kink on the given edge; variant picks among the four kink types.
inline PlanarDiagram r1_insert(const PlanarDiagram& d, int edge, int variant) {
  int n = d.size();
  int fresh = d.edge_count();
  int f = fresh, g = fresh + 1, k = fresh + 2;
  std::vector<PlanarDiagram::Crossing> cr = d.crossings();
  PlanarDiagram::Crossing x{};
  switch (variant & 3) {
    case 0: x.end = {f, k, k, g}; break;
    case 1: x.end = {f, g, k, k}; break;
    case 2: x.end = {k, f, g, k}; break;
    default: x.end = {k, k, f, g}; break;
  }
  if (n == 0) {
    // kink on a free loop
    if (d.free_loops() < 1) throw diagram_error("no loop to twist");
    for (int s = 0; s < 4; ++s)
      if (x.end[s] == g) x.end[s] = f;
    return PlanarDiagram({x}, d.free_loops() - 1);
  }
  Dart e0 = d.edge_end(edge, 0), e1 = d.edge_end(edge, 1);
  cr[e0.c].end[e0.s] = f;
  cr[e1.c].end[e1.s] = g;
  cr.push_back(x);
  return PlanarDiagram(std::move(cr), d.free_loops());
}

// Pokes the edge at face-dart u over (or under) the edge at face-dart v;
// both darts must lie on the same face.
inline PlanarDiagram r2_insert(const PlanarDiagram& d, Dart u, Dart v, bool over) {
  int eu = d.crossing(u.c).end[u.s];
  int ev = d.crossing(v.c).end[v.s];
  if (eu == ev) throw diagram_error("r2 insert: same edge");
  Dart u2 = d.mate(u), v2 = d.mate(v);
  int base = d.edge_count();
  int a1 = base, a2 = base + 1, a3 = base + 2, b1 = base + 3, b2 = base + 4, b3 = base + 5;
  std::vector<PlanarDiagram::Crossing> cr = d.crossings();
  cr[u.c].end[u.s] = a1;
  cr[u2.c].end[u2.s] = a3;
  cr[v.c].end[v.s] = b1;
  cr[v2.c].end[v2.s] = b3;
  PlanarDiagram::Crossing x{}, y{};
  if (over) {
    x.end = {b2, a1, b3, a2};
    y.end = {b1, a3, b2, a2};
  } else {
    x.end = {a2, b2, a1, b3};
    y.end = {a2, b1, a3, b2};
  }
  cr.push_back(x);
  cr.push_back(y);
  return PlanarDiagram(std::move(cr), d.free_loops());
}

// One random insertion; may return the input when no spot fits.
template <class Rng>
PlanarDiagram random_insertion(const PlanarDiagram& d, Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (d.edge_count() == 0 || coin(rng) == 0) {
    if (d.edge_count() == 0 && d.free_loops() == 0) return d;
    int edge = d.edge_count() ? std::uniform_int_distribution<int>(0, d.edge_count() - 1)(rng) : 0;
    return r1_insert(d, edge, std::uniform_int_distribution<int>(0, 3)(rng));
  }
  // collect faces, pick one with two darts on distinct edges
  std::vector<std::vector<Dart>> faces;
  {
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
  }
  std::shuffle(faces.begin(), faces.end(), rng);
  for (auto& face : faces) {
    if (face.size() < 2) continue;
    for (int attempt = 0; attempt < 4; ++attempt) {
      size_t i = std::uniform_int_distribution<size_t>(0, face.size() - 1)(rng);
      size_t j = std::uniform_int_distribution<size_t>(0, face.size() - 1)(rng);
      if (i == j) continue;
      int ei = d.crossing(face[i].c).end[face[i].s];
      int ej = d.crossing(face[j].c).end[face[j].s];
      if (ei == ej) continue;
      return r2_insert(d, face[i], face[j], coin(rng) == 1);
    }
  }
  return d;
}

// Random relabeling: permute crossings and rotate slots by 0 or 2.
template <class Rng>
PlanarDiagram random_relabel(const PlanarDiagram& d, Rng& rng) {
  int n = d.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<PlanarDiagram::Crossing> cr(n);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int i = 0; i < n; ++i) {
    const auto& src = d.crossing(perm[i]);
    int r = coin(rng) * 2;
    for (int s = 0; s < 4; ++s) cr[i].end[s] = src.end[(s + r) & 3];
  }
  return PlanarDiagram(std::move(cr), d.free_loops());
}

// Small random link diagrams: random alternating-ish Conway ramifications,
// optionally mirrored and smoothed down.
template <class Rng>
PlanarDiagram random_diagram(int max_crossings, Rng& rng, const TemplateLibrary& lib) {
  std::uniform_int_distribution<int> pick(2, 4);
  while (true) {
    std::vector<int> sizes;
    int total = 0;
    int parts = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < parts; ++i) {
      int s = pick(rng);
      sizes.push_back(s);
      total += s;
    }
    std::string conway;
    for (size_t i = 0; i < sizes.size(); ++i) {
      if (i) conway += ",";
      int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      for (int k = 0; k < sizes[i]; ++k) {
        int digit = std::uniform_int_distribution<int>(1, 3)(rng);
        if (sign < 0) conway += "-";
        conway += static_cast<char>('0' + digit);
        if (conway.size() > 40) break;
      }
    }
    PlanarDiagram d = build_conway(conway, lib);
    while (d.size() > max_crossings) {
      int c = std::uniform_int_distribution<int>(0, d.size() - 1)(rng);
      Resolution r =
          std::uniform_int_distribution<int>(0, 1)(rng) ? Resolution::zero : Resolution::infinity;
      d = d.smooth(c, r);
    }
    if (d.size() > 0 && d.is_connected()) return d;
  }
}

}  // namespace qak::testsupport
