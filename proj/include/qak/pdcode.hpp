#pragma once

// PD and DT code input/output.
//
// PD text is a list of quadruples X[a,b,c,d]: edge a is the incoming
// under-strand and b,c,d follow counterclockwise, which matches the slot
// convention of PlanarDiagram directly. DT codes are single-row knot codes;
// the embedding is recovered by searching the per-crossing left/right
// choices for one that closes up in the sphere.

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "qak/diagram.hpp"

namespace qak {

struct parse_error : std::runtime_error {
  size_t position;
  parse_error(const std::string& what, size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

inline PlanarDiagram parse_pd(const std::string& text) {
  std::vector<PlanarDiagram::Crossing> cr;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 'X' && text[i] != 'x') throw parse_error("expected 'X'", i);
    ++i;
    skip_ws();
    if (i >= text.size() || (text[i] != '[' && text[i] != '(')) throw parse_error("expected '['", i);
    char close = text[i] == '[' ? ']' : ')';
    ++i;
    PlanarDiagram::Crossing c{};
    for (int k = 0; k < 4; ++k) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw parse_error("expected edge number", i);
      c.end[k] = std::stoi(text.substr(start, i - start));
    }
    skip_ws();
    if (i >= text.size() || text[i] != close) throw parse_error("expected closing bracket", i);
    ++i;
    cr.push_back(c);
  }
  if (cr.empty()) throw parse_error("empty PD code", 0);
  return PlanarDiagram(std::move(cr), 0);
}

// Serializes with edges renumbered 1..2n along the traced orientation, the
// incoming under-strand first.
inline std::string to_pd(const PlanarDiagram& d) {
  if (d.empty()) return "";
  auto o = d.orient();
  // number edges along strands
  std::vector<int> label(d.edge_count(), 0);
  int next = 1;
  std::vector<char> seen(d.size() * 4, 0);
  for (int c0 = 0; c0 < d.size(); ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[4 * c0 + s0]) continue;
      Dart t{c0, s0};
      while (!seen[4 * t.c + t.s]) {
        seen[4 * t.c + t.s] = 1;
        seen[4 * t.c + PlanarDiagram::through(t.s)] = 1;
        int out = PlanarDiagram::through(t.s);
        label[d.crossing(t.c).end[out]] = next++;
        t = d.mate(Dart{t.c, out});
      }
    }
  std::ostringstream out;
  for (int c = 0; c < d.size(); ++c) {
    int s0 = o.under_dir[c] > 0 ? 0 : 2;
    out << (c ? " " : "") << "X[";
    for (int k = 0; k < 4; ++k)
      out << label[d.crossing(c).end[(s0 + k) & 3]] << (k < 3 ? "," : "]");
  }
  return out.str();
}

// Single-row DT code for a knot: n even integers, entry k pairing odd
// position 2k-1; a negative entry means the even visit passes over.
inline PlanarDiagram parse_dt(const std::string& text) {
  std::vector<long> code;
  {
    std::istringstream in(text);
    long v;
    while (in >> v) code.push_back(v);
    if (!in.eof()) throw parse_error("bad DT token", 0);
  }
  size_t n = code.size();
  if (n == 0) throw parse_error("empty DT code", 0);
  size_t total = 2 * n;
  std::vector<int> pair_of(total + 1, 0);
  for (size_t k = 0; k < n; ++k) {
    long v = code[k];
    long a = std::labs(v);
    if (a == 0 || a % 2 != 0 || a > static_cast<long>(total) || pair_of[a])
      throw diagram_error("DT code is not a permutation of the even numbers");
    pair_of[2 * k + 1] = static_cast<int>(a);
    pair_of[a] = static_cast<int>(2 * k + 1);
  }

  // position -> (crossing, odd/even visit)
  std::vector<int> cross_at(total + 1), visit_at(total + 1);
  for (size_t k = 0; k < n; ++k) {
    cross_at[2 * k + 1] = static_cast<int>(k);
    visit_at[2 * k + 1] = 0;
    cross_at[pair_of[2 * k + 1]] = static_cast<int>(k);
    visit_at[pair_of[2 * k + 1]] = 1;
  }

  // Try each left/right choice vector; the planarity check in the diagram
  // constructor rejects embeddings that do not close up in the sphere.
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    std::vector<PlanarDiagram::Crossing> cr(n);
    for (size_t k = 0; k < n; ++k) {
      bool even_over = code[k] < 0;
      // slots of (in, out) for the odd and even passage
      int odd_in, even_in;
      if (even_over) {
        odd_in = 0;  // odd passage is the under-strand
        even_in = (mask >> k & 1) ? 1 : 3;
      } else {
        even_in = 0;
        odd_in = (mask >> k & 1) ? 1 : 3;
      }
      // edge t runs from position t to position t+1 (cyclically)
      auto in_edge = [&](size_t pos) { return static_cast<int>(pos == 1 ? total : pos - 1); };
      auto out_edge = [&](size_t pos) { return static_cast<int>(pos); };
      size_t odd_pos = 2 * k + 1, even_pos = pair_of[odd_pos];
      cr[k].end[odd_in] = in_edge(odd_pos);
      cr[k].end[PlanarDiagram::through(odd_in)] = out_edge(odd_pos);
      cr[k].end[even_in] = in_edge(even_pos);
      cr[k].end[PlanarDiagram::through(even_in)] = out_edge(even_pos);
    }
    try {
      PlanarDiagram d(std::move(cr), 0);
      if (d.component_count() == 1) return d;
    } catch (const diagram_error&) {
    }
  }
  throw diagram_error("DT code is not realizable");
}

}  // namespace qak
