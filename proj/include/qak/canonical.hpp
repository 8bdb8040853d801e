#pragma once

// Canonical codes for connected diagrams: the lexicographically smallest
// serialized traversal over all starting darts. Two diagrams get equal codes
// exactly when they differ by a relabeling of crossings and edges (with the
// slot rotations that preserve the under/over parity); mirror images encode
// differently. Codes are stable printable ASCII with a versioned prefix.

#include <sstream>
#include <string>
#include <vector>

#include "qak/diagram.hpp"

namespace qak {

namespace detail_canon {

inline std::vector<int> serialize_from(const PlanarDiagram& d, Dart start) {
  int n = d.size();
  std::vector<int> number(n, -1), anchor(n, -1);
  std::vector<int> order;
  order.reserve(n);
  number[start.c] = 0;
  anchor[start.c] = start.s;
  order.push_back(start.c);
  std::vector<int> out;
  out.reserve(n * 9 + 1);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int c = order[qi];
    out.push_back(anchor[c] & 1);
    for (int k = 0; k < 4; ++k) {
      Dart m = d.mate(Dart{c, (anchor[c] + k) & 3});
      if (number[m.c] < 0) {
        number[m.c] = static_cast<int>(order.size());
        anchor[m.c] = m.s;
        order.push_back(m.c);
      }
      out.push_back(number[m.c]);
      out.push_back((m.s - anchor[m.c]) & 3);
    }
  }
  return out;
}

}  // namespace detail_canon

inline std::string canonical_code(const PlanarDiagram& d) {
  if (!d.is_connected()) throw diagram_error("canonical_code: diagram is split");
  if (d.empty()) return d.free_loops() == 1 ? "qacode1:unknot" : "qacode1:empty";
  std::vector<int> best;
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      std::vector<int> cand = detail_canon::serialize_from(d, Dart{c, s});
      if (best.empty() || cand < best) best = std::move(cand);
    }
  std::ostringstream out;
  out << "qacode1:" << d.size();
  for (size_t i = 0; i < best.size(); ++i) out << (i ? "," : ":") << best[i];
  return out.str();
}

}  // namespace qak
