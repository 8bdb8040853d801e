#pragma once

// Independent quasi-alternating oracle: unmemoized, unordered, unpruned
// recursion straight off the definition. Every crossing is tried; a crossing
// counts only when both smoothings keep determinant >= 1 and the sum is
// exact, which is the definition itself rather than a search heuristic.

#include "qak/invariants.hpp"
#include "qak/simplify.hpp"

namespace qak::testsupport {

inline bool brute_qa(const PlanarDiagram& input) {
  PlanarDiagram d = simplify(input).diagram;
  if (d.empty()) return d.free_loops() == 1;
  if (!d.is_connected()) return false;
  long long det = determinant(d);
  if (det <= 1) return false;
  for (int c = 0; c < d.size(); ++c) {
    PlanarDiagram z = d.smooth(c, Resolution::zero);
    PlanarDiagram f = d.smooth(c, Resolution::infinity);
    long long dz = determinant(z);
    long long df = determinant(f);
    if (dz < 1 || df < 1 || dz + df != det) continue;
    if (brute_qa(z) && brute_qa(f)) return true;
  }
  return false;
}

}  // namespace qak::testsupport
