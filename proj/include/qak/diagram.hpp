#pragma once

// Planar link diagrams as signed combinatorial maps.
//
// A diagram is a list of crossings, each holding the four incident edge ids
// in counterclockwise order. Slots 0 and 2 carry the under-strand, slots 1
// and 3 the over-strand. Every edge id occurs exactly twice across all
// crossings; crossing-free unknot components are counted separately in
// free_loops. Faces come from orbits of the map permutation, components
// from strand tracing, and planarity is enforced in the constructor via
// the Euler characteristic of each connected piece.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qak {

struct diagram_error : std::runtime_error {
  explicit diagram_error(const std::string& what) : std::runtime_error(what) {}
};

struct Dart {
  int c = -1;  // crossing index
  int s = -1;  // slot 0..3
  bool operator==(const Dart& o) const { return c == o.c && s == o.s; }
};

enum class Resolution { zero, infinity };

// The zero smoothing joins slots 0-1 and 2-3 (the under-strand end rotated
// counterclockwise onto its neighbor); infinity joins 0-3 and 1-2.
inline std::array<std::array<int, 2>, 2> smoothing_pairs(Resolution r) {
  if (r == Resolution::zero) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

class PlanarDiagram {
 public:
  struct Crossing {
    std::array<int, 4> end;  // edge id per slot, CCW, under = slots 0,2
  };

  PlanarDiagram() = default;

  PlanarDiagram(std::vector<Crossing> crossings, int free_loops)
      : cr_(std::move(crossings)), free_loops_(free_loops) {
    finalize();
  }

  int size() const { return static_cast<int>(cr_.size()); }
  int free_loops() const { return free_loops_; }
  int edge_count() const { return n_edges_; }
  const Crossing& crossing(int i) const { return cr_[i]; }
  const std::vector<Crossing>& crossings() const { return cr_; }

  Dart edge_end(int e, int which) const { return ends_[e][which]; }

  // Other end of the edge underlying a dart.
  Dart mate(Dart d) const {
    int e = cr_[d.c].end[d.s];
    Dart a = ends_[e][0], b = ends_[e][1];
    return (a == d) ? b : a;
  }

  static int through(int slot) { return (slot + 2) & 3; }

  bool empty() const { return cr_.empty(); }
  bool is_unknot_diagram() const { return cr_.empty() && free_loops_ == 1; }

  // --- faces -------------------------------------------------------------
  // face_at(c, s) identifies the face at the corner between slots s and s+1.
  // Orbits of d -> ccw_next(mate(d)) trace faces; the orbit through dart
  // (c, s) hugs exactly that corner.
  struct Faces {
    std::vector<int> id;  // dart index 4c+s -> face id
    int count = 0;
  };

  Faces faces() const {
    Faces f;
    f.id.assign(cr_.size() * 4, -1);
    for (int c = 0; c < size(); ++c)
      for (int s = 0; s < 4; ++s) {
        if (f.id[4 * c + s] >= 0) continue;
        int face = f.count++;
        Dart d{c, s};
        while (f.id[4 * d.c + d.s] < 0) {
          f.id[4 * d.c + d.s] = face;
          Dart m = mate(d);
          d = Dart{m.c, (m.s + 1) & 3};
        }
      }
    return f;
  }

  // --- components ----------------------------------------------------------
  // Number of closed strands, including free loops.
  int component_count() const {
    std::vector<char> seen(cr_.size() * 4, 0);
    int n = 0;
    for (int c = 0; c < size(); ++c)
      for (int s = 0; s < 4; ++s) {
        if (seen[4 * c + s]) continue;
        ++n;
        Dart d{c, s};
        while (!seen[4 * d.c + d.s]) {
          seen[4 * d.c + d.s] = 1;
          seen[4 * d.c + through(d.s)] = 1;
          d = mate(Dart{d.c, through(d.s)});
        }
      }
    return n + free_loops_;
  }

  // Union-find over crossings joined by shared edges; true when the whole
  // diagram (including free loops) is one piece.
  bool is_connected() const {
    if (cr_.empty()) return free_loops_ == 1;
    if (free_loops_ > 0) return false;
    std::vector<int> parent(cr_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < n_edges_; ++e) {
      int a = find(ends_[e][0].c), b = find(ends_[e][1].c);
      if (a != b) parent[a] = b;
    }
    int root = find(0);
    for (int c = 1; c < size(); ++c)
      if (find(c) != root) return false;
    return true;
  }

  // Connected-diagram summands of a split diagram. Free loops come out as
  // 0-crossing one-loop diagrams.
  std::vector<PlanarDiagram> split_components() const {
    std::vector<PlanarDiagram> out;
    if (!cr_.empty()) {
      std::vector<int> parent(cr_.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (int e = 0; e < n_edges_; ++e) {
        int a = find(ends_[e][0].c), b = find(ends_[e][1].c);
        if (a != b) parent[a] = b;
      }
      std::map<int, std::vector<int>> groups;
      for (int c = 0; c < size(); ++c) groups[find(c)].push_back(c);
      for (auto& [root, members] : groups) {
        std::vector<int> newindex(cr_.size(), -1);
        for (size_t i = 0; i < members.size(); ++i) newindex[members[i]] = static_cast<int>(i);
        std::vector<Crossing> sub;
        sub.reserve(members.size());
        for (int c : members) sub.push_back(cr_[c]);
        out.emplace_back(std::move(sub), 0);
      }
    }
    for (int i = 0; i < free_loops_; ++i) out.emplace_back(std::vector<Crossing>{}, 1);
    return out;
  }

  // --- orientation and signs ----------------------------------------------
  // Strands are traced once in an arbitrary but deterministic direction.
  // under_dir[c] = +1 when the under-strand runs slot0 -> slot2,
  // over_dir[c]  = +1 when the over-strand runs slot1 -> slot3.
  // sign[c] = -under_dir * over_dir (all +1 crossings give sigma(trefoil) = -2).
  struct Orientation {
    std::vector<int> under_dir, over_dir, sign;
    int writhe = 0, n_pos = 0, n_neg = 0;
  };

  Orientation orient() const {
    Orientation o;
    o.under_dir.assign(cr_.size(), 0);
    o.over_dir.assign(cr_.size(), 0);
    o.sign.assign(cr_.size(), 0);
    std::vector<char> seen(cr_.size() * 4, 0);
    // Strands start at under-darts when possible: under slots survive
    // mirroring unchanged, which makes traced orientations correspond and
    // keeps signature antisymmetric under mirror for links too.
    for (int pass = 0; pass < 2; ++pass)
      for (int c0 = 0; c0 < size(); ++c0)
        for (int s0 = pass; s0 < 4; s0 += 2) {
          if (seen[4 * c0 + s0]) continue;
          Dart d{c0, s0};  // arriving dart
          while (!seen[4 * d.c + d.s]) {
            seen[4 * d.c + d.s] = 1;
            seen[4 * d.c + through(d.s)] = 1;
            if (d.s == 0) o.under_dir[d.c] = +1;
            if (d.s == 2) o.under_dir[d.c] = -1;
            if (d.s == 1) o.over_dir[d.c] = +1;
            if (d.s == 3) o.over_dir[d.c] = -1;
            d = mate(Dart{d.c, through(d.s)});
          }
        }
    for (int c = 0; c < size(); ++c) {
      o.sign[c] = -o.under_dir[c] * o.over_dir[c];
      o.writhe += o.sign[c];
      (o.sign[c] > 0 ? o.n_pos : o.n_neg)++;
    }
    return o;
  }

  // --- surgery --------------------------------------------------------------
  // Removes a set of crossings, replacing each with two arcs that join its
  // slots as given in `pairs` (darts of removed crossings only, each slot
  // used once unless its edge is in `drop`). Edges in `drop` are deleted
  // outright together with their slots. Chains that close up away from the
  // surviving crossings become free loops.
  PlanarDiagram rewire(const std::vector<int>& removed,
                       const std::vector<std::array<Dart, 2>>& pairs,
                       const std::vector<int>& drop = {}) const {
    std::vector<char> is_removed(cr_.size(), 0);
    for (int c : removed) is_removed[c] = 1;
    std::vector<char> dropped(n_edges_, 0);
    for (int e : drop) dropped[e] = 1;

    // partner[dart] = paired dart at a removed crossing
    std::vector<int> partner(cr_.size() * 4, -1);
    for (auto& p : pairs) {
      partner[4 * p[0].c + p[0].s] = 4 * p[1].c + p[1].s;
      partner[4 * p[1].c + p[1].s] = 4 * p[0].c + p[0].s;
    }

    std::vector<int> newindex(cr_.size(), -1);
    std::vector<Crossing> sub;
    for (int c = 0; c < size(); ++c)
      if (!is_removed[c]) {
        newindex[c] = static_cast<int>(sub.size());
        sub.push_back(cr_[c]);
      }

    int loops = free_loops_;
    int next_edge = 0;
    std::vector<int> edge_label(n_edges_, -1);
    std::vector<char> dart_done(cr_.size() * 4, 0);

    // Walk from each surviving dart through removed crossings to the far
    // surviving dart; everything traversed becomes one edge.
    for (int c = 0; c < size(); ++c) {
      if (is_removed[c]) continue;
      for (int s = 0; s < 4; ++s) {
        if (dart_done[4 * c + s]) continue;
        int label = next_edge++;
        Dart d{c, s};
        dart_done[4 * c + s] = 1;
        sub[newindex[c]].end[s] = label;
        Dart m = mate(d);
        while (is_removed[m.c]) {
          int p = partner[4 * m.c + m.s];
          if (p < 0) throw diagram_error("rewire: unpaired slot on removed crossing");
          m = mate(Dart{p / 4, p % 4});
        }
        if (dart_done[4 * m.c + m.s] && !(m == d))
          throw diagram_error("rewire: inconsistent chain");
        dart_done[4 * m.c + m.s] = 1;
        sub[newindex[m.c]].end[m.s] = label;
      }
    }

    // Closed chains entirely inside the removed region become free loops,
    // as long as they use at least one real, undropped edge.
    std::vector<char> edge_seen(n_edges_, 0);
    for (int c : removed)
      for (int s = 0; s < 4; ++s) {
        int e = cr_[c].end[s];
        if (dropped[e] || edge_seen[e]) continue;
        // follow the chain containing this edge; if it never touches a
        // surviving crossing it is a closed loop
        bool survives = false;
        Dart d = ends_[e][0];
        Dart start = d;
        std::vector<int> chain;
        do {
          int ce = cr_[d.c].end[d.s];
          if (!edge_seen[ce]) chain.push_back(ce);
          edge_seen[ce] = 1;
          if (!is_removed[d.c]) {
            survives = true;
            break;
          }
          int p = partner[4 * d.c + d.s];
          if (p < 0) throw diagram_error("rewire: unpaired slot on removed crossing");
          d = mate(Dart{p / 4, p % 4});
        } while (!(d == start));
        if (!survives) ++loops;
      }

    return PlanarDiagram(std::move(sub), loops);
  }

  // One fewer crossing, edges rewired by the chosen resolution.
  PlanarDiagram smooth(int c, Resolution r) const {
    if (c < 0 || c >= size()) throw diagram_error("smooth: no such crossing");
    auto sp = smoothing_pairs(r);
    std::vector<std::array<Dart, 2>> pairs;
    for (auto& p : sp) pairs.push_back({Dart{c, p[0]}, Dart{c, p[1]}});
    return rewire({c}, pairs);
  }

  // In-plane reflection: cyclic order reverses at every crossing, over and
  // under strands keep their roles, so every crossing sign flips.
  PlanarDiagram mirror() const {
    std::vector<Crossing> m = cr_;
    for (auto& x : m) std::swap(x.end[1], x.end[3]);
    return PlanarDiagram(std::move(m), free_loops_);
  }

  bool operator==(const PlanarDiagram& o) const {
    if (free_loops_ != o.free_loops_ || cr_.size() != o.cr_.size()) return false;
    for (size_t i = 0; i < cr_.size(); ++i)
      if (cr_[i].end != o.cr_[i].end) return false;
    return true;
  }

 private:
  void finalize() {
    if (free_loops_ < 0) throw diagram_error("negative free loop count");
    std::map<int, std::vector<Dart>> occ;
    for (int c = 0; c < size(); ++c)
      for (int s = 0; s < 4; ++s) occ[cr_[c].end[s]].push_back(Dart{c, s});
    for (auto& [e, ds] : occ)
      if (ds.size() != 2)
        throw diagram_error("edge " + std::to_string(e) + " occurs " +
                            std::to_string(ds.size()) + " times (want 2)");
    // renumber edges densely in order of first appearance
    std::map<int, int> relabel;
    n_edges_ = 0;
    for (int c = 0; c < size(); ++c)
      for (int s = 0; s < 4; ++s) {
        int e = cr_[c].end[s];
        if (!relabel.count(e)) relabel[e] = n_edges_++;
      }
    ends_.assign(n_edges_, {Dart{}, Dart{}});
    std::vector<int> fill(n_edges_, 0);
    for (int c = 0; c < size(); ++c)
      for (int s = 0; s < 4; ++s) {
        int e = relabel[cr_[c].end[s]];
        cr_[c].end[s] = e;
        ends_[e][fill[e]++] = Dart{c, s};
      }
    check_planar();
  }

  void check_planar() const {
    if (cr_.empty()) return;
    // Euler characteristic per connected piece must be 2.
    std::vector<int> parent(cr_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < n_edges_; ++e) {
      int a = find(ends_[e][0].c), b = find(ends_[e][1].c);
      if (a != b) parent[a] = b;
    }
    std::map<int, std::array<int, 2>> ve;  // root -> {V, E}
    for (int c = 0; c < size(); ++c) ve[find(c)][0]++;
    for (int e = 0; e < n_edges_; ++e) ve[find(ends_[e][0].c)][1]++;
    Faces f = faces();
    std::map<int, int> fcount;  // root -> F
    std::vector<char> face_seen(f.count, 0);
    for (int c = 0; c < size(); ++c)
      for (int s = 0; s < 4; ++s) {
        int id = f.id[4 * c + s];
        if (!face_seen[id]) {
          face_seen[id] = 1;
          fcount[find(c)]++;
        }
      }
    for (auto& [root, counts] : ve)
      if (counts[0] - counts[1] + fcount[root] != 2)
        throw diagram_error("crossing data does not embed in the sphere");
  }

  std::vector<Crossing> cr_;
  int free_loops_ = 0;
  int n_edges_ = 0;
  std::vector<std::array<Dart, 2>> ends_;
};

// Every strand alternates under/over passages.
inline bool is_alternating(const PlanarDiagram& d) {
  std::vector<char> seen(d.size() * 4, 0);
  for (int c0 = 0; c0 < d.size(); ++c0)
    for (int s0 = 0; s0 < 4; ++s0) {
      if (seen[4 * c0 + s0]) continue;
      Dart t{c0, s0};
      int prev = -1;
      while (!seen[4 * t.c + t.s]) {
        seen[4 * t.c + t.s] = 1;
        seen[4 * t.c + PlanarDiagram::through(t.s)] = 1;
        int parity = t.s & 1;
        if (prev >= 0 && parity == prev) return false;
        prev = parity;
        t = d.mate(Dart{t.c, PlanarDiagram::through(t.s)});
      }
    }
  return true;
}

}  // namespace qak
