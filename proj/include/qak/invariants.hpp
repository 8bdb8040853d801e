#pragma once

// Classical invariants from a diagram: checkerboard coloring, Goeritz
// matrix with the Gordon-Litherland correction, determinant, signature,
// Kauffman bracket and the unnormalized Jones polynomial.
//
// Convention, fixed once and pinned by tests: a crossing with all-positive
// sign data is right-handed and the right trefoil has signature -2.

#include <cstdint>
#include <vector>

#include "qak/diagram.hpp"
#include "qak/laurent.hpp"

namespace qak {

using int128 = __int128;

inline int sgn128(int128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// --- checkerboard coloring --------------------------------------------------

struct ColoringData {
  PlanarDiagram::Faces faces;
  std::vector<char> shaded;      // per face id
  std::vector<int> shaded_index; // face id -> index among shaded faces, else -1
  int shaded_count = 0;
  // Per crossing: +1 when the shaded corners are {0,2}, -1 when {1,3}.
  std::vector<int> eta;
};

inline ColoringData checkerboard(const PlanarDiagram& d) {
  ColoringData col;
  col.faces = d.faces();
  int nf = col.faces.count;
  std::vector<int> color(nf, -1);
  // BFS over face adjacency: the two corners at slots s-1 and s of any dart
  // bound the same edge, hence get opposite colors.
  std::vector<int> stack;
  color[col.faces.id[0]] = 1;  // shade the face at corner (0,0)
  stack.push_back(col.faces.id[0]);
  std::vector<std::vector<int>> adj(nf);
  for (int c = 0; c < d.size(); ++c)
    for (int s = 0; s < 4; ++s) {
      int f1 = col.faces.id[4 * c + s];
      int f2 = col.faces.id[4 * c + ((s + 3) & 3)];
      adj[f1].push_back(f2);
      adj[f2].push_back(f1);
    }
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int g : adj[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw diagram_error("checkerboard coloring failed");
      }
    }
  }
  col.shaded.assign(nf, 0);
  col.shaded_index.assign(nf, -1);
  for (int f = 0; f < nf; ++f)
    if (color[f] == 1) {
      col.shaded[f] = 1;
      col.shaded_index[f] = col.shaded_count++;
    }
  col.eta.assign(d.size(), 0);
  for (int c = 0; c < d.size(); ++c) {
    int f0 = col.faces.id[4 * c + 0];
    int f1 = col.faces.id[4 * c + 1];
    if (col.shaded[f0] == col.shaded[f1]) throw diagram_error("corner colors do not alternate");
    col.eta[c] = col.shaded[f0] ? -1 : 1;
  }
  return col;
}

// --- Goeritz matrix and Gordon-Litherland data --------------------------------

struct GoeritzData {
  std::vector<std::vector<long long>> matrix;  // (shaded-1) x (shaded-1)
  int mu = 0;                                  // correction term
};

inline GoeritzData goeritz(const PlanarDiagram& d) {
  if (!d.is_connected()) throw diagram_error("goeritz: diagram is split");
  GoeritzData g;
  if (d.empty()) return g;
  ColoringData col = checkerboard(d);
  int m = col.shaded_count;
  std::vector<std::vector<long long>> pre(m, std::vector<long long>(m, 0));
  for (int c = 0; c < d.size(); ++c) {
    int corner = col.eta[c] < 0 ? 0 : 1;
    int u = col.shaded_index[col.faces.id[4 * c + corner]];
    int v = col.shaded_index[col.faces.id[4 * c + corner + 2]];
    if (u != v) {
      pre[u][v] -= col.eta[c];
      pre[v][u] -= col.eta[c];
    }
  }
  for (int u = 0; u < m; ++u) {
    long long s = 0;
    for (int v = 0; v < m; ++v)
      if (v != u) s += pre[u][v];
    pre[u][u] = -s;
  }
  g.matrix.assign(m - 1, std::vector<long long>(m - 1, 0));
  for (int u = 1; u < m; ++u)
    for (int v = 1; v < m; ++v) g.matrix[u - 1][v - 1] = pre[u][v];

  // mu: sum of eta over type II crossings, the ones whose two strands run
  // through with opposite flow relative to the shaded axis.
  auto o = d.orient();
  for (int c = 0; c < d.size(); ++c) {
    int uo = o.under_dir[c] * o.over_dir[c];
    if (uo == -col.eta[c]) g.mu += col.eta[c];
  }
  return g;
}

// Exact determinant via fraction-free elimination.
inline int128 bareiss_det(std::vector<std::vector<int128>> a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline long long determinant(const PlanarDiagram& d) {
  if (d.empty()) return d.free_loops() == 1 ? 1 : 0;
  if (!d.is_connected()) return 0;
  GoeritzData g = goeritz(d);
  int n = static_cast<int>(g.matrix.size());
  std::vector<std::vector<int128>> a(n, std::vector<int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = g.matrix[i][j];
  int128 det = bareiss_det(std::move(a));
  if (det < 0) det = -det;
  return static_cast<long long>(det);
}

// Signature of a symmetric integer matrix by congruence reduction over
// exact rationals; matrices here are tiny.
namespace detail {

struct Frac {
  int128 n = 0, d = 1;
  static int128 gcd(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
      int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void reduce() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    int128 g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }
  Frac operator*(const Frac& o) const {
    Frac r{n * o.n, d * o.d};
    r.reduce();
    return r;
  }
  Frac operator/(const Frac& o) const {
    Frac r{n * o.d, d * o.n};
    r.reduce();
    return r;
  }
  Frac operator-(const Frac& o) const {
    Frac r{n * o.d - o.n * d, d * o.d};
    r.reduce();
    return r;
  }
  Frac operator+(const Frac& o) const {
    Frac r{n * o.d + o.n * d, d * o.d};
    r.reduce();
    return r;
  }
  bool zero() const { return n == 0; }
};

inline int signature_symmetric(const std::vector<std::vector<long long>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Frac>> f(n, std::vector<Frac>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f[i][j] = Frac{m[i][j], 1};
  std::vector<int> act(n);
  for (int i = 0; i < n; ++i) act[i] = i;
  int sig = 0;
  while (!act.empty()) {
    int pi = -1;
    for (size_t a = 0; a < act.size(); ++a)
      if (!f[act[a]][act[a]].zero()) {
        pi = static_cast<int>(a);
        break;
      }
    if (pi >= 0) {
      int i = act[pi];
      Frac d = f[i][i];
      sig += sgn128(d.n);
      act.erase(act.begin() + pi);
      for (int r : act)
        for (int c : act) f[r][c] = f[r][c] - f[r][i] * f[c][i] / d;
      continue;
    }
    // all active diagonal entries vanish: either a zero block or a
    // hyperbolic pair, both contribute 0
    int hi = -1, hj = -1;
    for (size_t a = 0; a < act.size() && hi < 0; ++a)
      for (size_t b = a + 1; b < act.size(); ++b)
        if (!f[act[a]][act[b]].zero()) {
          hi = act[a];
          hj = act[b];
          break;
        }
    if (hi < 0) break;
    Frac a = f[hi][hj];
    act.erase(std::remove(act.begin(), act.end(), hi), act.end());
    act.erase(std::remove(act.begin(), act.end(), hj), act.end());
    for (int r : act)
      for (int c : act)
        f[r][c] = f[r][c] - (f[r][hi] * f[c][hj] + f[r][hj] * f[c][hi]) / a;
  }
  return sig;
}

}  // namespace detail

inline int signature(const PlanarDiagram& d) {
  if (d.empty()) {
    if (d.free_loops() == 1) return 0;
    throw diagram_error("signature: diagram is split");
  }
  if (!d.is_connected()) throw diagram_error("signature: diagram is split");
  GoeritzData g = goeritz(d);
  return detail::signature_symmetric(g.matrix) - g.mu;
}

// --- state sums ---------------------------------------------------------------

inline int bracket_default_cap() { return 16; }

// Loop count of the full resolution chosen by `mask` (bit c set = infinity
// smoothing at crossing c).
inline int state_loops(const PlanarDiagram& d, uint64_t mask) {
  int ne = d.edge_count();
  std::vector<int> parent(ne);
  for (int i = 0; i < ne; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int loops = 0;
  for (int c = 0; c < d.size(); ++c) {
    auto sp = smoothing_pairs(mask >> c & 1 ? Resolution::infinity : Resolution::zero);
    for (auto& p : sp) {
      int a = find(d.crossing(c).end[p[0]]), b = find(d.crossing(c).end[p[1]]);
      if (a == b)
        ++loops;
      else
        parent[a] = b;
    }
  }
  return loops + d.free_loops();
}

// Kauffman bracket in the variable A, <unknot> = 1.
inline LaurentPoly kauffman_bracket(const PlanarDiagram& d, int cap = bracket_default_cap()) {
  int n = d.size();
  if (n > cap) throw diagram_error("kauffman_bracket: crossing cap exceeded");
  std::vector<std::vector<long long>> binom(2 * n + 4, std::vector<long long>(2 * n + 4, 0));
  for (size_t i = 0; i < binom.size(); ++i) {
    binom[i][0] = 1;
    for (size_t j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  LaurentPoly out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    int r = __builtin_popcountll(mask);
    int k = state_loops(d, mask);
    // A^(n-2r) * (-1)^(k-1) (A^2 + A^-2)^(k-1)
    long long s = (k - 1) % 2 ? -1 : 1;
    for (int j = 0; j < k; ++j) out.add(n - 2 * r + 2 * (k - 1) - 4 * j, s * binom[k - 1][j]);
  }
  return out;
}

// Unnormalized Jones polynomial in the homology-aligned variable q,
// J(unknot) = q + q^-1; the graded Euler characteristic of the Khovanov
// chain groups.
inline LaurentPoly jones(const PlanarDiagram& d, int cap = bracket_default_cap()) {
  int n = d.size();
  if (n > cap) throw diagram_error("jones: crossing cap exceeded");
  auto o = d.orient();
  std::vector<std::vector<long long>> binom(2 * n + 4, std::vector<long long>(2 * n + 4, 0));
  for (size_t i = 0; i < binom.size(); ++i) {
    binom[i][0] = 1;
    for (size_t j = 1; j <= i; ++j)
      binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
  }
  LaurentPoly out;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    int r = __builtin_popcountll(mask);
    int k = state_loops(d, mask);
    long long s = (r - o.n_neg) % 2 ? -1 : 1;
    int shift = r + o.n_pos - 2 * o.n_neg;
    for (int j = 0; j <= k; ++j) out.add(shift + k - 2 * j, s * binom[k][j]);
  }
  return out;
}

// |V(-1)|: divide out the unknot factor and evaluate at q = i.
inline long long jones_determinant(const PlanarDiagram& d, int cap = bracket_default_cap()) {
  LaurentPoly j = jones(d, cap);
  LaurentPoly unknot;
  unknot.add(-1, 1);
  unknot.add(1, 1);
  LaurentPoly v = j.div_exact(unknot);
  auto [re, im] = v.eval_at_i();
  if (re != 0 && im != 0) throw diagram_error("jones determinant: unexpected value");
  long long val = re ? re : im;
  return val < 0 ? -val : val;
}

}  // namespace qak
