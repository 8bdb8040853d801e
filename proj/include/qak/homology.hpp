#pragma once

// Khovanov homology from the cube of resolutions.
//
// Resolution 0 is the A-smoothing at every crossing; homological grading
// i = |v| - n_neg and quantum grading j = deg + |v| + n_pos - 2 n_neg put
// the unknot at (0, +-1) and keep the result a link invariant. Ranks are
// computed per quantum grading: the chain complex is reduced over Z by
// cancelling +-1 differential entries (a homotopy equivalence, so any
// coefficients can be read off the leftover), then the small remainders
// are ranked by exact elimination over F2 and over Q.

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "qak/diagram.hpp"
#include "qak/invariants.hpp"
#include "qak/laurent.hpp"

namespace qak {

enum class Coeff { f2, rational };

struct RankTable {
  std::map<std::pair<int, int>, long long> rank;  // (i, j) -> rank
  Coeff coeff = Coeff::f2;
  long long total() const {
    long long t = 0;
    for (auto& [ij, r] : rank) t += r;
    return t;
  }
  std::set<int> diagonals() const {
    std::set<int> out;
    for (auto& [ij, r] : rank)
      if (r > 0) out.insert(ij.second - 2 * ij.first);
    return out;
  }
};

struct ThinnessVerdict {
  bool thin = false;
  std::set<int> diagonals;
  int sigma_used = 0;
};

inline ThinnessVerdict thinness(const RankTable& r, int sigma) {
  ThinnessVerdict v;
  v.diagonals = r.diagonals();
  v.sigma_used = sigma;
  v.thin = true;
  for (int d : v.diagonals)
    if (d != -sigma - 1 && d != -sigma + 1) v.thin = false;
  return v;
}

inline int khovanov_default_cap() { return 14; }

class KhComplex {
 public:
  explicit KhComplex(const PlanarDiagram& d, int cap = khovanov_default_cap()) : d_(d) {
    n_ = d.size();
    if (n_ > cap) throw diagram_error("khovanov_complex: crossing cap exceeded");
    auto o = d.orient();
    n_pos_ = o.n_pos;
    n_neg_ = o.n_neg;
    loops_extra_ = d.free_loops();
    arcs_ = d.edge_count();
    size_t states = size_t(1) << n_;
    circle_of_.assign(states * size_t(std::max(arcs_, 1)), 0);
    circles_.assign(states, 0);
    for (size_t v = 0; v < states; ++v) compute_state(static_cast<uint64_t>(v));
  }

  int crossings() const { return n_; }
  int n_pos() const { return n_pos_; }
  int n_neg() const { return n_neg_; }

  int circles(uint64_t v) const { return circles_[v] + loops_extra_; }
  int circle_of(uint64_t v, int arc) const { return circle_of_[v * std::max(arcs_, 1) + arc]; }

  int grade_i(uint64_t v) const { return __builtin_popcountll(v) - n_neg_; }
  int grade_j(uint64_t v, uint64_t mask) const {
    int k = circles(v);
    int deg = 2 * __builtin_popcountll(mask) - k;
    return deg + __builtin_popcountll(v) + n_pos_ - 2 * n_neg_;
  }

  // Chain-level graded Euler characteristic: equals the one of homology.
  LaurentPoly graded_euler() const {
    LaurentPoly out;
    size_t states = size_t(1) << n_;
    std::vector<std::vector<long long>> binom(circles_max() + 2,
                                              std::vector<long long>(circles_max() + 2, 0));
    for (size_t i = 0; i < binom.size(); ++i) {
      binom[i][0] = 1;
      for (size_t j = 1; j <= i; ++j)
        binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }
    for (size_t v = 0; v < states; ++v) {
      int k = circles(v);
      long long s = (grade_i(v) % 2 == 0) ? 1 : -1;
      int shift = __builtin_popcountll(v) + n_pos_ - 2 * n_neg_;
      for (int m = 0; m <= k; ++m) out.add(shift + 2 * m - k, s * binom[k][m]);
    }
    return out;
  }

  // Sign of the cube edge v -> v | (1 << c).
  static int edge_sign(uint64_t v, int c) {
    uint64_t below = v & ((uint64_t(1) << c) - 1);
    return (__builtin_popcountll(below) % 2) ? -1 : 1;
  }

  // The two circles of state v incident to crossing c (equal on a split).
  std::pair<int, int> incident(uint64_t v, int c) const {
    auto sp = smoothing_pairs(v >> c & 1 ? Resolution::infinity : Resolution::zero);
    int e0 = d_.crossing(c).end[sp[0][0]];
    int e1 = d_.crossing(c).end[sp[1][0]];
    return {circle_of(v, e0), circle_of(v, e1)};
  }

  // Maps each circle index of v to the matching circle index of w = v|1<<c
  // for circles untouched by the crossing; touched ones map to -1.
  std::vector<int> transport(uint64_t v, int c) const {
    uint64_t w = v | (uint64_t(1) << c);
    std::vector<int> out(circles(v), -1);
    auto [x, y] = incident(v, c);
    for (int arc = 0; arc < arcs_; ++arc) {
      int cv = circle_of(v, arc);
      if (cv == x || cv == y) continue;
      out[cv] = circle_of(w, arc);
    }
    // crossing-free loops ride along unchanged
    for (int l = 0; l < loops_extra_; ++l) out[circles_[v] + l] = circles_[w] + l;
    return out;
  }

  const PlanarDiagram& diagram() const { return d_; }

 private:
  int circles_max() const {
    int m = 1;
    size_t states = size_t(1) << n_;
    for (size_t v = 0; v < states; ++v) m = std::max(m, circles(v));
    return m;
  }

  void compute_state(uint64_t v) {
    if (arcs_ == 0) {
      circles_[v] = 0;
      return;
    }
    std::vector<int> parent(arcs_);
    for (int i = 0; i < arcs_; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int c = 0; c < n_; ++c) {
      auto sp = smoothing_pairs(v >> c & 1 ? Resolution::infinity : Resolution::zero);
      for (auto& p : sp) {
        int a = find(d_.crossing(c).end[p[0]]);
        int b = find(d_.crossing(c).end[p[1]]);
        if (a != b) parent[a] = b;
      }
    }
    std::vector<int> label(arcs_, -1);
    int k = 0;
    for (int a = 0; a < arcs_; ++a) {
      int r = find(a);
      if (label[r] < 0) label[r] = k++;
      circle_of_[v * arcs_ + a] = label[r];
    }
    circles_[v] = k;
  }

  PlanarDiagram d_;
  int n_ = 0, n_pos_ = 0, n_neg_ = 0, arcs_ = 0, loops_extra_ = 0;
  std::vector<int> circle_of_;
  std::vector<int> circles_;
};

// --- sparse integer matrices with unit cancellation ------------------------------

namespace detail_kh {

struct SparseMat {
  // row -> (col -> coeff); cols index for pivot sweeps
  std::unordered_map<int, std::unordered_map<int, long long>> rows;
  std::unordered_map<int, std::set<int>> cols;

  void add(int r, int c, long long val) {
    if (!val) return;
    auto& row = rows[r];
    auto it = row.find(c);
    if (it == row.end()) {
      row[c] = val;
      cols[c].insert(r);
    } else {
      it->second += val;
      if (it->second == 0) {
        row.erase(it);
        cols[c].erase(r);
        if (row.empty()) rows.erase(r);
        if (cols[c].empty()) cols.erase(c);
      }
    }
  }

  void drop_row(int r) {
    auto it = rows.find(r);
    if (it == rows.end()) return;
    for (auto& [c, val] : it->second) {
      cols[c].erase(r);
      if (cols[c].empty()) cols.erase(c);
    }
    rows.erase(it);
  }

  void drop_col(int c) {
    auto it = cols.find(c);
    if (it == cols.end()) return;
    for (int r : it->second) {
      rows[r].erase(c);
      if (rows[r].empty()) rows.erase(r);
    }
    cols.erase(it);
  }

  size_t entries() const {
    size_t n = 0;
    for (auto& [r, row] : rows) n += row.size();
    return n;
  }
};

// One homological column of blocks for a fixed quantum grading.
struct JComplex {
  std::map<int, long long> dims;       // i -> alive generator count
  std::map<int, SparseMat> diff;       // i -> matrix C_i -> C_{i+1}
  std::map<int, std::set<int>> dead;   // i -> cancelled generator ids

  long long alive(int i) const {
    auto it = dims.find(i);
    return it == dims.end() ? 0 : it->second;
  }

  // Cancel a +-1 entry (gen x in C_i) -> (gen y in C_{i+1}).
  void cancel(int i, int x, int y, long long u) {
    SparseMat& m = diff.find(i)->second;
    std::vector<std::pair<int, long long>> rowvals;  // row y without col x
    for (auto& [c, val] : m.rows[y])
      if (c != x) rowvals.push_back({c, val});
    std::vector<std::pair<int, long long>> colvals;  // col x without row y
    for (int r : m.cols[x])
      if (r != y) colvals.push_back({r, m.rows[r][x]});
    m.drop_row(y);
    m.drop_col(x);
    for (auto& [r, alpha] : colvals)
      for (auto& [c, beta] : rowvals) m.add(r, c, -alpha * beta * u);
    // adjacent differentials only lose the cancelled generators:
    // x indexes a row of d_{i-1}, y a column of d_{i+1}
    auto prev = diff.find(i - 1);
    if (prev != diff.end()) prev->second.drop_row(x);
    auto next = diff.find(i + 1);
    if (next != diff.end()) next->second.drop_col(y);
    dims[i]--;
    dims[i + 1]--;
    dead[i].insert(x);
    dead[i + 1].insert(y);
  }

  // Unit pivots in low-fill order (Markowitz score) until none remain.
  void reduce() {
    std::vector<int> keys;
    for (auto& [i, m] : diff) keys.push_back(i);
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i : keys) {
        SparseMat& m = diff.find(i)->second;
        while (true) {
          struct Cand {
            long long score;
            int r, c;
          };
          std::vector<Cand> cands;
          for (auto& [r, row] : m.rows)
            for (auto& [c, val] : row)
              if (val == 1 || val == -1)
                cands.push_back({static_cast<long long>(row.size() - 1) *
                                     static_cast<long long>(m.cols.at(c).size() - 1),
                                 r, c});
          if (cands.empty()) break;
          std::sort(cands.begin(), cands.end(),
                    [](const Cand& a, const Cand& b) { return a.score < b.score; });
          int applied = 0;
          for (auto& cd : cands) {
            auto rit = m.rows.find(cd.r);
            if (rit == m.rows.end()) continue;
            auto eit = rit->second.find(cd.c);
            if (eit == rit->second.end() || (eit->second != 1 && eit->second != -1)) continue;
            long long now = static_cast<long long>(rit->second.size() - 1) *
                            static_cast<long long>(m.cols.at(cd.c).size() - 1);
            if (applied > 0 && now > cd.score + 4) continue;  // stale, rescan
            cancel(i, cd.c, cd.r, eit->second);
            ++applied;
            progress = true;
          }
          if (!applied) break;
        }
      }
    }
  }
};

inline long long rank_f2(const SparseMat& m, const std::set<int>& dead_rows,
                         const std::set<int>& dead_cols) {
  std::map<int, int> colid;
  std::map<int, int> rowid;
  for (auto& [r, row] : m.rows) {
    if (dead_rows.count(r)) continue;
    for (auto& [c, val] : row) {
      if (dead_cols.count(c) || (val & 1) == 0) continue;
      if (!colid.count(c)) colid[c] = static_cast<int>(colid.size());
      if (!rowid.count(r)) rowid[r] = static_cast<int>(rowid.size());
    }
  }
  size_t words = (colid.size() + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(rowid.size(), std::vector<uint64_t>(words, 0));
  for (auto& [r, row] : m.rows) {
    auto ri = rowid.find(r);
    if (ri == rowid.end()) continue;
    for (auto& [c, val] : row) {
      auto ci = colid.find(c);
      if (ci == colid.end() || (val & 1) == 0) continue;
      rows[ri->second][ci->second / 64] ^= uint64_t(1) << (ci->second % 64);
    }
  }
  auto leading = [&](const std::vector<uint64_t>& v) {
    for (size_t w = 0; w < words; ++w)
      if (v[w]) return static_cast<int>(w * 64 + __builtin_ctzll(v[w]));
    return -1;
  };
  std::map<int, std::vector<uint64_t>> basis;  // lead bit -> echelon row
  long long rank = 0;
  for (auto& row : rows) {
    std::vector<uint64_t> cur = row;
    int lead;
    while ((lead = leading(cur)) >= 0) {
      auto it = basis.find(lead);
      if (it == basis.end()) {
        basis.emplace(lead, cur);
        ++rank;
        break;
      }
      for (size_t w = 0; w < words; ++w) cur[w] ^= it->second[w];
    }
  }
  return rank;
}

// Exact rank over the rationals by fraction-free elimination.
inline long long rank_q(const SparseMat& m, const std::set<int>& dead_rows,
                        const std::set<int>& dead_cols) {
  std::map<int, int> colid;
  std::map<int, int> rowid;
  for (auto& [r, row] : m.rows) {
    if (dead_rows.count(r)) continue;
    for (auto& [c, val] : row) {
      if (dead_cols.count(c) || val == 0) continue;
      if (!colid.count(c)) colid[c] = static_cast<int>(colid.size());
      if (!rowid.count(r)) rowid[r] = static_cast<int>(rowid.size());
    }
  }
  int R = static_cast<int>(rowid.size()), C = static_cast<int>(colid.size());
  if (R == 0 || C == 0) return 0;
  std::vector<std::vector<int128>> a(R, std::vector<int128>(C, 0));
  for (auto& [r, row] : m.rows) {
    if (!rowid.count(r)) continue;
    for (auto& [c, val] : row)
      if (colid.count(c)) a[rowid[r]][colid[c]] = val;
  }
  int rank = 0;
  int128 prev = 1;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int r = rank; r < R; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < R; ++r) {
      for (int c2 = col + 1; c2 < C; ++c2)
        a[r][c2] = (a[rank][col] * a[r][c2] - a[r][col] * a[rank][c2]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace detail_kh

namespace detail_kh {

inline std::set<int> quantum_gradings(const KhComplex& kh) {
  std::set<int> js;
  size_t states = size_t(1) << kh.crossings();
  for (size_t v = 0; v < states; ++v) {
    int k = kh.circles(v);
    for (int m = 0; m <= k; ++m)
      js.insert(2 * m - k + __builtin_popcountll(v) + kh.n_pos() - 2 * kh.n_neg());
  }
  return js;
}

inline JComplex build_jcomplex(const KhComplex& kh, int j) {
  int n = kh.crossings();
  size_t states = size_t(1) << n;
  JComplex jc;
  std::map<int, long long> next_id;
  std::vector<std::unordered_map<uint64_t, int>> ids(states);
  for (size_t v = 0; v < states; ++v) {
    int k = kh.circles(v);
    int i = kh.grade_i(v);
    int shift = __builtin_popcountll(v) + kh.n_pos() - 2 * kh.n_neg();
    int twice_m = j - shift + k;
    if (twice_m < 0 || twice_m % 2 || twice_m / 2 > k) continue;
    int m = twice_m / 2;
    if (m == 0) {
      ids[v][0] = static_cast<int>(next_id[i]++);
      continue;
    }
    // masks of popcount m over k bits
    uint64_t mask = (uint64_t(1) << m) - 1;
    uint64_t limit = uint64_t(1) << k;
    while (mask < limit) {
      ids[v][mask] = static_cast<int>(next_id[i]++);
      uint64_t c = mask & -mask, r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
  for (auto& [i, cnt] : next_id) jc.dims[i] = cnt;

  for (size_t v = 0; v < states; ++v) {
    if (ids[v].empty()) continue;
    int i = kh.grade_i(v);
    for (int c = 0; c < n; ++c) {
      if (v >> c & 1) continue;
      uint64_t w = v | (uint64_t(1) << c);
      int sign = KhComplex::edge_sign(v, c);
      auto [x, y] = kh.incident(v, c);
      auto map_to_w = kh.transport(v, c);
      auto target = [&](uint64_t wmask) {
        auto it = ids[w].find(wmask);
        if (it == ids[w].end()) throw diagram_error("khovanov: grading bookkeeping broke");
        return it->second;
      };
      if (x != y) {
        // merge x,y -> z:  m(1,1)=1, m(1,x)=m(x,1)=x, m(x,x)=0
        int z = kh.incident(w, c).first;
        for (auto& [mask, id] : ids[v]) {
          bool lx = mask >> x & 1, ly = mask >> y & 1;
          if (!lx && !ly) continue;
          uint64_t wmask = 0;
          for (int cc = 0; cc < kh.circles(v); ++cc) {
            if (cc == x || cc == y) continue;
            if (mask >> cc & 1) wmask |= uint64_t(1) << map_to_w[cc];
          }
          if (lx && ly) wmask |= uint64_t(1) << z;
          jc.diff[i].add(target(wmask), id, sign);
        }
      } else {
        // split x -> z1, z2:  Delta(1) = 1 x + x 1, Delta(x) = x x
        auto [z1, z2] = kh.incident(w, c);
        for (auto& [mask, id] : ids[v]) {
          bool lx = mask >> x & 1;
          uint64_t base = 0;
          for (int cc = 0; cc < kh.circles(v); ++cc) {
            if (cc == x) continue;
            if (mask >> cc & 1) base |= uint64_t(1) << map_to_w[cc];
          }
          if (lx) {
            jc.diff[i].add(target(base | (uint64_t(1) << z1)), id, sign);
            jc.diff[i].add(target(base | (uint64_t(1) << z2)), id, sign);
          } else {
            jc.diff[i].add(target(base), id, sign);
          }
        }
      }
    }
  }
  return jc;
}

}  // namespace detail_kh

// Exact check that consecutive differentials compose to zero.
inline bool d_squared_is_zero(const KhComplex& kh) {
  using namespace detail_kh;
  for (int j : quantum_gradings(kh)) {
    JComplex jc = build_jcomplex(kh, j);
    for (auto& [i, m1] : jc.diff) {
      auto it2 = jc.diff.find(i + 1);
      if (it2 == jc.diff.end()) continue;
      const SparseMat& m2 = it2->second;
      // (m2 * m1)[r][c]: m1 rows live in C_{i+1}, the column space of m2
      std::map<std::pair<int, int>, long long> prod;
      for (auto& [mid, row1] : m1.rows) {
        auto mcol = m2.cols.find(mid);
        if (mcol == m2.cols.end()) continue;
        for (int r : mcol->second) {
          long long b = m2.rows.at(r).at(mid);
          for (auto& [c, a] : row1) prod[{r, c}] += b * a;
        }
      }
      for (auto& [rc, val] : prod)
        if (val != 0) return false;
    }
  }
  return true;
}

namespace detail_kh {

// Single pass over all generators and cube edges, bucketing into per-j
// complexes; direct id lookups instead of hashing.
inline std::map<int, JComplex> build_all_blocks(const KhComplex& kh) {
  int n = kh.crossings();
  size_t states = size_t(1) << n;
  std::map<int, JComplex> out;
  std::map<std::pair<int, int>, long long> next_id;  // (i, j) -> counter

  std::vector<size_t> offset(states + 1, 0);
  for (size_t v = 0; v < states; ++v) offset[v + 1] = offset[v] + (size_t(1) << kh.circles(v));
  std::vector<int> gid(offset[states]);

  for (size_t v = 0; v < states; ++v) {
    int k = kh.circles(v);
    int i = kh.grade_i(v);
    int base_j = __builtin_popcountll(v) + kh.n_pos() - 2 * kh.n_neg() - k;
    std::vector<long long*> counter(k + 1);
    for (int p = 0; p <= k; ++p) counter[p] = &next_id[{i, base_j + 2 * p}];
    for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask)
      gid[offset[v] + mask] = static_cast<int>((*counter[__builtin_popcountll(mask)])++);
  }
  for (auto& [ij, cnt] : next_id) out[ij.second].dims[ij.first] = cnt;

  for (size_t v = 0; v < states; ++v) {
    int k = kh.circles(v);
    int i = kh.grade_i(v);
    int base_j = __builtin_popcountll(v) + kh.n_pos() - 2 * kh.n_neg() - k;
    for (int c = 0; c < n; ++c) {
      if (v >> c & 1) continue;
      uint64_t w = v | (uint64_t(1) << c);
      int sign = KhComplex::edge_sign(v, static_cast<int>(c));
      auto [x, y] = kh.incident(v, c);
      auto map_to_w = kh.transport(v, c);
      std::vector<SparseMat*> mat(k + 1);
      for (int p = 0; p <= k; ++p) mat[p] = &out[base_j + 2 * p].diff[i];
      if (x != y) {
        int z = kh.incident(w, c).first;
        for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
          bool lx = mask >> x & 1, ly = mask >> y & 1;
          if (!lx && !ly) continue;
          uint64_t wmask = 0;
          for (int cc = 0; cc < k; ++cc) {
            if (cc == x || cc == y) continue;
            if (mask >> cc & 1) wmask |= uint64_t(1) << map_to_w[cc];
          }
          if (lx && ly) wmask |= uint64_t(1) << z;
          mat[__builtin_popcountll(mask)]->add(gid[offset[w] + wmask], gid[offset[v] + mask],
                                               sign);
        }
      } else {
        auto [z1, z2] = kh.incident(w, c);
        for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
          bool lx = mask >> x & 1;
          uint64_t base = 0;
          for (int cc = 0; cc < k; ++cc) {
            if (cc == x) continue;
            if (mask >> cc & 1) base |= uint64_t(1) << map_to_w[cc];
          }
          SparseMat* m = mat[__builtin_popcountll(mask)];
          int col = gid[offset[v] + mask];
          if (lx) {
            m->add(gid[offset[w] + (base | (uint64_t(1) << z1))], col, sign);
            m->add(gid[offset[w] + (base | (uint64_t(1) << z2))], col, sign);
          } else {
            m->add(gid[offset[w] + base], col, sign);
          }
        }
      }
    }
  }
  return out;
}

inline void read_ranks(const JComplex& jc, int j, Coeff coeff, RankTable& table) {
  for (auto& [i, dim] : jc.dims) {
    if (dim <= 0) continue;
    auto din = jc.diff.find(i - 1);
    auto dout = jc.diff.find(i);
    static const std::set<int> none;
    auto deadof = [&](int lvl) -> const std::set<int>& {
      auto it = jc.dead.find(lvl);
      return it == jc.dead.end() ? none : it->second;
    };
    long long rin = 0, rout = 0;
    if (din != jc.diff.end())
      rin = coeff == Coeff::f2 ? rank_f2(din->second, deadof(i), deadof(i - 1))
                               : rank_q(din->second, deadof(i), deadof(i - 1));
    if (dout != jc.diff.end())
      rout = coeff == Coeff::f2 ? rank_f2(dout->second, deadof(i + 1), deadof(i))
                                : rank_q(dout->second, deadof(i + 1), deadof(i));
    long long h = dim - rin - rout;
    if (h > 0) table.rank[{i, j}] = h;
  }
}

}  // namespace detail_kh

struct KhRanks {
  RankTable f2, rational;
};

// Both coefficient fields from one reduction over Z.
inline KhRanks khovanov_ranks_both(const KhComplex& kh) {
  using namespace detail_kh;
  KhRanks out;
  out.f2.coeff = Coeff::f2;
  out.rational.coeff = Coeff::rational;
  auto blocks = build_all_blocks(kh);
  for (auto& [j, jc] : blocks) {
    jc.reduce();
    read_ranks(jc, j, Coeff::f2, out.f2);
    read_ranks(jc, j, Coeff::rational, out.rational);
  }
  return out;
}

// Rank table over the requested coefficients.
inline RankTable khovanov_ranks(const KhComplex& kh, Coeff coeff) {
  using namespace detail_kh;
  RankTable table;
  table.coeff = coeff;
  auto blocks = build_all_blocks(kh);
  for (auto& [j, jc] : blocks) {
    jc.reduce();
    read_ranks(jc, j, coeff, table);
  }
  return table;
}

inline RankTable khovanov_ranks(const PlanarDiagram& d, Coeff coeff,
                                int cap = khovanov_default_cap()) {
  KhComplex kh(d, cap);
  return khovanov_ranks(kh, coeff);
}

}  // namespace qak
