#pragma once

// Rational tangle extension of a quasi-alternating crossing.
//
// A crossing of slope sign eps may be replaced by an alternating rational
// tangle C(b1..bm) containing it when eps*bi >= 1 for every i. The rewrite
// splices the tangle into the twist region that held the crossing: the
// coefficient a_t loses one crossing and gains the tangle in series, so
// (..., a_t, ...) becomes (..., b1, ..., b_{m-1}, b_m + a_t - eps, ...).
// Determinants grow strictly; the search confirms the extension stays
// quasi-alternating on the fixtures.

#include <optional>
#include <string>
#include <vector>

#include "qak/builder.hpp"
#include "qak/notation.hpp"
#include "qak/search.hpp"

namespace qak {

struct extend_error : std::runtime_error {
  int failing_index;  // 1-based coefficient index violating the condition, or 0
  extend_error(const std::string& what, int idx = 0)
      : std::runtime_error(what), failing_index(idx) {}
};

// Names one crossing of an expression: the integer/rational leaf in build
// order and the crossing's index within that leaf.
struct CrossingLocator {
  int leaf = 0;
  int index = 0;
};

namespace detail_extend {

struct LeafRef {
  TangleExpr* node = nullptr;
  int coeff_pos = -1;  // which coefficient holds the crossing
  int eps = 0;
};

inline bool locate(TangleExpr& e, const TemplateLibrary& lib, const CrossingLocator& loc,
                   int& counter, LeafRef& out) {
  using K = TangleExpr::Kind;
  switch (e.kind) {
    case K::integer:
    case K::rational: {
      int my = counter++;
      if (my != loc.leaf) return false;
      std::vector<int> coeffs =
          e.kind == K::integer ? std::vector<int>{e.n} : e.coeffs;
      int k = loc.index;
      for (size_t t = 0; t < coeffs.size(); ++t) {
        int width = coeffs[t] < 0 ? -coeffs[t] : coeffs[t];
        if (k < width) {
          out.node = &e;
          out.coeff_pos = static_cast<int>(t);
          out.eps = coeffs[t] > 0 ? 1 : -1;
          return true;
        }
        k -= width;
      }
      throw extend_error("crossing index out of range for the named leaf");
    }
    case K::polyhedron: {
      const PolyTemplate* t = lib.find(e.poly_id);
      if (!t) throw build_error("unknown polyhedron '" + e.poly_id + "'");
      for (int v = 0; v < t->vertices; ++v) {
        if (v < static_cast<int>(e.parts.size())) {
          if (locate(e.parts[v], lib, loc, counter, out)) return true;
        } else {
          // implicit unit fill consumes a leaf ordinal
          if (counter++ == loc.leaf)
            throw extend_error("locator names an implicit polyhedron fill");
        }
      }
      return false;
    }
    default:
      for (auto& p : e.parts)
        if (locate(p, lib, loc, counter, out)) return true;
      return false;
  }
}

}  // namespace detail_extend

// Replace the located crossing with the rational tangle tau.
inline TangleExpr extend_qa(const TangleExpr& expr, const CrossingLocator& loc,
                            const TangleExpr& tau, const TemplateLibrary& lib) {
  std::vector<int> tau_coeffs;
  if (tau.kind == TangleExpr::Kind::integer)
    tau_coeffs = {tau.n};
  else if (tau.kind == TangleExpr::Kind::rational)
    tau_coeffs = tau.coeffs;
  else
    throw extend_error("extension tangle must be rational");

  TangleExpr out = expr;
  detail_extend::LeafRef ref;
  int counter = 0;
  if (!detail_extend::locate(out, lib, loc, counter, ref))
    throw extend_error("locator does not name a crossing of the expression");

  for (size_t i = 0; i < tau_coeffs.size(); ++i)
    if (ref.eps * tau_coeffs[i] < 1)
      throw extend_error("extension condition violated: eps*a_" + std::to_string(i + 1) +
                             " = " + std::to_string(ref.eps * tau_coeffs[i]) + " < 1",
                         static_cast<int>(i + 1));

  std::vector<int> coeffs = ref.node->kind == TangleExpr::Kind::integer
                                ? std::vector<int>{ref.node->n}
                                : ref.node->coeffs;
  std::vector<int> spliced;
  for (size_t t = 0; t < coeffs.size(); ++t) {
    if (static_cast<int>(t) != ref.coeff_pos) {
      spliced.push_back(coeffs[t]);
      continue;
    }
    for (size_t i = 0; i < tau_coeffs.size(); ++i) {
      int b = tau_coeffs[i];
      if (i + 1 == tau_coeffs.size()) b += coeffs[t] - ref.eps;
      spliced.push_back(b);
    }
  }
  if (spliced.size() == 1)
    *ref.node = TangleExpr::integer(spliced[0]);
  else
    *ref.node = TangleExpr::rational(std::move(spliced));
  return out;
}

struct FamilyEntry {
  int parameter;
  TangleExpr expr;
  Verdict verdict;
};

// Substitute single-digit values for the letter 'p' in a Conway pattern and
// run the search on each instance.
inline std::vector<FamilyEntry> generate_family(const std::string& pattern, int from, int to,
                                                const TemplateLibrary& lib,
                                                const SearchOptions& opt = {}) {
  std::vector<FamilyEntry> out;
  if (pattern.find('p') == std::string::npos)
    throw extend_error("pattern has no parameter 'p'");
  for (int p = from; p <= to; ++p) {
    if (p < 1 || p > 9) throw extend_error("parameter out of single-digit range");
    std::string instance = pattern;
    for (auto& ch : instance)
      if (ch == 'p') ch = static_cast<char>('0' + p);
    TangleExpr e = parse_conway(instance);
    Verdict v = search_qa(build_diagram(e, lib), opt);
    out.push_back(FamilyEntry{p, std::move(e), std::move(v)});
  }
  return out;
}

}  // namespace qak
