#pragma once

// Conway notation: abstract syntax, parser, renderer.
//
// Grammar, matching the source tables:
//   link      := POLYID fills | fills-with-dots-or-colons (implicit 6*) | tangle
//   fills     := items separated by '.', a ':' acting as '.1.'; empty item = 1;
//                missing trailing items default to 1
//   tangle    := part (',' part)*              ramification when >1 part
//   part      := product ('+' product?)*       trailing '+' adds a single twist
//   product   := factor+                        juxtaposition
//   factor    := signed digit run | '-'? '(' tangle ')'
// A digit run is one rational tangle, one coefficient per digit; a leading
// '-' distributes over the whole run ("-212" and "-2 -1 -2" agree). Runs
// whose nonzero coefficients mix signs are rejected rather than guessed.

#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "qak/diagram.hpp"

namespace qak {

struct conway_error : std::runtime_error {
  size_t position;
  conway_error(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct TangleExpr {
  enum class Kind { integer, rational, sum, product, ramification, polyhedron };
  Kind kind = Kind::integer;
  int n = 0;                      // integer
  std::vector<int> coeffs;        // rational
  std::vector<TangleExpr> parts;  // sum / product / ramification / polyhedron slots
  std::string poly_id;

  static TangleExpr integer(int v) {
    TangleExpr e;
    e.kind = Kind::integer;
    e.n = v;
    return e;
  }
  static TangleExpr rational(std::vector<int> c) {
    TangleExpr e;
    e.kind = Kind::rational;
    e.coeffs = std::move(c);
    return e;
  }
  static TangleExpr node(Kind k, std::vector<TangleExpr> parts) {
    TangleExpr e;
    e.kind = k;
    e.parts = std::move(parts);
    return e;
  }
  static TangleExpr polyhedron(std::string id, std::vector<TangleExpr> slots) {
    TangleExpr e;
    e.kind = Kind::polyhedron;
    e.poly_id = std::move(id);
    e.parts = std::move(slots);
    return e;
  }

  bool operator==(const TangleExpr& o) const {
    if (kind != o.kind || n != o.n || coeffs != o.coeffs || poly_id != o.poly_id) return false;
    if (parts.size() != o.parts.size()) return false;
    for (size_t i = 0; i < parts.size(); ++i)
      if (!(parts[i] == o.parts[i])) return false;
    return true;
  }

  int crossing_count() const {
    switch (kind) {
      case Kind::integer: return n < 0 ? -n : n;
      case Kind::rational: {
        int t = 0;
        for (int c : coeffs) t += c < 0 ? -c : c;
        return t;
      }
      default: {
        int t = 0;
        for (auto& p : parts) t += p.crossing_count();
        return t;
      }
    }
  }

  // Coefficient-wise mirror.
  TangleExpr negated() const {
    TangleExpr e = *this;
    e.n = -e.n;
    for (int& c : e.coeffs) c = -c;
    for (auto& p : e.parts) p = p.negated();
    return e;
  }
};

namespace detail {

class ConwayParser {
 public:
  explicit ConwayParser(const std::string& text) : s_(text) {}

  TangleExpr parse() {
    skip_ws();
    // explicit polyhedron id: digits followed by one or more '*'
    size_t save = i_;
    std::string id = try_poly_id();
    if (!id.empty()) {
      TangleExpr e = parse_fills(id);
      expect_end();
      return e;
    }
    i_ = save;
    // implicit 6*: a '.' or ':' at depth 0 outside any parentheses
    int depth = 0;
    for (size_t k = i_; k < s_.size(); ++k) {
      if (s_[k] == '(') ++depth;
      if (s_[k] == ')') --depth;
      if ((s_[k] == '.' || s_[k] == ':') && depth == 0) {
        TangleExpr e = parse_fills("6*");
        expect_end();
        return e;
      }
    }
    TangleExpr e = parse_tangle();
    expect_end();
    return e;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void expect_end() {
    skip_ws();
    if (i_ < s_.size()) throw conway_error("trailing input", i_);
  }

  std::string try_poly_id() {
    skip_ws();
    size_t k = i_;
    while (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) ++k;
    if (k == i_ || k >= s_.size() || s_[k] != '*') return "";
    while (k < s_.size() && s_[k] == '*') ++k;
    std::string id = s_.substr(i_, k - i_);
    i_ = k;
    return id;
  }

  TangleExpr parse_fills(const std::string& id) {
    // split the remainder on '.' at depth 0, with ':' meaning '.1.'
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (; i_ < s_.size(); ++i_) {
      char ch = s_[i_];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && ch == '.') {
        items.push_back(cur);
        cur.clear();
      } else if (depth == 0 && ch == ':') {
        items.push_back(cur);
        items.push_back("1");
        cur.clear();
      } else {
        cur += ch;
      }
    }
    items.push_back(cur);
    std::vector<TangleExpr> slots;
    for (auto& item : items) {
      bool blank = true;
      for (char ch : item)
        if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
      if (blank)
        slots.push_back(TangleExpr::integer(1));
      else
        slots.push_back(ConwayParser(item).parse_tangle_all());
    }
    // a lone leading default (from a leading '.') is a real slot; trailing
    // defaults are implied, so strip nothing here and let the builder pad
    return TangleExpr::polyhedron(id, std::move(slots));
  }

  TangleExpr parse_tangle_all() {
    TangleExpr e = parse_tangle();
    expect_end();
    return e;
  }

  TangleExpr parse_tangle() {
    std::vector<TangleExpr> parts;
    parts.push_back(parse_part());
    while (peek() == ',') {
      ++i_;
      parts.push_back(parse_part());
    }
    if (parts.size() == 1) return parts[0];
    return TangleExpr::node(TangleExpr::Kind::ramification, std::move(parts));
  }

  TangleExpr parse_part() {
    std::vector<TangleExpr> summands;
    summands.push_back(parse_product());
    while (peek() == '+') {
      ++i_;
      char c = peek();
      if (c == '\0' || c == ',' || c == ')' || c == '+')
        summands.push_back(TangleExpr::integer(1));
      else
        summands.push_back(parse_product());
    }
    if (summands.size() == 1) return summands[0];
    return TangleExpr::node(TangleExpr::Kind::sum, std::move(summands));
  }

  TangleExpr parse_product() {
    std::vector<TangleExpr> factors;
    while (true) {
      char c = peek();
      if (c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        factors.push_back(parse_factor());
      } else if (c == '-') {
        // minus starts a factor only at a factor boundary
        size_t save = i_;
        ++i_;
        char d = peek();
        i_ = save;
        if (d == '(' || std::isdigit(static_cast<unsigned char>(d)))
          factors.push_back(parse_factor());
        else
          throw conway_error("dangling '-'", i_);
      } else {
        break;
      }
    }
    if (factors.empty()) throw conway_error("expected a tangle", i_);
    if (factors.size() == 1) return factors[0];
    return TangleExpr::node(TangleExpr::Kind::product, std::move(factors));
  }

  TangleExpr parse_factor() {
    char c = peek();
    if (c == '-') {
      size_t save = i_;
      ++i_;
      if (peek() == '(') {
        TangleExpr inner = parse_paren();
        return inner.negated();
      }
      i_ = save;
    }
    if (c == '(') return parse_paren();
    return parse_run();
  }

  TangleExpr parse_paren() {
    skip_ws();
    if (s_[i_] != '(') throw conway_error("expected '('", i_);
    ++i_;
    TangleExpr e = parse_tangle();
    if (peek() != ')') throw conway_error("expected ')'", i_);
    ++i_;
    return e;
  }

  // One signed digit run = one rational tangle (or integer when length 1).
  TangleExpr parse_run() {
    std::vector<int> coeffs;
    bool first_negative = false;
    bool any_explicit_sign_later = false;
    bool first = true;
    while (true) {
      skip_ws();
      bool neg = false;
      size_t save = i_;
      if (i_ < s_.size() && s_[i_] == '-') {
        ++i_;
        skip_ws();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
          i_ = save;
          break;
        }
        neg = true;
      }
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        i_ = save;
        break;
      }
      if (!first && neg) any_explicit_sign_later = true;
      size_t run_start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      for (size_t k = run_start; k < i_; ++k) {
        int digit = s_[k] - '0';
        coeffs.push_back(neg ? -digit : digit);
      }
      if (first) first_negative = neg;
      first = false;
      // a run stops at '(' so "2(...)" is a product of two factors
      if (peek() == '(') break;
    }
    if (coeffs.empty()) throw conway_error("expected digits", i_);
    // leading minus distributes over the whole written tangle
    if (first_negative && !any_explicit_sign_later)
      for (int& c : coeffs) c = c > 0 ? -c : c;
    int pos = 0, neg = 0;
    for (int c : coeffs) {
      if (c > 0) ++pos;
      if (c < 0) ++neg;
    }
    if (pos && neg) throw conway_error("mixed-sign rational tangle", i_);
    if (pos + neg == 0 && coeffs.size() > 1)
      throw conway_error("all-zero rational tangle", i_);
    if (coeffs.size() == 1) return TangleExpr::integer(coeffs[0]);
    return TangleExpr::rational(std::move(coeffs));
  }
};

}  // namespace detail

inline TangleExpr parse_conway(const std::string& text) {
  if (text.empty()) throw conway_error("empty input", 0);
  TangleExpr e = detail::ConwayParser(text).parse();
  if (e.kind == TangleExpr::Kind::integer && e.n == 0)
    throw conway_error("the zero tangle is not a link", 0);
  return e;
}

namespace detail {

inline void render_expr(const TangleExpr& e, std::ostringstream& out, bool in_product);

inline void render_coeff(int c, std::ostringstream& out) {
  if (c < -9 || c > 9) throw std::runtime_error("coefficient out of printable range");
  out << c;
}

inline void render_expr(const TangleExpr& e, std::ostringstream& out, bool parenthesize) {
  using K = TangleExpr::Kind;
  switch (e.kind) {
    case K::integer:
      render_coeff(e.n, out);
      break;
    case K::rational:
      for (int c : e.coeffs) render_coeff(c, out);
      break;
    case K::sum: {
      bool first = true;
      for (auto& p : e.parts) {
        if (!first) out << "+";
        render_expr(p, out, true);
        first = false;
      }
      break;
    }
    case K::product:
      for (auto& p : e.parts) {
        bool wrap = p.kind == K::ramification || p.kind == K::sum;
        if (wrap) out << "(";
        render_expr(p, out, true);
        if (wrap) out << ")";
      }
      break;
    case K::ramification: {
      if (parenthesize) out << "(";
      bool first = true;
      for (auto& p : e.parts) {
        if (!first) out << ",";
        render_expr(p, out, true);
        first = false;
      }
      if (parenthesize) out << ")";
      break;
    }
    case K::polyhedron: {
      out << e.poly_id;
      bool first = true;
      for (auto& p : e.parts) {
        if (!first) out << ".";
        render_expr(p, out, true);
        first = false;
      }
      break;
    }
  }
}

}  // namespace detail

inline std::string render_conway(const TangleExpr& e) {
  std::ostringstream out;
  detail::render_expr(e, out, false);
  return out.str();
}

}  // namespace qak
