#pragma once

// Exact one-variable Laurent polynomials over the integers.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qak {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long long coeff, int exp) {
    LaurentPoly p;
    if (coeff) p.c_[exp] = coeff;
    return p;
  }

  const std::map<int, long long>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long long coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? 0 : it->second;
  }

  void add(int exp, long long coeff) {
    if (!coeff) return;
    auto [it, fresh] = c_.try_emplace(exp, 0);
    it->second += coeff;
    if (!it->second) c_.erase(it);
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, k] : o.c_) r.add(e, k);
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, k] : o.c_) r.add(e, -k);
    return r;
  }
  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, k1] : c_)
      for (auto& [e2, k2] : o.c_) r.add(e1 + e2, k1 * k2);
    return r;
  }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }

  // Exact division; throws when the divisor does not divide.
  LaurentPoly div_exact(const LaurentPoly& den) const {
    if (den.is_zero()) throw std::runtime_error("laurent division by zero");
    LaurentPoly num = *this, q;
    auto lead = *den.c_.begin();  // lowest exponent term
    while (!num.is_zero()) {
      auto low = *num.c_.begin();
      if (low.second % lead.second) throw std::runtime_error("laurent division not exact");
      long long k = low.second / lead.second;
      int e = low.first - lead.first;
      q.add(e, k);
      for (auto& [de, dk] : den.c_) num.add(e + de, -k * dk);
    }
    return q;
  }

  // Value at x = i in the Gaussian integers, as (re, im).
  std::pair<long long, long long> eval_at_i() const {
    long long re = 0, im = 0;
    for (auto& [e, k] : c_) {
      int r = ((e % 4) + 4) % 4;
      if (r == 0) re += k;
      if (r == 1) im += k;
      if (r == 2) re -= k;
      if (r == 3) im -= k;
    }
    return {re, im};
  }

  std::string str(const std::string& var = "q") const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, k] : c_) {
      long long a = k;
      if (!first) out << (a < 0 ? " - " : " + ");
      else if (a < 0) out << "-";
      first = false;
      long long mag = a < 0 ? -a : a;
      if (mag != 1 || e == 0) out << mag;
      if (e != 0) {
        out << var;
        if (e != 1) out << "^" << e;
      }
    }
    return out.str();
  }

 private:
  std::map<int, long long> c_;  // exponent -> coefficient, no zeros
};

}  // namespace qak
