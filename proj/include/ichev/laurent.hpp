#pragma once

#include <map>
#include <sstream>
#include <string>

#include "ichev/common.hpp"

namespace ichev {

// Sparse Laurent polynomial in q with integer coefficients; exponents may be
// rational while a computation is in flight, but finished results are plain
// Laurent polynomials and can be checked with integral().
class LaurentQ {
 public:
  LaurentQ() = default;

  static LaurentQ from_int(Int c) {
    LaurentQ p;
    if (c != 0) p.terms_[Rat(0)] = c;
    return p;
  }
  static LaurentQ q_power(const Rat& e, Int c = 1) {
    LaurentQ p;
    if (c != 0) p.terms_[e] = c;
    return p;
  }
  static LaurentQ one() { return from_int(1); }

  bool is_zero() const { return terms_.empty(); }
  bool integral() const {
    for (const auto& [e, c] : terms_)
      if (!is_integer(e)) return false;
    return true;
  }
  int num_terms() const { return (int)terms_.size(); }
  const std::map<Rat, Int>& terms() const { return terms_; }

  // Coefficient of q^e (0 if absent).
  Int coeff(const Rat& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  LaurentQ& operator+=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentQ& operator-=(const LaurentQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator-(const LaurentQ& a) {
    LaurentQ r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    LaurentQ r;
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  LaurentQ& operator*=(const LaurentQ& o) { return *this = *this * o; }

  void add_term(const Rat& e, Int c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentQ& o) const { return !(*this == o); }

  // Ascending exponents: "1 - q + 2q^2"; zero prints "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Int mag = c < 0 ? -c : c;
      if (first)
        out << (c < 0 ? "-" : "");
      else
        out << (c < 0 ? " - " : " + ");
      first = false;
      if (mag != 1 || e == Rat(0)) out << mag;
      if (e != Rat(0)) {
        out << "q";
        if (e != Rat(1)) {
          if (is_integer(e))
            out << "^" << e.numerator();
          else
            out << "^(" << to_string(e) << ")";
        }
      }
    }
    return out.str();
  }

 private:
  std::map<Rat, Int> terms_;
};

inline std::string to_string(const LaurentQ& p) { return p.str(); }

}  // namespace ichev
