#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "ichev/laurent.hpp"
#include "ichev/weyl.hpp"

namespace ichev {

// Algebra generated by translations t_mu and twists X^nu, mu, nu in P, with
// X^nu t_mu = q^{(mu,nu)} t_mu X^nu.  Elements are kept in the normal form
// sum of coeff(q) * t_mu X^nu with keys ordered by (mu, nu).
class HeisElt {
 public:
  using Key = std::pair<Coords, Coords>;  // (translation mu, twist nu)

  explicit HeisElt(const RootSystem& rs) : rs_(&rs) {}

  static HeisElt zero(const RootSystem& rs) { return HeisElt(rs); }
  static HeisElt one(const RootSystem& rs) { return monomial(rs, Coords::zero(rs.rank()), Coords::zero(rs.rank())); }
  static HeisElt t(const RootSystem& rs, const Coords& mu) {
    return monomial(rs, mu, Coords::zero(rs.rank()));
  }
  static HeisElt x(const RootSystem& rs, const Coords& nu) {
    return monomial(rs, Coords::zero(rs.rank()), nu);
  }
  static HeisElt monomial(const RootSystem& rs, const Coords& mu, const Coords& nu,
                          LaurentQ c = LaurentQ::one()) {
    HeisElt h(rs);
    if (!c.is_zero()) h.terms_[{mu, nu}] = std::move(c);
    return h;
  }
  static HeisElt scalar(const RootSystem& rs, LaurentQ c) {
    return monomial(rs, Coords::zero(rs.rank()), Coords::zero(rs.rank()), std::move(c));
  }

  const RootSystem& rs() const { return *rs_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return (int)terms_.size(); }
  const std::map<Key, LaurentQ>& terms() const { return terms_; }

  LaurentQ coeff(const Coords& mu, const Coords& nu) const {
    auto it = terms_.find({mu, nu});
    return it == terms_.end() ? LaurentQ() : it->second;
  }

  void add_term(const Coords& mu, const Coords& nu, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(Key{mu, nu}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HeisElt& operator+=(const HeisElt& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  HeisElt& operator-=(const HeisElt& o) {
    check_same(o);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend HeisElt operator+(HeisElt a, const HeisElt& b) { return a += b; }
  friend HeisElt operator-(HeisElt a, const HeisElt& b) { return a -= b; }
  friend HeisElt operator-(const HeisElt& a) {
    HeisElt r(*a.rs_);
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
  }

  // (t_a X^b)(t_c X^d) = q^{(c,b)} t_{a+c} X^{b+d}.
  friend HeisElt operator*(const HeisElt& a, const HeisElt& b) {
    a.check_same(b);
    HeisElt r(*a.rs_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        LaurentQ c = ca * cb * LaurentQ::q_power(a.rs_->pairing(kb.first, ka.second));
        r.add_term(ka.first + kb.first, ka.second + kb.second, c);
      }
    return r;
  }
  HeisElt& operator*=(const HeisElt& o) { return *this = *this * o; }

  bool operator==(const HeisElt& o) const { return rs_ == o.rs_ && terms_ == o.terms_; }
  bool operator!=(const HeisElt& o) const { return !(*this == o); }

  // Every q-exponent an integer?
  bool integral() const {
    for (const auto& [k, c] : terms_)
      if (!c.integral()) return false;
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      bool unit = c == LaurentQ::one();
      bool plain = c.num_terms() == 1 && !c.str().starts_with("-");
      if (!unit) out << (plain ? c.str() : "(" + c.str() + ")");
      bool has_t = !k.first.is_zero(), has_x = !k.second.is_zero();
      if (!has_t && !has_x) {
        if (unit) out << "1";
        continue;
      }
      if (!unit) out << " ";
      if (has_t) out << "t_(" << to_string(k.first) << ")";
      if (has_t && has_x) out << " ";
      if (has_x) out << "X^(" << to_string(k.second) << ")";
    }
    return out.str();
  }

 private:
  void check_same(const HeisElt& o) const {
    if (rs_ != o.rs_) throw invalid_argument_error("mixed root systems in Heisenberg arithmetic");
  }

  const RootSystem* rs_;
  std::map<Key, LaurentQ> terms_;
};

inline std::string to_string(const HeisElt& h) { return h.str(); }

// q t_beta X^beta for a root beta; these commute pairwise.
inline HeisElt tilde_x(const RootSystem& rs, SignedRoot beta) {
  Coords b = rs.root_fund(beta);
  return HeisElt::monomial(rs, b, b, LaurentQ::q_power(Rat(1)));
}

// Index of a K-theory basis class [O(w t_trans)(bundle)].
struct KIndex {
  WeylElt w;
  Coords trans;
  Coords bundle;

  bool operator<(const KIndex& o) const {
    Coords a = w.key(), b = o.w.key();
    if (a != b) return a < b;
    if (trans != o.trans) return trans < o.trans;
    return bundle < o.bundle;
  }
  bool operator==(const KIndex& o) const {
    return w == o.w && trans == o.trans && bundle == o.bundle;
  }
};

inline std::string to_string(const KIndex& k) {
  std::ostringstream out;
  out << "[O(" << word_to_string(reduced_word(k.w));
  if (!k.trans.is_zero()) out << " | t: " << to_string(k.trans);
  out << ")";
  if (!k.bundle.is_zero()) out << "(" << to_string(k.bundle) << ")";
  out << "]";
  return out.str();
}

// A finite combination of basis classes, acted on by HeisElt from the right:
//   [O(x)(lam)] . X^nu = [O(x)(lam + nu)]
//   [O(x)(lam)] . t_mu = q^{(mu,lam)} [O(x t_{-w0 mu})(lam)]
class KClass {
 public:
  explicit KClass(const RootSystem& rs) : rs_(&rs) {}

  static KClass basis_element(const RootSystem& rs, const WeylElt& w,
                              LaurentQ c = LaurentQ::one()) {
    KClass k(rs);
    k.add_term({w, Coords::zero(rs.rank()), Coords::zero(rs.rank())}, std::move(c));
    return k;
  }
  static KClass term(const RootSystem& rs, const KIndex& idx, LaurentQ c = LaurentQ::one()) {
    KClass k(rs);
    k.add_term(idx, std::move(c));
    return k;
  }

  const RootSystem& rs() const { return *rs_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return (int)terms_.size(); }
  const std::map<KIndex, LaurentQ>& terms() const { return terms_; }

  LaurentQ coeff(const KIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? LaurentQ() : it->second;
  }

  void add_term(const KIndex& idx, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(idx, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  KClass& operator+=(const KClass& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  KClass& operator-=(const KClass& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(const LaurentQ& c, KClass a) {
    KClass r(*a.rs_);
    for (const auto& [k, v] : a.terms_) r.add_term(k, c * v);
    return r;
  }

  bool operator==(const KClass& o) const { return terms_ == o.terms_; }
  bool operator!=(const KClass& o) const { return !(*this == o); }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out << " + ";
      first = false;
      if (c != LaurentQ::one()) {
        bool plain = c.num_terms() == 1 && !c.str().starts_with("-");
        out << (plain ? c.str() : "(" + c.str() + ")") << " ";
      }
      out << to_string(k);
    }
    return out.str();
  }

 private:
  const RootSystem* rs_;
  std::map<KIndex, LaurentQ> terms_;
};

inline std::string to_string(const KClass& k) { return k.str(); }

// Right action, term by term over the normal-form monomials of h.
inline KClass kclass_act(const KClass& c, const HeisElt& h) {
  const RootSystem& rs = c.rs();
  const Weyl& W = get_weyl(rs);
  KClass out(rs);
  for (const auto& [idx, kc] : c.terms())
    for (const auto& [mono, hc] : h.terms()) {
      const Coords& mu = mono.first;
      const Coords& nu = mono.second;
      LaurentQ coeff = kc * hc * LaurentQ::q_power(rs.pairing(mu, idx.bundle));
      out.add_term({idx.w, idx.trans - W.w0().apply(mu), idx.bundle + nu}, coeff);
    }
  return out;
}

// Module form: coordinates of a class in the free basis {[O(w)] : w in W},
// i.e. a map w -> h_w with  class = sum_w [O(w)] . h_w.
using ModuleForm = std::map<Coords, std::pair<WeylElt, HeisElt>>;

inline void module_add(ModuleForm& m, const WeylElt& w, const HeisElt& h) {
  if (h.terms().empty()) return;
  auto [it, fresh] = m.emplace(w.key(), std::make_pair(w, h));
  if (fresh) return;
  it->second.second += h;
  if (it->second.second.terms().empty()) m.erase(it);
}

inline KClass to_basis_form(const RootSystem& rs, const ModuleForm& m) {
  KClass out(rs);
  for (const auto& [key, wh] : m) {
    (void)key;
    out += kclass_act(KClass::basis_element(rs, wh.first), wh.second);
  }
  return out;
}

// Inverse of to_basis_form: [O(w t_xi)(lam)] = [O(w)] . t_{-w0 xi} X^lam, and
// the q-power in the t-action vanishes on bundle weight 0, so coefficients
// carry over unchanged.  Requires every translation part to lie in the root
// lattice.
inline ModuleForm to_module_form(const KClass& c) {
  const RootSystem& rs = c.rs();
  const Weyl& W = get_weyl(rs);
  ModuleForm out;
  for (const auto& [idx, coeff] : c.terms()) {
    if (!rs.in_root_lattice(idx.trans))
      throw invalid_argument_error("class has a translation part outside the root lattice");
    Coords mu = -W.w0().apply(idx.trans);
    auto [it, fresh] = out.emplace(idx.w.key(), std::make_pair(idx.w, HeisElt::zero(rs)));
    (void)fresh;
    it->second.second.add_term(mu, idx.bundle, coeff);
  }
  return out;
}

}  // namespace ichev
