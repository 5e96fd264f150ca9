#pragma once

// Weyl-group elements as exact integer matrices acting on fundamental
// coordinates.  Products compose as functions: (u*v)(x) = u(v(x)), and a
// word [a,b,c] denotes s_a s_b s_c acting with s_c applied first.
//
// An element is determined by its canonical key w(rho).  Reduced words are
// always the lexicographically minimal ones, obtained by repeatedly taking
// the smallest left descent.  For the small ranks where the full group is
// tabulated (A1..A5, D4, D5) a Weyl context interns every element together
// with lengths, words and a full multiplication table.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ichev/root_system.hpp"

namespace ichev {

class WeylElt {
 public:
  WeylElt() : rs_(nullptr) {}

  static WeylElt identity(const RootSystem& rs) {
    WeylElt w(&rs);
    for (int i = 0; i < rs.rank(); ++i) w.at(i, i) = 1;
    return w;
  }

  // s_beta = 1 - fund(beta) rc(beta)^T  acting on fundamental coordinates.
  static WeylElt reflection(const RootSystem& rs, const SignedRoot& beta) {
    WeylElt w = identity(rs);
    Coords f = rs.root_fund(SignedRoot{beta.index, 1});
    Coords c = rs.root_rc(SignedRoot{beta.index, 1});
    for (int r = 0; r < rs.rank(); ++r)
      for (int j = 0; j < rs.rank(); ++j) w.at(r, j) -= f[r] * c[j];
    return w;
  }

  static WeylElt simple(const RootSystem& rs, int i) {
    return reflection(rs, SignedRoot{rs.simple_root_index(i), 1});
  }

  static WeylElt from_word(const RootSystem& rs, const std::vector<int>& word) {
    WeylElt w = identity(rs);
    for (int i : word) w = w * simple(rs, i);
    return w;
  }

  const RootSystem& rs() const { return *rs_; }
  int rank() const { return rs_->rank(); }

  Coords apply(const Coords& v) const {
    Coords out(rank());
    for (int i = 0; i < rank(); ++i) {
      Int s = 0;
      for (int j = 0; j < rank(); ++j) s += at(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  SignedRoot apply_root(const SignedRoot& b) const {
    return rs_->expect_root(apply(rs_->root_fund(b)));
  }

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b) {
    WeylElt out(a.rs_);
    int n = a.rank();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        Int aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  // M^{-1} = C M^T C^{-1}; computed integrally via the adjugate.
  WeylElt inverse() const {
    int n = rank();
    WeylElt t1(rs_), out(rs_);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int k = 0; k < n; ++k) s += rs_->cartan(i, k) * at(j, k);
        t1.at(i, j) = s;
      }
    Int det = rs_->cartan_det();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int k = 0; k < n; ++k) s += t1.at(i, k) * rs_->cartan_adjugate(k, j);
        if (s % det != 0) throw internal_error("Weyl inverse not integral");
        out.at(i, j) = s / det;
      }
    return out;
  }

  // Canonical key w(rho); a Weyl element is determined by it.
  Coords key() const {
    Coords out(rank());
    for (int i = 0; i < rank(); ++i) {
      Int s = 0;
      for (int j = 0; j < rank(); ++j) s += at(i, j);
      out[i] = s;
    }
    return out;
  }

  bool is_identity() const {
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const WeylElt& a, const WeylElt& b) {
    if (a.rank() != b.rank()) return false;
    for (int i = 0; i < a.rank(); ++i)
      for (int j = 0; j < a.rank(); ++j)
        if (a.at(i, j) != b.at(i, j)) return false;
    return true;
  }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }

  Int& at(int i, int j) { return m_[i * kMaxRank + j]; }
  Int at(int i, int j) const { return m_[i * kMaxRank + j]; }

 private:
  explicit WeylElt(const RootSystem* rs) : rs_(rs) { m_.fill(0); }
  const RootSystem* rs_;
  std::array<Int, kMaxRank * kMaxRank> m_{};
};

struct WeylEltHash {
  size_t operator()(const WeylElt& w) const { return CoordsHash()(w.key()); }
};

// --- basic statistics -------------------------------------------------------

inline Int weyl_length(const WeylElt& w) {
  Int len = 0;
  for (const Root& r : w.rs().positive_roots()) {
    Coords img = w.apply(r.fund);
    if (w.rs().expect_root(img).sign < 0) ++len;
  }
  return len;
}

// Inv(w) = {alpha > 0 : w^{-1} alpha < 0} = {-w(beta) : beta > 0, w(beta) < 0},
// returned as ascending positive-root indices.
inline std::vector<int> inversion_set(const WeylElt& w) {
  std::vector<int> out;
  const RootSystem& rs = w.rs();
  for (const Root& r : rs.positive_roots()) {
    SignedRoot img = rs.expect_root(w.apply(r.fund));
    if (img.sign < 0) out.push_back(img.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest i with l(s_i w) < l(w), i.e. alpha_i in Inv(w); -1 for identity.
inline int smallest_left_descent(const WeylElt& w) {
  const RootSystem& rs = w.rs();
  int best = -1;
  for (const Root& r : rs.positive_roots()) {
    SignedRoot img = rs.expect_root(w.apply(r.fund));
    if (img.sign < 0 && rs.root(img.index).height == 1) {
      for (int i = 0; i < rs.rank(); ++i)
        if (rs.root(img.index).rc[i] == 1 && (best < 0 || i < best)) best = i;
    }
  }
  return best;
}

// Lexicographically minimal reduced word (smallest-descent-first recursion).
inline std::vector<int> reduced_word(WeylElt w) {
  std::vector<int> out;
  for (;;) {
    int i = smallest_left_descent(w);
    if (i < 0) break;
    out.push_back(i);
    w = WeylElt::simple(w.rs(), i) * w;
  }
  return out;
}

inline std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(word[i] + 1);  // 1-based on the outside
  }
  return s;
}

// Minimal representative of the coset w W_J (J = set of 0-based nodes).
inline WeylElt min_coset_rep(WeylElt w, const std::vector<int>& J) {
  for (;;) {
    bool moved = false;
    for (int j : J) {
      Coords img = w.apply(w.rs().simple_root(j));
      if (w.rs().expect_root(img).sign < 0) {
        w = w * WeylElt::simple(w.rs(), j);
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
}

// Bruhat order via the descent recursion (the subword criterion applied
// letter-by-letter along the lex-min word of the larger element).
inline bool bruhat_leq(WeylElt u, WeylElt w) {
  Int lu = weyl_length(u), lw = weyl_length(w);
  while (true) {
    if (lu > lw) return false;
    if (lw == 0) return true;
    int i = smallest_left_descent(w);
    WeylElt si = WeylElt::simple(w.rs(), i);
    w = si * w;
    --lw;
    WeylElt su = si * u;
    Int lsu = weyl_length(su);
    if (lsu < lu) {
      u = su;
      lu = lsu;
    }
  }
}

inline bool bruhat_less(const WeylElt& u, const WeylElt& w) {
  return !(u == w) && bruhat_leq(u, w);
}

// --- group context ----------------------------------------------------------

// Per-root-system context: the longest element, and for small ranks
// (A1..A5, D4, D5) a full intern table with lengths, lex-min words and a
// complete multiplication table.  Everything is built eagerly so concurrent
// readers are safe afterwards.
class Weyl {
 public:
  explicit Weyl(const RootSystem& rs) : rs_(&rs) {
    w0_ = WeylElt::identity(rs);
    for (;;) {
      int pick = -1;
      for (int i = 0; i < rs.rank(); ++i) {
        if (rs.expect_root(w0_.apply(rs.simple_root(i))).sign > 0) {
          pick = i;
          break;
        }
      }
      if (pick < 0) break;
      w0_ = w0_ * WeylElt::simple(rs, pick);
    }
    char f = rs.type().family;
    interned_ = (f == 'A' && rs.rank() <= 5) || (f == 'D' && rs.rank() <= 5);
    if (interned_) intern();
  }

  const RootSystem& rs() const { return *rs_; }
  const WeylElt& w0() const { return w0_; }
  bool interned() const { return interned_; }

  int size() const {
    require_interned();
    return (int)elems_.size();
  }
  const std::vector<WeylElt>& elements() const {
    require_interned();
    return elems_;
  }
  int index_of(const WeylElt& w) const {
    require_interned();
    auto it = index_.find(w.key());
    if (it == index_.end()) throw internal_error("element not interned");
    return it->second;
  }

  Int length(const WeylElt& w) const {
    if (interned_) return lengths_[index_of(w)];
    return weyl_length(w);
  }
  std::vector<int> word(const WeylElt& w) const {
    if (interned_) {
      const auto& wd = words_[index_of(w)];
      return std::vector<int>(wd.begin(), wd.end());
    }
    return reduced_word(w);
  }
  WeylElt mul(const WeylElt& a, const WeylElt& b) const {
    if (interned_) return elems_[prod_[index_of(a) * elems_.size() + index_of(b)]];
    return a * b;
  }

 private:
  void require_interned() const {
    if (!interned_)
      throw invalid_argument_error("rank too large for full Weyl-group enumeration in type " +
                                   rs_->type().to_string());
  }

  void intern() {
    // BFS from the identity by right multiplication.
    std::unordered_map<Coords, int, CoordsHash> seen;
    std::vector<WeylElt> elems;
    elems.push_back(WeylElt::identity(*rs_));
    seen.emplace(elems[0].key(), 0);
    std::vector<WeylElt> simples;
    for (int i = 0; i < rs_->rank(); ++i) simples.push_back(WeylElt::simple(*rs_, i));
    for (size_t h = 0; h < elems.size(); ++h) {
      for (const WeylElt& s : simples) {
        WeylElt nxt = elems[h] * s;
        if (seen.emplace(nxt.key(), (int)elems.size()).second) elems.push_back(nxt);
      }
    }
    // Deterministic order: (length, canonical key).
    std::vector<std::pair<Int, int>> order;
    std::vector<Int> raw_len(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) raw_len[i] = weyl_length(elems[i]);
    for (size_t i = 0; i < elems.size(); ++i) order.push_back({raw_len[i], (int)i});
    std::sort(order.begin(), order.end(), [&](auto& a, auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return elems[a.second].key() < elems[b.second].key();
    });
    elems_.reserve(elems.size());
    for (auto& [len, idx] : order) {
      index_[elems[idx].key()] = (int)elems_.size();
      lengths_.push_back(len);
      elems_.push_back(elems[idx]);
    }
    size_t N = elems_.size();
    // Right multiplication by simples, then lex-min words from left descents.
    rmul_.assign(N * rs_->rank(), 0);
    for (size_t i = 0; i < N; ++i)
      for (int j = 0; j < rs_->rank(); ++j)
        rmul_[i * rs_->rank() + j] = index_.at((elems_[i] * simples[j]).key());
    words_.assign(N, {});
    for (size_t i = 1; i < N; ++i) {  // index 0 is the identity
      int d = smallest_left_descent(elems_[i]);
      int prev = index_.at((simples[d] * elems_[i]).key());
      words_[i].reserve(words_[prev].size() + 1);
      words_[i].push_back((uint8_t)d);
      words_[i].insert(words_[i].end(), words_[prev].begin(), words_[prev].end());
    }
    // Full multiplication table, folding the right factor's word.
    prod_.assign(N * N, 0);
    for (size_t a = 0; a < N; ++a)
      for (size_t b = 0; b < N; ++b) {
        uint32_t acc = (uint32_t)a;
        for (uint8_t letter : words_[b]) acc = rmul_[acc * rs_->rank() + letter];
        prod_[a * N + b] = acc;
      }
  }

  const RootSystem* rs_;
  WeylElt w0_;
  bool interned_ = false;
  std::vector<WeylElt> elems_;
  std::unordered_map<Coords, int, CoordsHash> index_;
  std::vector<Int> lengths_;
  std::vector<std::vector<uint8_t>> words_;
  std::vector<uint32_t> rmul_;
  std::vector<uint32_t> prod_;
};

inline const Weyl& get_weyl(const RootSystem& rs) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<Weyl>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rs.type().family, rs.type().rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<Weyl>(rs)).first;
  return *it->second;
}

}  // namespace ichev
