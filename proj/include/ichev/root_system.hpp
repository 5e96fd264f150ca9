#pragma once

// Simply-laced (ADE) root-system data: Cartan matrix and its exact inverse,
// the full set of positive roots in both coordinate systems, pairings under
// the normalization (alpha,alpha) = 2, and minuscule-weight queries.
//
// Conventions.  Weights are stored in fundamental-weight coordinates
// (entry i is <lambda, alpha_i^vee> = (lambda, alpha_i)); roots additionally
// carry simple-root coordinates and their height.  Roots and coroots are
// identified throughout.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ichev/common.hpp"

namespace ichev {

struct CartanType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 1;

  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }

  // Accepts exactly A1..A9, D4..D8, E6..E8.
  static CartanType parse(const std::string& s) {
    if (s.size() != 2) throw invalid_argument_error("bad Cartan type '" + s + "'");
    char f = s[0];
    int r = s[1] - '0';
    bool ok = (f == 'A' && r >= 1 && r <= 9) || (f == 'D' && r >= 4 && r <= 8) ||
              (f == 'E' && r >= 6 && r <= 8);
    if (!ok) throw invalid_argument_error("unsupported Cartan type '" + s + "'");
    return CartanType{f, r};
  }

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

struct Root {
  Coords rc;    // simple-root coordinates (all entries >= 0 for positive roots)
  Coords fund;  // fundamental coordinates, fund = C * rc
  Int height;   // sum of rc entries
};

// A root with a sign: +index encodes a positive root, sign -1 its negative.
struct SignedRoot {
  int index;
  int sign;  // +1 or -1

  friend bool operator==(const SignedRoot& a, const SignedRoot& b) {
    return a.index == b.index && a.sign == b.sign;
  }
};

class RootSystem {
 public:
  explicit RootSystem(CartanType t) : type_(t), n_(t.rank) {
    build_cartan();
    invert_cartan();
    build_roots();
    rho_ = Coords(n_);
    for (int i = 0; i < n_; ++i) rho_[i] = 1;
    compute_lattice_constant();
  }

  const CartanType& type() const { return type_; }
  int rank() const { return n_; }
  Int cartan(int i, int j) const { return cartan_[i][j]; }

  // Smallest e > 0 with e*(P,P) integral; the inverse-Cartan common denominator.
  Int lattice_constant() const { return e_; }

  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive_roots() const { return (int)roots_.size(); }
  const Root& root(int i) const { return roots_[i]; }
  Coords simple_root(int i) const { return roots_[simple_index_[i]].fund; }
  int simple_root_index(int i) const { return simple_index_[i]; }
  int highest_root_index() const { return (int)roots_.size() - 1; }
  const Coords& rho() const { return rho_; }
  Coords fundamental_weight(int i) const { return Coords::unit(n_, i); }

  Coords root_fund(const SignedRoot& r) const {
    Coords c = roots_[r.index].fund;
    if (r.sign < 0) c = -c;
    return c;
  }
  Coords root_rc(const SignedRoot& r) const {
    Coords c = roots_[r.index].rc;
    if (r.sign < 0) c = -c;
    return c;
  }
  Int height(const SignedRoot& r) const { return r.sign * roots_[r.index].height; }

  // Recognize a fundamental-coordinate vector as a (signed) root.
  std::optional<SignedRoot> find_root(const Coords& fund) const {
    auto it = by_fund_.find(fund);
    if (it == by_fund_.end()) return std::nullopt;
    return it->second;
  }
  SignedRoot expect_root(const Coords& fund) const {
    auto r = find_root(fund);
    if (!r) throw internal_error("expected a root, got (" + ichev::to_string(fund) + ")");
    return *r;
  }

  // Exact pairing on P x P via the inverse Cartan matrix.
  Rat pairing(const Coords& a, const Coords& b) const {
    Rat s(0);
    for (int i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n_; ++j)
        if (b[j] != 0) s += Rat(a[i]) * cartan_inv_[i][j] * Rat(b[j]);
    }
    return s;
  }

  // (lambda, beta) for lambda in P (fundamental coords) and beta a root:
  // componentwise dot against the root's simple-root coordinates.
  Int pairing_root(const Coords& lambda_fund, const SignedRoot& beta) const {
    return beta.sign * dot(lambda_fund, roots_[beta.index].rc);
  }

  // s_beta(v) = v - (v,beta) beta  (roots = coroots here).
  Coords reflect(const Coords& v_fund, const SignedRoot& beta) const {
    Int p = pairing_root(v_fund, beta);
    return v_fund - p * root_fund(beta);
  }
  Coords reflect_simple(const Coords& v_fund, int i) const {
    return reflect(v_fund, SignedRoot{simple_index_[i], 1});
  }

  // Convert fundamental coordinates to simple-root coordinates when the
  // weight lies in the root lattice Q; nullopt otherwise.
  std::optional<Coords> to_root_coords(const Coords& fund) const {
    Coords out(n_);
    for (int i = 0; i < n_; ++i) {
      Int s = 0;
      for (int j = 0; j < n_; ++j) s += cartan_adj_[i][j] * fund[j];
      if (s % cartan_det_ != 0) return std::nullopt;
      out[i] = s / cartan_det_;
    }
    return out;
  }
  bool in_root_lattice(const Coords& fund) const { return to_root_coords(fund).has_value(); }
  Coords from_root_coords(const Coords& rc) const {
    Coords out(n_);
    for (int i = 0; i < n_; ++i) {
      Int s = 0;
      for (int j = 0; j < n_; ++j) s += cartan_[i][j] * rc[j];
      out[i] = s;
    }
    return out;
  }

  bool is_dominant(const Coords& fund) const {
    for (int i = 0; i < n_; ++i)
      if (fund[i] < 0) return false;
    return true;
  }

  // lambda is minuscule iff (lambda, beta) in {-1,0,1} for all positive roots.
  bool is_minuscule(const Coords& fund) const {
    for (const Root& r : roots_) {
      Int p = dot(fund, r.rc);
      if (p < -1 || p > 1) return false;
    }
    return true;
  }

  // Indices i with varpi_i minuscule (empty for E8).
  std::vector<int> minuscule_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (is_minuscule(fundamental_weight(i))) out.push_back(i);
    return out;
  }

  Int cartan_det() const { return cartan_det_; }
  Int cartan_adjugate(int i, int j) const { return cartan_adj_[i][j]; }

 private:
  void build_cartan() {
    auto link = [&](int i, int j) {
      cartan_[i][j] = -1;
      cartan_[j][i] = -1;
    };
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) cartan_[i][j] = (i == j) ? 2 : 0;
    switch (type_.family) {
      case 'A':
        for (int i = 0; i + 1 < n_; ++i) link(i, i + 1);
        break;
      case 'D':
        for (int i = 0; i + 1 < n_ - 1; ++i) link(i, i + 1);
        link(n_ - 3, n_ - 1);
        break;
      case 'E':
        // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 hangs off 4.
        link(0, 2);
        link(2, 3);
        link(3, 4);
        link(4, 5);
        link(1, 3);
        if (n_ >= 7) link(5, 6);
        if (n_ >= 8) link(6, 7);
        break;
    }
  }

  // Exact inverse plus integer adjugate/determinant (for Q-membership tests).
  void invert_cartan() {
    // Gauss-Jordan over Rat.
    std::array<std::array<Rat, kMaxRank>, kMaxRank> m{}, inv{};
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        m[i][j] = Rat(cartan_[i][j]);
        inv[i][j] = Rat(i == j ? 1 : 0);
      }
    Rat det(1);
    for (int col = 0; col < n_; ++col) {
      int piv = col;
      while (piv < n_ && m[piv][col] == Rat(0)) ++piv;
      if (piv == n_) throw internal_error("singular Cartan matrix");
      if (piv != col) {
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        det = -det;
      }
      det *= m[col][col];
      Rat d = m[col][col];
      for (int j = 0; j < n_; ++j) {
        m[col][j] /= d;
        inv[col][j] /= d;
      }
      for (int r = 0; r < n_; ++r) {
        if (r == col || m[r][col] == Rat(0)) continue;
        Rat f = m[r][col];
        for (int j = 0; j < n_; ++j) {
          m[r][j] -= f * m[col][j];
          inv[r][j] -= f * inv[col][j];
        }
      }
    }
    if (!is_integer(det)) throw internal_error("Cartan determinant not integral");
    cartan_det_ = det.numerator();
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        cartan_inv_[i][j] = inv[i][j];
        Rat adj = inv[i][j] * det;
        if (!is_integer(adj)) throw internal_error("Cartan adjugate not integral");
        cartan_adj_[i][j] = adj.numerator();
      }
  }

  // Closure from the simple roots.  Simply laced, so for roots a != +-b:
  // a + b is a root iff (a,b) = -1.  Grown by height, sorted (height, rc).
  void build_roots() {
    std::map<Coords, Coords> seen;  // rc -> fund
    std::vector<Coords> frontier;
    for (int i = 0; i < n_; ++i) {
      Coords rc = Coords::unit(n_, i);
      seen.emplace(rc, from_root_coords(rc));
      frontier.push_back(rc);
    }
    while (!frontier.empty()) {
      std::vector<Coords> next;
      for (const Coords& rc : frontier) {
        Coords fund = from_root_coords(rc);
        for (int i = 0; i < n_; ++i) {
          if (fund[i] != -1) continue;  // (alpha, alpha_i) = fund[i]
          Coords rc2 = rc;
          rc2[i] += 1;
          if (seen.emplace(rc2, from_root_coords(rc2)).second) next.push_back(rc2);
        }
      }
      frontier = std::move(next);
    }
    for (auto& [rc, fund] : seen) {
      Int h = std::accumulate(rc.v.begin(), rc.v.begin() + n_, Int(0));
      roots_.push_back(Root{rc, fund, h});
    }
    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
      if (a.height != b.height) return a.height < b.height;
      return b.rc < a.rc;  // alpha_1 + ... leads within a height class
    });
    simple_index_.assign(n_, -1);
    for (int k = 0; k < (int)roots_.size(); ++k) {
      by_fund_.emplace(roots_[k].fund, SignedRoot{k, 1});
      by_fund_.emplace(-roots_[k].fund, SignedRoot{k, -1});
      if (roots_[k].height == 1)
        for (int i = 0; i < n_; ++i)
          if (roots_[k].rc[i] == 1) simple_index_[i] = k;
    }
    int expected = 0;
    switch (type_.family) {
      case 'A': expected = n_ * (n_ + 1) / 2; break;
      case 'D': expected = n_ * (n_ - 1); break;
      case 'E': expected = (n_ == 6) ? 36 : (n_ == 7) ? 63 : 120; break;
    }
    if ((int)roots_.size() != expected) throw internal_error("positive-root count mismatch");
  }

  void compute_lattice_constant() {
    Int e = 1;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) e = std::lcm(e, cartan_inv_[i][j].denominator());
    e_ = e;
  }

  CartanType type_;
  int n_;
  std::array<std::array<Int, kMaxRank>, kMaxRank> cartan_{};
  std::array<std::array<Rat, kMaxRank>, kMaxRank> cartan_inv_{};
  std::array<std::array<Int, kMaxRank>, kMaxRank> cartan_adj_{};
  Int cartan_det_ = 1;
  Int e_ = 1;
  Coords rho_;
  std::vector<Root> roots_;
  std::vector<int> simple_index_;
  std::unordered_map<Coords, SignedRoot, CoordsHash> by_fund_;
};

// Process-wide cache; root systems are immutable once built.
inline const RootSystem& get_root_system(CartanType t) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(t.family, t.rank);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<RootSystem>(t)).first;
  return *it->second;
}

inline const RootSystem& get_root_system(const std::string& s) {
  return get_root_system(CartanType::parse(s));
}

}  // namespace ichev
