#pragma once

#include <vector>

#include "ichev/chevalley.hpp"

// Type-A specializations.  The weight lattice of A_n is Z^{n+1} modulo the
// all-ones vector, with standard basis images eps_1, .., eps_{n+1}; the Weyl
// group is the symmetric group S_{n+1} acting by w eps_i = eps_{w(i)}.  This
// header provides the epsilon/permutation bridges, the closed-form expansion
// of e^{eps_i} against the longest-element basis class, the first q-Toda
// difference operator, and the diagram automorphism -w0.

namespace ichev {

namespace detail {

inline void require_type_a(const RootSystem& rs, const char* what) {
  if (rs.type().family != 'A')
    throw invalid_argument_error(std::string(what) + " requires type A, got " +
                                 rs.type().to_string());
}

}  // namespace detail

// eps_i = varpi_i - varpi_{i-1} (with varpi_0 = varpi_{n+1} = 0), 1 <= i <= n+1.
inline Coords epsilon_weight(const RootSystem& rs, int i) {
  detail::require_type_a(rs, "epsilon_weight");
  int n = rs.rank();
  if (i < 1 || i > n + 1)
    throw invalid_argument_error("epsilon index " + std::to_string(i) +
                                 " out of range 1.." + std::to_string(n + 1));
  Coords c = Coords::zero(n);
  if (i <= n) c[i - 1] += 1;
  if (i >= 2) c[i - 2] -= 1;
  return c;
}

// alpha_{i,j} = eps_i - eps_{j+1} = alpha_i + .. + alpha_j, 1 <= i <= j <= n.
inline Coords alpha_interval(const RootSystem& rs, int i, int j) {
  detail::require_type_a(rs, "alpha_interval");
  if (i < 1 || j > rs.rank() || i > j)
    throw invalid_argument_error("root interval [" + std::to_string(i) + "," +
                                 std::to_string(j) + "] out of range");
  return epsilon_weight(rs, i) - epsilon_weight(rs, j + 1);
}

// One-line notation: out[k] = w(k+1), determined by w eps_i = eps_{w(i)}.
inline std::vector<int> one_line(const RootSystem& rs, const WeylElt& w) {
  detail::require_type_a(rs, "one_line");
  int n = rs.rank();
  std::vector<Coords> eps;
  eps.reserve(n + 1);
  for (int i = 1; i <= n + 1; ++i) eps.push_back(epsilon_weight(rs, i));
  std::vector<int> out(n + 1, 0);
  for (int i = 1; i <= n + 1; ++i) {
    Coords img = w.apply(eps[i - 1]);
    for (int j = 1; j <= n + 1; ++j) {
      if (img == eps[j - 1]) {
        out[i - 1] = j;
        break;
      }
    }
    if (out[i - 1] == 0) throw internal_error("permutation image is not an epsilon weight");
  }
  return out;
}

// Inverse bridge: the Weyl element whose one-line notation is perm
// (perm[k] = w(k+1), a permutation of 1..n+1).  Bubble-sorting the one-line
// to the identity by adjacent swaps records a reduced word from the right.
inline WeylElt permutation_weyl(const RootSystem& rs, std::vector<int> perm) {
  detail::require_type_a(rs, "permutation_weyl");
  int n = rs.rank();
  if ((int)perm.size() != n + 1)
    throw invalid_argument_error("one-line notation must have length " + std::to_string(n + 1));
  {
    std::vector<bool> seen(n + 2, false);
    for (int v : perm) {
      if (v < 1 || v > n + 1 || seen[v])
        throw invalid_argument_error("not a permutation of 1.." + std::to_string(n + 1));
      seen[v] = true;
    }
  }
  std::vector<int> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k = 0; k < n; ++k) {
      if (perm[k] > perm[k + 1]) {
        std::swap(perm[k], perm[k + 1]);
        swaps.push_back(k);
        moved = true;
      }
    }
  }
  std::vector<int> word(swaps.rbegin(), swaps.rend());
  return WeylElt::from_word(rs, word);
}

// The cycle (c_1 c_2 .. c_k): c_1 -> c_2 -> .. -> c_k -> c_1, entries in 1..n+1.
inline WeylElt cycle_weyl(const RootSystem& rs, const std::vector<int>& cycle) {
  detail::require_type_a(rs, "cycle_weyl");
  int n = rs.rank();
  std::vector<int> perm(n + 1);
  for (int k = 0; k <= n; ++k) perm[k] = k + 1;
  for (size_t k = 0; k < cycle.size(); ++k) {
    int from = cycle[k], to = cycle[(k + 1) % cycle.size()];
    if (from < 1 || from > n + 1)
      throw invalid_argument_error("cycle entry out of range 1.." + std::to_string(n + 1));
    perm[from - 1] = to;
  }
  return permutation_weyl(rs, perm);
}

// Closed form of e^{eps_i} . [O(w0)], 1 <= i <= n+1:
//
//   [O(w0)(-eps_i)]  -  1_{i<n+1} q [O(w0 t_{-w0 alpha_i})(-eps_{i+1})]
//   + sum over nonempty {i_1<..<i_a} in {1..i-1} of
//       (-1)^a [O((i_1..i_a i)^{-1} w0 t_{-w0 alpha_{i_1,i-1}})(-eps_i)]
//   + sum over nonempty {j_1<..<j_b} in {i+1..n+1} of
//       (-1)^{b-1} q [O((i j_1..j_b)^{-1} w0 t_{-w0 alpha_{i,j_b-1}})(-eps_{j_b})].
inline KClass closed_form_w0(const RootSystem& rs, int i) {
  detail::require_type_a(rs, "closed_form_w0");
  int n = rs.rank();
  if (i < 1 || i > n + 1)
    throw invalid_argument_error("epsilon index " + std::to_string(i) +
                                 " out of range 1.." + std::to_string(n + 1));
  const Weyl& W = get_weyl(rs);
  const WeylElt& w0 = W.w0();
  Coords zero = Coords::zero(n);
  LaurentQ q = LaurentQ::q_power(Rat(1));

  KClass out(rs);
  out.add_term({w0, zero, -epsilon_weight(rs, i)}, LaurentQ::one());
  if (i < n + 1) {
    Coords tr = -w0.apply(rs.simple_root(i - 1));
    out.add_term({w0, tr, -epsilon_weight(rs, i + 1)}, -q);
  }
  for (unsigned mask = 1; mask < (1u << (i - 1)); ++mask) {
    std::vector<int> cyc;
    for (int v = 1; v <= i - 1; ++v)
      if (mask & (1u << (v - 1))) cyc.push_back(v);
    int a = (int)cyc.size();
    int i1 = cyc.front();
    cyc.push_back(i);
    WeylElt u = cycle_weyl(rs, cyc).inverse() * w0;
    Coords tr = -w0.apply(alpha_interval(rs, i1, i - 1));
    LaurentQ coeff = LaurentQ::from_int(a % 2 == 0 ? 1 : -1);
    out.add_term({u, tr, -epsilon_weight(rs, i)}, coeff);
  }
  for (unsigned mask = 1; mask < (1u << (n + 1 - i)); ++mask) {
    std::vector<int> cyc{i};
    for (int v = i + 1; v <= n + 1; ++v)
      if (mask & (1u << (v - i - 1))) cyc.push_back(v);
    int b = (int)cyc.size() - 1;
    int jb = cyc.back();
    WeylElt u = cycle_weyl(rs, cyc).inverse() * w0;
    Coords tr = -w0.apply(alpha_interval(rs, i, jb - 1));
    LaurentQ coeff = LaurentQ::q_power(Rat(1), b % 2 == 1 ? 1 : -1);
    out.add_term({u, tr, -epsilon_weight(rs, jb)}, coeff);
  }
  return out;
}

// The first q-Toda difference operator, as the explicit display
//   X^{-w0 eps_1} + sum_{i=2}^{n+1} X^{-w0 eps_i} (1 - q t_{-w0 alpha_{i-1}} X^{-w0 alpha_{i-1}}).
inline HeisElt q_toda_operator(const RootSystem& rs) {
  detail::require_type_a(rs, "q_toda_operator");
  int n = rs.rank();
  const WeylElt& w0 = get_weyl(rs).w0();
  HeisElt out = HeisElt::x(rs, -w0.apply(epsilon_weight(rs, 1)));
  for (int i = 2; i <= n + 1; ++i) {
    Coords a = -w0.apply(rs.simple_root(i - 2));
    HeisElt factor = HeisElt::one(rs) - HeisElt::monomial(rs, a, a, LaurentQ::q_power(Rat(1)));
    out += HeisElt::x(rs, -w0.apply(epsilon_weight(rs, i))) * factor;
  }
  return out;
}

struct QTodaReport {
  HeisElt display;      // the explicit difference operator
  HeisElt symmetrized;  // spherical symmetrization of e^{varpi_1}
  bool equal = false;
};

// Compares the displayed operator with the symmetrization of e^{varpi_1}
// over the orbit {eps_1, .., eps_{n+1}}.
inline QTodaReport q_toda_check(const RootSystem& rs) {
  detail::require_type_a(rs, "q_toda_check");
  QTodaReport r{q_toda_operator(rs), spherical_symmetrization(rs, 0), false};
  r.equal = r.display == r.symmetrized;
  return r;
}

// The diagram automorphism -w0: termwise
//   [O(w t_beta)(mu)] -> [O(w0 w w0 t_{-w0 beta})(-w0 mu)].
inline KClass apply_diagram_automorphism(const KClass& c) {
  const RootSystem& rs = c.rs();
  detail::require_type_a(rs, "apply_diagram_automorphism");
  const WeylElt& w0 = get_weyl(rs).w0();
  KClass out(rs);
  for (const auto& [idx, coeff] : c.terms())
    out.add_term({w0 * idx.w * w0, -w0.apply(idx.trans), -w0.apply(idx.bundle)}, coeff);
  return out;
}

}  // namespace ichev
