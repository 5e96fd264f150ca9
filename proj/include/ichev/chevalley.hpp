#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ichev/heisenberg.hpp"
#include "ichev/walks.hpp"

namespace ichev {

namespace detail {

// -w0 w_l^{-1} lambda: the line-bundle twist contributed by the pivot vertex.
inline Coords pivot_weight(const Walk& walk) {
  const MinusculeDatum& d = *walk.datum;
  return -get_weyl(*d.rs).w0().apply(walk.after_l.inverse().apply(d.lambda));
}

}  // namespace detail

// Line-bundle scalar e^lambda applied to [O(w)], in module form: for each
// quantum walk, a product of twisted monomials on either side of the pivot
// X^{-w0 w_l^{-1} lambda}, accumulated at the end vertex.  First-phase
// factors: (1 - Xt^{-w0 chi}) on decorated stays, -Xt^{w0 chi} on descents.
// Second-phase factors: (1 - Xt^{w0 chi}) on decorated stays, Xt^{w0 chi} on
// descents, -1 on ascents.  (Xt^beta = q t_beta X^beta; all Xt commute.)
inline ModuleForm inverse_chevalley_algebraic(const MinusculeDatum& d, const WeylElt& w) {
  const RootSystem& rs = *d.rs;
  const Weyl& W = get_weyl(rs);
  ModuleForm out;
  enumerate_quantum_walks(d, w, [&](const Walk& walk) {
    HeisElt gminus = HeisElt::one(rs), gplus = HeisElt::one(rs);
    for (int t = 1; t <= d.n; ++t) {
      const WalkStep& s = walk.step(t);
      Int h = rs.height(s.chi);
      SignedRoot w0chi = rs.expect_root(W.w0().apply(rs.root_fund(s.chi)));
      if (t <= d.l) {
        if (!s.cross && h == 1)
          gminus = gminus * (HeisElt::one(rs) - tilde_x(rs, {w0chi.index, -w0chi.sign}));
        else if (s.kind == StepKind::down)
          gminus = gminus * (-tilde_x(rs, w0chi));
      } else {
        if (!s.cross && h == -1)
          gplus = gplus * (HeisElt::one(rs) - tilde_x(rs, w0chi));
        else if (s.kind == StepKind::down)
          gplus = gplus * tilde_x(rs, w0chi);
        else if (s.kind == StepKind::up)
          gplus = -gplus;
      }
    }
    HeisElt h = gplus * (HeisElt::x(rs, detail::pivot_weight(walk)) * gminus);
    module_add(out, walk.end, h);
  });
  return out;
}

inline ModuleForm inverse_chevalley_algebraic(const RootSystem& rs, const Coords& lambda,
                                              const WeylElt& w) {
  return inverse_chevalley_algebraic(minuscule_datum(rs, lambda), w);
}

// The same operator expanded combinatorially: one basis term per decorated
// walk, with sign, q-degree, translation -w0 wt, and bundle weight
// -w0 w_l^{-1} lambda + wt read off the decoration.
inline KClass inverse_chevalley_row(const MinusculeDatum& d, const WeylElt& w) {
  const RootSystem& rs = *d.rs;
  const Weyl& W = get_weyl(rs);
  KClass out(rs);
  enumerate_quantum_walks(d, w, [&](const Walk& walk) {
    Coords nu_bar = detail::pivot_weight(walk);
    for (const DecoratedWalk& dec : enumerate_decorations(walk)) {
      Coords trans = -W.w0().apply(dec.wt);
      out.add_term({walk.end, trans, nu_bar + dec.wt},
                   LaurentQ::q_power(Rat(dec.deg), dec.sign));
    }
  });
  return out;
}

// e^lambda on an arbitrary class: each basis term [O(w t_xi)(mu)] factors as
// [O(w)] . (t_{-w0 xi} X^mu), the scalar acts on the [O(w)] part, and the
// Heisenberg element acts back on the result.
inline KClass inverse_chevalley(const RootSystem& rs, const Coords& lambda, const KClass& c) {
  MinusculeDatum d = minuscule_datum(rs, lambda);
  const Weyl& W = get_weyl(rs);
  std::map<Coords, KClass> row_cache;
  KClass out(rs);
  for (const auto& [idx, coeff] : c.terms()) {
    auto it = row_cache.find(idx.w.key());
    if (it == row_cache.end())
      it = row_cache.emplace(idx.w.key(), inverse_chevalley_row(d, idx.w)).first;
    HeisElt h = HeisElt::monomial(rs, -W.w0().apply(idx.trans), idx.bundle, coeff);
    out += kclass_act(it->second, h);
  }
  return out;
}

// Greedy signed decomposition of an arbitrary weight into minuscule-orbit
// summands: repeatedly subtract the orbit weight with the largest pairing
// against the remainder (lexicographically smallest on ties).  Each step must
// shrink the remainder's norm; minuscule orbits span enough of the weight
// lattice for this to terminate in every supported type.
inline std::vector<Coords> minuscule_factorization(const RootSystem& rs, const Coords& lambda) {
  std::vector<Coords> orbit = all_minuscule_weights(rs);
  std::sort(orbit.begin(), orbit.end());
  std::vector<Coords> parts;
  Coords rem = lambda;
  while (!rem.is_zero()) {
    const Coords* best = nullptr;
    Rat best_pref(0);
    for (const Coords& mu : orbit) {
      Rat p = rs.pairing(mu, rem);
      if (!best || p > best_pref) {
        best = &mu;
        best_pref = p;
      }
    }
    Coords next = rem - *best;
    if (!(rs.pairing(next, next) < rs.pairing(rem, rem)))
      throw internal_error("weight factorization failed to shrink the remainder");
    parts.push_back(*best);
    rem = next;
  }
  return parts;
}

inline KClass scalar_multiply_general(const RootSystem& rs, const Coords& lambda,
                                      const KClass& c) {
  if (rs.type().family == 'E' && rs.rank() == 8)
    throw unsupported_weight_error("scalar multiplication is not available in E8");
  KClass out = c;
  for (const Coords& mu : minuscule_factorization(rs, lambda))
    out = inverse_chevalley(rs, mu, out);
  return out;
}

// Demazure operator on the finite Weyl part of each basis index:
// [O(w)] -> [O(s_i w)] when that shortens w, fixed otherwise.
inline KClass demazure(const RootSystem& rs, int i, const KClass& c) {
  if (i < 0 || i >= int(rs.rank())) throw invalid_argument_error("Demazure index out of range");
  WeylElt si = WeylElt::simple(rs, i);
  KClass out(rs);
  for (const auto& [idx, coeff] : c.terms()) {
    WeylElt sw = si * idx.w;
    const WeylElt& target = weyl_length(sw) < weyl_length(idx.w) ? sw : idx.w;
    out.add_term({target, idx.trans, idx.bundle}, coeff);
  }
  return out;
}

// Classical truncation: kill every twisted monomial, i.e. keep only the
// translation-free part of each module-form coefficient.  What remains is the
// finite-flag-variety expansion.
inline ModuleForm truncate_classical(const ModuleForm& m) {
  ModuleForm out;
  for (const auto& [key, wh] : m) {
    HeisElt kept = HeisElt::zero(wh.second.rs());
    for (const auto& [mono, coeff] : wh.second.terms())
      if (mono.first.is_zero()) kept.add_term(mono.first, mono.second, coeff);
    if (!kept.terms().empty()) out.emplace(key, std::make_pair(wh.first, kept));
  }
  return out;
}

// Sum of e^lambda [O(e)] over the full orbit of a minuscule fundamental
// weight.  The result is supported on the identity row alone; its coefficient
// is the difference operator returned here.
inline HeisElt spherical_symmetrization(const RootSystem& rs, int node) {
  KClass total(rs);
  WeylElt e = WeylElt::identity(rs);
  for (const Coords& lam : weyl_orbit(rs, rs.fundamental_weight(node)))
    total += inverse_chevalley_row(minuscule_datum(rs, lam), e);
  ModuleForm m = to_module_form(total);
  HeisElt op = HeisElt::zero(rs);
  for (const auto& [key, wh] : m) {
    if (!wh.first.is_identity())
      throw internal_error("symmetrized operator leaks outside the identity row");
    (void)key;
    op = wh.second;
  }
  return op;
}

}  // namespace ichev
