#pragma once

// Minuscule weight data.  For a nonzero minuscule weight lambda = x varpi_k
// (x the minimal coset representative modulo the stabiliser W_J, J = I\{k})
// write floor(w0) = y x with lengths adding.  The fixed lex-min reduced words
//   x = s_{j_l} ... s_{j_1},      y = s_{i_1} ... s_{i_m}
// determine the root sequences
//   beta_r  = s_{j_l} ... s_{j_{r+1}} (alpha_{j_r}),   Inv(x)      = {beta_r},
//   gamma_s = s_{i_m} ... s_{i_{s+1}} (alpha_{i_s}),   Inv(y^{-1}) = {gamma_s},
// and the step sequence eta = (beta_l, ..., beta_1, gamma_1, ..., gamma_m).

#include <vector>

#include "ichev/weyl.hpp"

namespace ichev {

struct MinusculeDatum {
  const RootSystem* rs = nullptr;
  Coords lambda;
  int node = -1;  // 0-based minuscule node k with lambda in W varpi_k
  WeylElt x, y, floor_w0;
  std::vector<int> word_x, word_y;  // lex-min words, composition order
  std::vector<SignedRoot> beta;     // beta_1 .. beta_l
  std::vector<SignedRoot> gamma;    // gamma_1 .. gamma_m
  int l = 0, m = 0, n = 0;

  // eta_t for t = 1..n: (beta_l, ..., beta_1, gamma_1, ..., gamma_m).
  SignedRoot eta(int t) const { return t <= l ? beta[l - t] : gamma[t - l - 1]; }
};

namespace detail {

// beta_r via prefix products of word_x, gamma_s via suffix products of
// word_y, plus the inversion-set and pairing cross-checks.  Needs rs, lambda,
// x, y, word_x, word_y, l, m already set.
inline void fill_phase_roots(MinusculeDatum& d) {
  const RootSystem& rs = *d.rs;
  d.beta.assign(d.l, SignedRoot{0, 1});
  {
    WeylElt p = WeylElt::identity(rs);  // s_{a_1} ... s_{a_t} after t steps
    std::vector<WeylElt> prefix{p};
    for (int i : d.word_x) {
      p = p * WeylElt::simple(rs, i);
      prefix.push_back(p);
    }
    for (int r = 1; r <= d.l; ++r) {
      int idx = d.l - r;
      Coords b = prefix[idx].apply(rs.simple_root(d.word_x[idx]));
      d.beta[r - 1] = rs.expect_root(b);
      if (d.beta[r - 1].sign < 0) throw internal_error("beta_r not positive");
    }
  }
  d.gamma.assign(d.m, SignedRoot{0, 1});
  {
    WeylElt t = WeylElt::identity(rs);
    for (int s = d.m; s >= 1; --s) {
      Coords g = t.apply(rs.simple_root(d.word_y[s - 1]));
      d.gamma[s - 1] = rs.expect_root(g);
      if (d.gamma[s - 1].sign < 0) throw internal_error("gamma_s not positive");
      t = t * WeylElt::simple(rs, d.word_y[s - 1]);
    }
  }

  std::vector<int> inv_x = inversion_set(d.x);
  std::vector<int> bset;
  for (auto& b : d.beta) bset.push_back(b.index);
  std::sort(bset.begin(), bset.end());
  if (bset != inv_x) throw internal_error("Inv(x) != {beta_r}");
  std::vector<int> inv_yi = inversion_set(d.y.inverse());
  std::vector<int> gset;
  for (auto& g : d.gamma) gset.push_back(g.index);
  std::sort(gset.begin(), gset.end());
  if (gset != inv_yi) throw internal_error("Inv(y^{-1}) != {gamma_s}");
  for (auto& b : d.beta)
    if (rs.pairing_root(d.lambda, b) != -1) throw internal_error("(lambda, beta_r) != -1");
}

}  // namespace detail

inline MinusculeDatum minuscule_datum(const RootSystem& rs, const Coords& lambda) {
  if (rs.type().family == 'E' && rs.type().rank == 8)
    throw unsupported_weight_error("E8 has no minuscule weights");
  if (lambda.is_zero()) throw unsupported_weight_error("zero weight has no minuscule datum");
  if (!rs.is_minuscule(lambda)) {
    throw unsupported_weight_error("weight (" + to_string(lambda) + ") is not minuscule in " +
                                   rs.type().to_string());
  }

  MinusculeDatum d;
  d.rs = &rs;
  d.lambda = lambda;

  // Walk to the dominant chamber, recording the letters used.
  Coords mu = lambda;
  std::vector<int> letters;
  while (!rs.is_dominant(mu)) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu[i] < 0) {
        mu = rs.reflect_simple(mu, i);
        letters.push_back(i);
        break;
      }
    }
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (mu[i] == 1 && d.node < 0)
      d.node = i;
    else if (mu[i] != 0)
      throw internal_error("dominant minuscule weight is not fundamental");
  if (d.node < 0) throw internal_error("no minuscule node found");

  std::vector<int> J;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != d.node) J.push_back(i);

  // lambda = (s_{letters[0]} ... s_{letters[last]}) varpi_k.
  WeylElt x0 = WeylElt::identity(rs);
  for (int i : letters) x0 = x0 * WeylElt::simple(rs, i);
  d.x = min_coset_rep(x0, J);
  if (d.x.apply(rs.fundamental_weight(d.node)) != lambda)
    throw internal_error("coset representative does not reach lambda");

  const Weyl& W = get_weyl(rs);
  d.floor_w0 = min_coset_rep(W.w0(), J);
  d.y = d.floor_w0 * d.x.inverse();

  d.word_x = reduced_word(d.x);
  d.word_y = reduced_word(d.y);
  d.l = (int)d.word_x.size();
  d.m = (int)d.word_y.size();
  d.n = d.l + d.m;
  if (weyl_length(d.floor_w0) != d.l + d.m)
    throw internal_error("floor(w0) = y x is not length-additive");

  detail::fill_phase_roots(d);
  return d;
}

// The same datum with caller-chosen reduced words for x and y; the default
// construction picks the lex-min ones.  The phase roots — and with them the
// walk order, the decorations, and the raw expansion terms — depend on this
// choice, which is why the datum records it.
inline MinusculeDatum datum_with_words(const MinusculeDatum& base,
                                       const std::vector<int>& word_x,
                                       const std::vector<int>& word_y) {
  const RootSystem& rs = *base.rs;
  if ((int)word_x.size() != base.l || WeylElt::from_word(rs, word_x) != base.x)
    throw invalid_argument_error("not a reduced word for the first-phase element");
  if ((int)word_y.size() != base.m || WeylElt::from_word(rs, word_y) != base.y)
    throw invalid_argument_error("not a reduced word for the second-phase element");
  MinusculeDatum d = base;
  d.word_x = word_x;
  d.word_y = word_y;
  detail::fill_phase_roots(d);
  return d;
}

// #{gamma in Inv(w) : (gamma, lambda) = sign}.  lambda must be minuscule.
inline Int ell_lambda(const WeylElt& w, const Coords& lambda, int sign) {
  const RootSystem& rs = w.rs();
  if (!rs.is_minuscule(lambda))
    throw unsupported_weight_error("ell_lambda needs a minuscule weight");
  Int count = 0;
  for (int idx : inversion_set(w))
    if (rs.pairing_root(lambda, SignedRoot{idx, 1}) == sign) ++count;
  return count;
}

// Partial versions: #(Inv(w) ∩ {beta_r..beta_l}) resp. #(Inv(w) ∩ {gamma_s..gamma_m}).
inline Int ell_lambda_partial_minus(const WeylElt& w, const MinusculeDatum& d, int r) {
  if (r < 1 || r > d.l + 1) throw invalid_argument_error("r out of range");
  std::vector<int> inv = inversion_set(w);
  Int count = 0;
  for (int t = r; t <= d.l; ++t)
    if (std::binary_search(inv.begin(), inv.end(), d.beta[t - 1].index)) ++count;
  return count;
}

inline Int ell_lambda_partial_plus(const WeylElt& w, const MinusculeDatum& d, int s) {
  if (s < 1 || s > d.m + 1) throw invalid_argument_error("s out of range");
  std::vector<int> inv = inversion_set(w);
  Int count = 0;
  for (int t = s; t <= d.m; ++t)
    if (std::binary_search(inv.begin(), inv.end(), d.gamma[t - 1].index)) ++count;
  return count;
}

// All weights of the (finite) W-orbit of a weight, deterministic order.
inline std::vector<Coords> weyl_orbit(const RootSystem& rs, const Coords& start) {
  std::vector<Coords> out;
  std::unordered_map<Coords, bool, CoordsHash> seen;
  out.push_back(start);
  seen.emplace(start, true);
  for (size_t h = 0; h < out.size(); ++h) {
    Coords cur = out[h];
    for (int i = 0; i < rs.rank(); ++i) {
      Coords nxt = rs.reflect_simple(cur, i);
      if (seen.emplace(nxt, true).second) out.push_back(nxt);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every minuscule weight of the system: the orbits of the minuscule nodes.
inline std::vector<Coords> all_minuscule_weights(const RootSystem& rs) {
  std::vector<Coords> out;
  for (int k : rs.minuscule_nodes()) {
    auto orbit = weyl_orbit(rs, rs.fundamental_weight(k));
    out.insert(out.end(), orbit.begin(), orbit.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ichev
