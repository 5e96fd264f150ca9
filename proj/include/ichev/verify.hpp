#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "ichev/chevalley.hpp"
#include "ichev/oracle.hpp"

// Verification drivers shared by the CLI and the acceptance suite.  Every
// driver enumerates (weight, element) pairs — exhaustively when samples <= 0
// (possible only for interned Weyl groups), otherwise as a seeded random
// sample — and runs one family of exact checks per pair.

namespace ichev {

struct PairResult {
  Coords lambda;
  WeylElt w;
  bool pass = true;
  std::vector<std::string> notes;  // names of failed checks
};

struct RowEntry {
  WeylElt u;
  bool match = true;
  HeisElt lhs, rhs;
};

struct RowResult {
  Coords lambda;
  WeylElt w;
  bool pass = true;
  std::vector<RowEntry> rows;  // filled only when requested
};

// Uniform for interned groups; a long seeded random word otherwise (mixing is
// all that sampling needs, not exact uniformity).
inline WeylElt random_weyl(const RootSystem& rs, std::mt19937_64& rng) {
  const Weyl& W = get_weyl(rs);
  if (W.interned()) {
    std::uniform_int_distribution<int> pick(0, W.size() - 1);
    return W.elements()[pick(rng)];
  }
  std::uniform_int_distribution<int> node(0, rs.rank() - 1);
  std::vector<int> word(4 * rs.num_positive_roots());
  for (int& a : word) a = node(rng);
  return WeylElt::from_word(rs, word);
}

inline std::vector<std::pair<Coords, WeylElt>> verification_pairs(const RootSystem& rs,
                                                                  int samples, uint64_t seed) {
  std::vector<std::pair<Coords, WeylElt>> out;
  std::vector<Coords> lams = all_minuscule_weights(rs);
  if (lams.empty()) throw unsupported_weight_error("no minuscule weights in " + rs.type().to_string());
  if (samples <= 0) {
    for (const Coords& lam : lams)
      for (const WeylElt& w : get_weyl(rs).elements()) out.emplace_back(lam, w);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_t> pl(0, lams.size() - 1);
    for (int k = 0; k < samples; ++k) {
      Coords lam = lams[pl(rng)];
      out.emplace_back(lam, random_weyl(rs, rng));
    }
  }
  return out;
}

namespace detail {

// Index-sliced fan-out with deterministic merge: worker j handles items
// j, j+jobs, j+2*jobs, ...  Results land in caller-owned slots.
template <class Fn>
inline void parallel_indices(size_t count, int jobs, Fn fn) {
  if (jobs <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  int workers = static_cast<int>(std::min<size_t>(static_cast<size_t>(jobs), count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int j = 0; j < workers; ++j)
    pool.emplace_back([&, j] {
      for (size_t i = j; i < count; i += workers) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

}  // namespace detail

using PairList = std::vector<std::pair<Coords, WeylElt>>;

// One limit row computed two ways: the factored-matrix recursion against the
// quantum-walk sum.  keep_rows additionally stores every per-endpoint entry.
inline std::vector<RowResult> verify_rows_for(const RootSystem& rs, const PairList& pairs,
                                              int jobs = 1, bool keep_rows = false) {
  std::vector<RowResult> out(pairs.size());
  detail::parallel_indices(pairs.size(), jobs, [&](size_t i) {
    const auto& [lam, w] = pairs[i];
    MinusculeDatum d = minuscule_datum(rs, lam);
    OracleRow lhs = rho0_row(d, w), rhs = ylim_row(d, w);
    RowResult& r = out[i];
    r.lambda = lam;
    r.w = w;
    std::set<Coords> keys;
    for (const auto& [k, v] : lhs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (const Coords& key : keys) {
      auto il = lhs.find(key), ir = rhs.find(key);
      HeisElt zero = HeisElt::zero(rs);
      const HeisElt& a = il == lhs.end() ? zero : il->second.second;
      const HeisElt& b = ir == rhs.end() ? zero : ir->second.second;
      bool match = a == b;
      r.pass = r.pass && match;
      if (keep_rows) {
        WeylElt u = il != lhs.end() ? il->second.first : ir->second.first;
        r.rows.push_back({u, match, a, b});
      }
    }
  });
  return out;
}

inline std::vector<RowResult> verify_rows(const RootSystem& rs, int samples = 0,
                                          uint64_t seed = 0, int jobs = 1,
                                          bool keep_rows = false) {
  return verify_rows_for(rs, verification_pairs(rs, samples, seed), jobs, keep_rows);
}

// The closed Heisenberg expansion against the decorated-walk expansion,
// compared termwise in the twisted Schubert basis.
inline std::vector<PairResult> verify_theorems_for(const RootSystem& rs, const PairList& pairs,
                                                   int jobs = 1) {
  std::vector<PairResult> out(pairs.size());
  detail::parallel_indices(pairs.size(), jobs, [&](size_t i) {
    const auto& [lam, w] = pairs[i];
    MinusculeDatum d = minuscule_datum(rs, lam);
    PairResult& r = out[i];
    r.lambda = lam;
    r.w = w;
    if (to_basis_form(rs, inverse_chevalley_algebraic(d, w)) != inverse_chevalley_row(d, w)) {
      r.pass = false;
      r.notes.push_back("expansions differ");
    }
  });
  return out;
}

inline std::vector<PairResult> verify_theorems(const RootSystem& rs, int samples = 0,
                                               uint64_t seed = 0, int jobs = 1) {
  return verify_theorems_for(rs, verification_pairs(rs, samples, seed), jobs);
}

namespace detail {

inline void prop_l_note(PairResult& r, bool pass, const char* name) {
  if (pass) return;
  r.pass = false;
  r.notes.push_back(name);
}

// Datum-level checks: the length identity, the pairing constraints on the
// first-phase roots, their height ordering, and the counting identities for
// R_r = {alpha > 0 : ht(alpha) < ht(beta_r), (alpha, beta_r) = 1} with its
// involution sigma(alpha) = beta_r - alpha.
inline void prop_l_datum_checks(const MinusculeDatum& d, PairResult& r) {
  const RootSystem& rs = *d.rs;
  prop_l_note(r, Rat(2 * weyl_length(d.x) - d.n) == Rat(-2) * rs.pairing(rs.rho(), d.lambda),
              "length identity");
  for (int t = 1; t <= d.l; ++t)
    prop_l_note(r, rs.pairing_root(d.lambda, d.beta[t - 1]) == -1, "(lambda, beta_r) = -1");
  for (int a = 1; a <= d.l; ++a) {
    Coords ba = rs.root_fund(d.beta[a - 1]);
    for (int b = 1; b <= d.l; ++b) {
      if (a == b) continue;
      Int p = rs.pairing_root(ba, d.beta[b - 1]);
      prop_l_note(r, p == 0 || p == 1, "(beta_r, beta_t) in {0,1}");
      if (a < b && p == 1)
        prop_l_note(r, rs.height(d.beta[a - 1]) > rs.height(d.beta[b - 1]),
                    "height ordering of paired roots");
    }
  }
  for (int t = 1; t <= d.l; ++t) {
    SignedRoot br = d.beta[t - 1];
    Coords brf = rs.root_fund(br);
    Int h = rs.height(br);
    std::set<Coords> B, R;
    for (int u = t + 1; u <= d.l; ++u)
      if (rs.pairing_root(rs.root_fund(d.beta[u - 1]), br) == 1)
        B.insert(rs.root_fund(d.beta[u - 1]));
    for (int ri = 0; ri < rs.num_positive_roots(); ++ri) {
      SignedRoot al{ri, +1};
      if (rs.height(al) < h && rs.pairing_root(rs.root_fund(al), br) == 1)
        R.insert(rs.root_fund(al));
    }
    prop_l_note(r, (Int)B.size() == h - 1, "later paired roots count h-1");
    prop_l_note(r, (Int)R.size() == 2 * (h - 1), "short paired positive roots count 2(h-1)");
    bool involution = true, splits = true;
    std::set<Coords> sigmaB;
    for (const Coords& al : R) {
      Coords other = brf - al;
      involution = involution && R.count(other) && other != al;
    }
    for (const Coords& bt : B) {
      Coords other = brf - bt;
      sigmaB.insert(other);
      splits = splits && !B.count(other) && R.count(other);
    }
    std::set<Coords> uni = B;
    uni.insert(sigmaB.begin(), sigmaB.end());
    splits = splits && uni == R;
    prop_l_note(r, involution, "sigma is a fixed-point-free involution");
    prop_l_note(r, splits, "sigma(B) and B partition R");
  }
}

// Element-level checks: the signed inversion split and the length-difference
// formulas along beta_r / gamma_s descents.
inline void prop_l_element_checks(const MinusculeDatum& d, const WeylElt& w, PairResult& r) {
  const RootSystem& rs = *d.rs;
  Int lp = ell_lambda(w, d.lambda, +1), lm = ell_lambda(w, d.lambda, -1);
  prop_l_note(r, rs.pairing(rs.rho() - w.apply(rs.rho()), d.lambda) == Rat(lp - lm),
              "signed inversion count");

  std::vector<int> inv = inversion_set(w);
  std::vector<int> invx = inversion_set(d.x), invyi = inversion_set(d.y.inverse());
  std::vector<int> minus_set, plus_set, cap;
  for (int idx : inv) {
    Int p = rs.pairing_root(d.lambda, SignedRoot{idx, 1});
    if (p == -1) minus_set.push_back(idx);
    if (p == +1) plus_set.push_back(idx);
  }
  std::set_intersection(inv.begin(), inv.end(), invx.begin(), invx.end(),
                        std::back_inserter(cap));
  prop_l_note(r, cap == minus_set, "negative inversions equal Inv(w) cap Inv(x)");
  cap.clear();
  std::set_intersection(inv.begin(), inv.end(), invyi.begin(), invyi.end(),
                        std::back_inserter(cap));
  prop_l_note(r, cap == plus_set, "positive inversions equal Inv(w) cap Inv(y^-1)");

  Int lw = weyl_length(w);
  for (int t = 1; t <= d.l; ++t) {
    WeylElt sw = WeylElt::reflection(rs, d.beta[t - 1]) * w;
    Int lsw = weyl_length(sw);
    if (lsw >= lw) continue;
    prop_l_note(r,
                lw - lsw == 2 * (ell_lambda_partial_minus(w, d, t) -
                                 ell_lambda_partial_minus(sw, d, t)) - 1,
                "length difference along beta_r");
  }
  for (int s = 1; s <= d.m; ++s) {
    WeylElt sw = WeylElt::reflection(rs, d.gamma[s - 1]) * w;
    Int lsw = weyl_length(sw);
    if (lsw >= lw) continue;
    prop_l_note(r,
                lw - lsw == 2 * (ell_lambda_partial_plus(w, d, s) -
                                 ell_lambda_partial_plus(sw, d, s)) - 1,
                "length difference along gamma_s");
  }
}

}  // namespace detail

// The full length/inversion suite for minuscule data.
inline std::vector<PairResult> verify_lengths_for(const RootSystem& rs, const PairList& pairs,
                                                  int jobs = 1) {
  std::vector<PairResult> out(pairs.size());
  detail::parallel_indices(pairs.size(), jobs, [&](size_t i) {
    const auto& [lam, w] = pairs[i];
    MinusculeDatum d = minuscule_datum(rs, lam);
    PairResult& r = out[i];
    r.lambda = lam;
    r.w = w;
    detail::prop_l_datum_checks(d, r);
    detail::prop_l_element_checks(d, w, r);
  });
  return out;
}

inline std::vector<PairResult> verify_lengths(const RootSystem& rs, int samples = 0,
                                              uint64_t seed = 0, int jobs = 1) {
  return verify_lengths_for(rs, verification_pairs(rs, samples, seed), jobs);
}

// Structural scan: expansion coefficients lie in Z[q^{+-1}] with finitely
// many terms, and every limit-row path has nonnegative vanishing order (the
// row recursion throws otherwise).
inline std::vector<PairResult> verify_integrality_for(const RootSystem& rs, const PairList& pairs,
                                                      int jobs = 1) {
  std::vector<PairResult> out(pairs.size());
  detail::parallel_indices(pairs.size(), jobs, [&](size_t i) {
    const auto& [lam, w] = pairs[i];
    MinusculeDatum d = minuscule_datum(rs, lam);
    PairResult& r = out[i];
    r.lambda = lam;
    r.w = w;
    KClass row = inverse_chevalley_row(d, w);
    bool ints = true;
    for (const auto& [idx, c] : row.terms()) ints = ints && c.integral();
    detail::prop_l_note(r, ints, "integer q-exponents in the expansion");
    try {
      OracleRow orow = rho0_row(d, w);
      bool orints = true;
      for (const auto& [key, val] : orow) orints = orints && val.second.integral();
      detail::prop_l_note(r, orints, "integer q-exponents in the limit row");
    } catch (const internal_error&) {
      detail::prop_l_note(r, false, "nonnegative vanishing order");
    }
  });
  return out;
}

inline std::vector<PairResult> verify_integrality(const RootSystem& rs, int samples = 0,
                                                  uint64_t seed = 0, int jobs = 1) {
  return verify_integrality_for(rs, verification_pairs(rs, samples, seed), jobs);
}

}  // namespace ichev
