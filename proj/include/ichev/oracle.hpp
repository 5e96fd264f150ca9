#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ichev/heisenberg.hpp"
#include "ichev/walks.hpp"

namespace ichev {

// One factor (1 - v^a X^beta).  Entries of the transition matrices below are
// kept in the normal form  coeff * v^order * X^mono * prod(num) / prod(den)
// with every numerator exponent a >= 0 and every denominator exponent a >= 2,
// so the v -> 0 limit can be read off: denominators and numerator factors
// with a > 0 tend to 1, and factors with a = 0 survive as (1 - X^beta).
struct VxFactor {
  Int a = 0;
  Coords beta;

  bool operator==(const VxFactor& o) const { return a == o.a && beta == o.beta; }
};

struct FactoredEntry {
  const RootSystem* rs = nullptr;
  Int coeff = 1;  // +1 or -1
  Int order = 0;  // exponent of the leading power of v
  Coords x_mono;
  std::vector<VxFactor> num;
  std::vector<VxFactor> den;

  // The value at v = 0, defined when combined with enough positive-order
  // factors elsewhere; the caller checks the total order of a path.
  HeisElt limit_value() const {
    HeisElt h = HeisElt::monomial(*rs, Coords::zero(rs->rank()), x_mono,
                                  LaurentQ::from_int(coeff));
    for (const VxFactor& f : num) {
      if (f.a > 0) continue;
      h = h * (HeisElt::one(*rs) - HeisElt::x(*rs, f.beta));
    }
    return h;
  }
};

namespace detail {

inline FactoredEntry normalize_entry(const RootSystem& rs, Int coeff, Int order,
                                     std::vector<std::pair<Int, Coords>> num_raw,
                                     std::vector<std::pair<Int, Coords>> den_raw) {
  FactoredEntry e;
  e.rs = &rs;
  e.coeff = coeff;
  e.order = order;
  e.x_mono = Coords::zero(rs.rank());
  for (auto& [a, beta] : num_raw) {
    if (a < 0) {
      // (1 - v^a X^b) = -v^a X^b (1 - v^{-a} X^{-b})
      e.coeff = -e.coeff;
      e.order += a;
      e.x_mono += beta;
      e.num.push_back({-a, -beta});
    } else {
      e.num.push_back({a, beta});
    }
  }
  for (auto& [a, beta] : den_raw) {
    if (a < 0) {
      e.coeff = -e.coeff;
      e.order -= a;
      e.x_mono -= beta;
      e.den.push_back({-a, -beta});
    } else {
      e.den.push_back({a, beta});
    }
  }
  for (const VxFactor& f : e.den)
    if (f.a < 2) throw internal_error("transition-matrix denominator degenerates at v = 0");
  return e;
}

}  // namespace detail

// Entry of the one-step transition matrix attached to the positive root eta
// with raising sign +1 or lowering sign -1, taken at
// row w: the diagonal entry (w, w) or the off-diagonal entry (w, s_eta w).
// Everything is expressed through b = w^{-1}(eta) and its height p, with the
// deformation parameter entering as even powers of v.
inline FactoredEntry kappa_g_entry(const RootSystem& rs, const SignedRoot& eta, int sign,
                                   const WeylElt& w, bool diagonal) {
  SignedRoot b = rs.expect_root(w.inverse().apply(rs.root_fund(eta)));
  Coords bf = rs.root_fund(b);
  Int p = rs.height(b);
  Coords zero = Coords::zero(rs.rank());
  if (sign > 0) {
    if (diagonal)  // (v^2 - v^{-2p} X^b) / (1 - v^{-2p} X^b)
      return detail::normalize_entry(rs, +1, 2, {{-2 * p - 2, bf}}, {{-2 * p, bf}});
    // (v^2 - 1) / (1 - v^{2p} X^{-b})
    return detail::normalize_entry(rs, -1, 0, {{2, zero}}, {{2 * p, -bf}});
  }
  if (diagonal)  // (v^{-2} - v^{-2p} X^b) / (1 - v^{-2p} X^b)
    return detail::normalize_entry(rs, +1, -2, {{-2 * p + 2, bf}}, {{-2 * p, bf}});
  // (v^{-2} - 1) / (1 - v^{2p} X^{-b})
  return detail::normalize_entry(rs, +1, -2, {{2, zero}}, {{2 * p, -bf}});
}

// A row vector over the Weyl group with coefficients in the q-Heisenberg
// algebra: the same shape as a module-form class.
using OracleRow = ModuleForm;

// Row w of the v -> 0 limit of the deformed translation operator for lambda:
// the product of lowering matrices for beta_l .. beta_1, the diagonal middle
// factor, and raising matrices for gamma_1 .. gamma_m, expanded over all 2^n
// stay/cross paths.  Paths of positive total v-order vanish in the limit;
// negative total order would make the limit diverge and is a structural
// impossibility, reported as an internal error.
inline OracleRow rho0_row(const MinusculeDatum& d, const WeylElt& w) {
  const RootSystem& rs = *d.rs;
  OracleRow row;

  std::vector<WeylElt> refl;
  refl.reserve(d.n);
  for (int t = 1; t <= d.n; ++t) refl.push_back(WeylElt::reflection(rs, d.eta(t)));

  std::vector<FactoredEntry> chosen(d.n);
  // uinv = u_t^{-1} for the current vertex u_t, as in the walk enumeration.
  // The middle factor is inserted the first time depth l is reached on each
  // path (mid_done guards re-entry; l == 0 hits it immediately): an even
  // v-power given by the height of u_l^{-1} lambda - lambda, plus the
  // translation element u_l^{-1} lambda.
  std::function<void(int, const WeylElt&, Int, bool, Int, const Coords&)> rec =
      [&](int t, const WeylElt& uinv, Int order, bool mid_done, Int mid_order,
          const Coords& mid_weight) {
        if (t == d.l && !mid_done) {
          Coords mu = uinv.apply(d.lambda);
          auto diff = rs.to_root_coords(mu - d.lambda);
          if (!diff) throw internal_error("orbit weight difference left the root lattice");
          Coords diff_rc = *diff;
          Int h = 0;
          for (int i = 0; i < diff_rc.size(); ++i) h += diff_rc[i];
          rec(t, uinv, order, true, 2 * h, mu);
          return;
        }
        if (t == d.n) {
          Int total = order + mid_order;
          if (total > 0) return;
          if (total < 0) throw internal_error("negative v-order path in translation row");
          HeisElt value = HeisElt::t(rs, mid_weight);
          for (int s = d.l; s < d.n; ++s) value = value * chosen[s].limit_value();
          for (int s = d.l - 1; s >= 0; --s) value = chosen[s].limit_value() * value;
          module_add(row, uinv.inverse(), value);
          return;
        }
        SignedRoot eta = d.eta(t + 1);
        int sign = t + 1 <= d.l ? -1 : +1;
        WeylElt u = uinv.inverse();
        chosen[t] = kappa_g_entry(rs, eta, sign, u, true);
        rec(t + 1, uinv, order + chosen[t].order, mid_done, mid_order, mid_weight);
        chosen[t] = kappa_g_entry(rs, eta, sign, u, false);
        rec(t + 1, get_weyl(rs).mul(uinv, refl[t]), order + chosen[t].order, mid_done,
            mid_order, mid_weight);
      };
  rec(0, w.inverse(), 0, false, 0, Coords::zero(rs.rank()));
  return row;
}

// The same row computed from the quantum-walk sum: for each quantum walk from
// w, a product of per-step factors in the X variables on either side of the
// translation t_{w_l^{-1} lambda}, accumulated at the end vertex.
inline OracleRow ylim_row(const MinusculeDatum& d, const WeylElt& w) {
  const RootSystem& rs = *d.rs;
  OracleRow row;
  enumerate_quantum_walks(d, w, [&](const Walk& walk) {
    HeisElt left = HeisElt::one(rs), right = HeisElt::one(rs);
    for (int t = 1; t <= d.n; ++t) {
      const WalkStep& s = walk.step(t);
      Coords chi = rs.root_fund(s.chi);
      Int h = rs.height(s.chi);
      if (t <= d.l) {
        if (!s.cross && h == 1)
          left = left * (HeisElt::one(rs) - HeisElt::x(rs, -chi));
        else if (s.kind == StepKind::down)
          left = left * (-HeisElt::x(rs, chi));
      } else {
        if (!s.cross && h == -1)
          right = right * (HeisElt::one(rs) - HeisElt::x(rs, chi));
        else if (s.kind == StepKind::down)
          right = right * HeisElt::x(rs, chi);
        else if (s.kind == StepKind::up)
          right = -right;
      }
    }
    Coords mu = walk.after_l.inverse().apply(d.lambda);
    module_add(row, walk.end, left * (HeisElt::t(rs, mu) * right));
  });
  return row;
}

// Compare the two computations of the same row, per end vertex.
struct RowMismatch {
  WeylElt vertex;
  HeisElt lhs, rhs;
};

inline std::vector<RowMismatch> compare_rows(const OracleRow& lhs, const OracleRow& rhs) {
  std::vector<RowMismatch> out;
  auto il = lhs.begin();
  auto ir = rhs.begin();
  while (il != lhs.end() || ir != rhs.end()) {
    if (ir == rhs.end() || (il != lhs.end() && il->first < ir->first)) {
      out.push_back({il->second.first, il->second.second,
                     HeisElt::zero(il->second.second.rs())});
      ++il;
    } else if (il == lhs.end() || ir->first < il->first) {
      out.push_back({ir->second.first, HeisElt::zero(ir->second.second.rs()),
                     ir->second.second});
      ++ir;
    } else {
      if (!(il->second.second == ir->second.second))
        out.push_back({il->second.first, il->second.second, ir->second.second});
      ++il;
      ++ir;
    }
  }
  return out;
}

}  // namespace ichev
