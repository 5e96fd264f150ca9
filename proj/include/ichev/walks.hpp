#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ichev/minuscule.hpp"
#include "ichev/qbg.hpp"

namespace ichev {

enum class StepKind : uint8_t { stay, up, down };

struct WalkStep {
  bool cross = false;
  StepKind kind = StepKind::stay;
  SignedRoot chi{0, +1};  // w_{t-1}^{-1} eta_t, evaluated before the step
};

// A walk (w_0, .., w_n) through the quantum Bruhat graph with step roots
// eta_t drawn from a minuscule datum: every step either stays put or crosses
// to s_{eta_t} w_{t-1} along an edge.
struct Walk {
  const MinusculeDatum* datum = nullptr;
  WeylElt start;    // w_0
  WeylElt after_l;  // w_l, the vertex reached once the first phase ends
  WeylElt end;      // w_n
  std::vector<WalkStep> steps;

  int n() const { return datum->n; }
  int l() const { return datum->l; }
  const RootSystem& rs() const { return *datum->rs; }
  bool stationary(int t) const { return !steps[t - 1].cross; }  // 1-based step
  const WalkStep& step(int t) const { return steps[t - 1]; }
};

// Depth-first enumeration, stay branch before cross branch, so walks arrive
// in lexicographic order of their step bit-vectors.  The Walk handed to the
// visitor is a reused buffer: copy it to keep it.
inline void enumerate_quantum_walks(const MinusculeDatum& d, const WeylElt& w,
                                    const std::function<void(const Walk&)>& visit) {
  const RootSystem& rs = *d.rs;
  const Weyl& W = get_weyl(rs);

  std::vector<WeylElt> refl;
  refl.reserve(d.n);
  for (int t = 1; t <= d.n; ++t) refl.push_back(WeylElt::reflection(rs, d.eta(t)));

  Walk buf;
  buf.datum = &d;
  buf.start = w;
  buf.steps.resize(d.n);

  // u = w_t^{-1} is cheaper to maintain than w_t: stepping multiplies on the
  // right by a fixed reflection, and chi_t = u(eta_t).
  std::function<void(int, const WeylElt&, Int)> rec = [&](int t, const WeylElt& u, Int len) {
    if (t == d.l) buf.after_l = u.inverse();
    if (t == d.n) {
      buf.end = u.inverse();
      visit(buf);
      return;
    }
    SignedRoot chi = rs.expect_root(u.apply(rs.root_fund(d.eta(t + 1))));
    buf.steps[t] = {false, StepKind::stay, chi};
    rec(t + 1, u, len);

    WeylElt u2 = W.mul(u, refl[t]);
    Int len2 = W.length(u2);
    bool edge = chi.sign > 0 ? len2 - len == 1
                             : len - len2 == 2 * rs.height(SignedRoot{chi.index, +1}) - 1;
    if (edge) {
      buf.steps[t] = {true, chi.sign > 0 ? StepKind::up : StepKind::down, chi};
      rec(t + 1, u2, len2);
    }
  };
  rec(0, w.inverse(), weyl_length(w));
}

inline std::vector<Walk> quantum_walks(const MinusculeDatum& d, const WeylElt& w) {
  std::vector<Walk> out;
  enumerate_quantum_walks(d, w, [&](const Walk& walk) { out.push_back(walk); });
  return out;
}

// Stationary steps eligible for decoration: S^- in the first phase where
// (rho, chi_t) = 1, S^+ in the second phase where (rho, chi_t) = -1.
// Returned as 1-based step indices.
inline std::pair<std::vector<int>, std::vector<int>> stationary_sets(const Walk& w) {
  std::vector<int> minus, plus;
  for (int t = 1; t <= w.n(); ++t) {
    if (!w.stationary(t)) continue;
    Int h = w.rs().height(w.step(t).chi);
    if (t <= w.l() && h == 1) minus.push_back(t);
    if (t > w.l() && h == -1) plus.push_back(t);
  }
  return {minus, plus};
}

struct DecoratedWalk {
  uint32_t bmask = 0;  // bit i = b(s_set[i]) over the sorted union of S^-, S^+
  Int sign = 1;
  Coords wt;  // in the root lattice, fundamental coordinates
  Int deg = 0;
};

// Expand one quantum walk into its 2^{|S|} decorations, computing the sign,
// weight, and degree recursions step by step.  Decorations are emitted in
// increasing bmask order.
inline std::vector<DecoratedWalk> enumerate_decorations(const Walk& w) {
  const RootSystem& rs = w.rs();
  const MinusculeDatum& d = *w.datum;
  auto [s_minus, s_plus] = stationary_sets(w);
  std::vector<int> s_set = s_minus;
  s_set.insert(s_set.end(), s_plus.begin(), s_plus.end());

  // nu_bar = -w0 w_l^{-1} lambda enters through the pivot degree term.
  const Weyl& W = get_weyl(rs);
  Coords nu_bar = -W.w0().apply(w.after_l.inverse().apply(d.lambda));

  Int base_sign = 1;
  for (int t = 1; t <= w.n(); ++t) {
    if (t <= w.l() && w.step(t).kind == StepKind::down) base_sign = -base_sign;
    if (t > w.l() && w.step(t).kind == StepKind::up) base_sign = -base_sign;
  }

  std::vector<DecoratedWalk> out;
  out.reserve(size_t(1) << s_set.size());
  for (uint32_t bmask = 0; bmask < (uint32_t(1) << s_set.size()); ++bmask) {
    DecoratedWalk dw;
    dw.bmask = bmask;
    dw.sign = base_sign;
    for (size_t i = 0; i < s_set.size(); ++i)
      if (bmask & (uint32_t(1) << i)) dw.sign = -dw.sign;

    auto b_of = [&](int t) -> int {
      for (size_t i = 0; i < s_set.size(); ++i)
        if (s_set[i] == t) return (bmask >> i) & 1;
      return 0;
    };

    Coords wt_fund = Coords::zero(rs.rank()), wt_rc = Coords::zero(rs.rank());
    Int deg = 0;
    auto advance = [&](int t) {
      SignedRoot chi = w.step(t).chi;
      // delta = w0 chi_t; the step weight d_t is 0, delta, or -delta.
      Coords delta_fund = W.w0().apply(rs.root_fund(chi));
      SignedRoot delta = rs.expect_root(delta_fund);
      Int dir = 0;
      if (w.step(t).kind == StepKind::down) dir = 1;
      if (w.stationary(t)) {
        Int h = rs.height(chi);
        if (t <= w.l() && h == 1) dir = -b_of(t);
        if (t > w.l() && h == -1) dir = b_of(t);
      }
      if (dir == 0) return;
      Coords d_fund = dir * delta_fund, d_rc = dir * rs.root_rc(delta);
      Int norm2 = dot(d_fund, d_rc);
      if (norm2 % 2 != 0) throw internal_error("odd root norm in degree recursion");
      deg += norm2 / 2 + dot(d_fund, wt_rc);
      wt_fund += d_fund;
      wt_rc += d_rc;
    };

    for (int t = 1; t <= w.l(); ++t) advance(t);
    deg += dot(nu_bar, wt_rc);  // pivot term (nu_bar, wt_l)
    for (int t = w.l() + 1; t <= w.n(); ++t) advance(t);

    dw.wt = wt_fund;
    dw.deg = deg;
    out.push_back(dw);
  }
  return out;
}

}  // namespace ichev
