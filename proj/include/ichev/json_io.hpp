#pragma once

#include <json.hpp>

#include "ichev/qbg.hpp"
#include "ichev/verify.hpp"
#include "ichev/walks.hpp"

// JSON views of the public value types.  Field order is fixed (ordered_json)
// so serialized output is byte-deterministic.

namespace ichev {

using ojson = nlohmann::ordered_json;

inline ojson coords_json(const Coords& c) {
  ojson a = ojson::array();
  for (int i = 0; i < c.size(); ++i) a.push_back((long long)c[i]);
  return a;
}

inline std::string exponent_key(const Rat& e) {
  std::string s = std::to_string((long long)e.numerator());
  if (e.denominator() != 1) s += "/" + std::to_string((long long)e.denominator());
  return s;
}

inline ojson coeff_json(const LaurentQ& c) {
  ojson o = ojson::object();
  for (const auto& [e, v] : c.terms()) o[exponent_key(e)] = (long long)v;
  return o;
}

inline ojson word_json(const RootSystem& rs, const WeylElt& w) {
  ojson a = ojson::array();
  for (int i : get_weyl(rs).word(w)) a.push_back(i + 1);  // 1-based on the outside
  return a;
}

// HeisElt: list of {t, x, coeff} terms in canonical map order.
inline ojson to_json(const HeisElt& h) {
  ojson a = ojson::array();
  for (const auto& [mono, c] : h.terms())
    a.push_back({{"t", coords_json(mono.first)}, {"x", coords_json(mono.second)},
                 {"coeff", coeff_json(c)}});
  return a;
}

// KClass: same term schema with the finite Weyl part in front.
inline ojson to_json(const KClass& k) {
  const RootSystem& rs = k.rs();
  ojson a = ojson::array();
  for (const auto& [idx, c] : k.terms())
    a.push_back({{"w", word_json(rs, idx.w)}, {"t", coords_json(idx.trans)},
                 {"x", coords_json(idx.bundle)}, {"coeff", coeff_json(c)}});
  return a;
}

// Full graph dump: {source_word, target_word, root_coords, kind} per edge.
inline ojson qbg_json(const Weyl& W) {
  const RootSystem& rs = W.rs();
  ojson edges = ojson::array();
  for (const QbgEdge& e : qbg_edges(W))
    edges.push_back({{"source_word", word_json(rs, W.elements()[e.source])},
                     {"target_word", word_json(rs, W.elements()[e.target])},
                     {"root_coords", coords_json(rs.root_rc(SignedRoot{e.root, +1}))},
                     {"kind", e.kind == EdgeKind::bruhat ? "bruhat" : "quantum"}});
  return ojson{{"type", rs.type().to_string()}, {"vertices", W.size()}, {"edges", edges}};
}

// Decorated walk dump for one start element.
inline ojson walks_json(const MinusculeDatum& d, const WeylElt& start) {
  const RootSystem& rs = *d.rs;
  ojson eta = ojson::array();
  for (int t = 1; t <= d.n; ++t) eta.push_back(coords_json(rs.root_rc(d.eta(t))));

  ojson walks = ojson::array();
  for (const Walk& w : quantum_walks(d, start)) {
    std::string steps;
    ojson vertices = ojson::array();
    vertices.push_back(word_json(rs, w.start));
    WeylElt cur = w.start;
    for (int t = 1; t <= d.n; ++t) {
      steps += w.stationary(t) ? 'S' : 'C';
      if (!w.stationary(t)) cur = WeylElt::reflection(rs, d.eta(t)) * cur;
      vertices.push_back(word_json(rs, cur));
    }
    ojson decs = ojson::array();
    auto [s_minus, s_plus] = stationary_sets(w);
    std::vector<int> s_set = s_minus;
    s_set.insert(s_set.end(), s_plus.begin(), s_plus.end());
    for (const DecoratedWalk& dw : enumerate_decorations(w)) {
      ojson chosen = ojson::array();
      for (size_t i = 0; i < s_set.size(); ++i)
        if (dw.bmask & (uint32_t(1) << i)) chosen.push_back(s_set[i]);
      auto wt_rc = rs.to_root_coords(dw.wt);
      if (!wt_rc) throw internal_error("decoration weight outside the root lattice");
      decs.push_back({{"b", chosen}, {"sign", (long long)dw.sign},
                      {"wt", coords_json(*wt_rc)},
                      {"deg", (long long)dw.deg}});
    }
    walks.push_back({{"steps", steps}, {"vertices", vertices}, {"decorations", decs}});
  }
  return ojson{{"type", rs.type().to_string()}, {"lambda", coords_json(d.lambda)},
               {"start_word", word_json(rs, start)}, {"eta", eta}, {"walks", walks}};
}

// Row-verification report: {type, lambda, w, rows: [{u, match, lhs, rhs}]}.
inline ojson row_report_json(const RootSystem& rs, const RowResult& r) {
  ojson rows = ojson::array();
  for (const RowEntry& e : r.rows)
    rows.push_back({{"u", word_json(rs, e.u)}, {"match", e.match},
                    {"lhs", to_json(e.lhs)}, {"rhs", to_json(e.rhs)}});
  return ojson{{"type", rs.type().to_string()}, {"lambda", coords_json(r.lambda)},
               {"w", word_json(rs, r.w)}, {"rows", rows}};
}

inline ojson pair_report_json(const RootSystem& rs, const PairResult& r) {
  return ojson{{"lambda", coords_json(r.lambda)}, {"w", word_json(rs, r.w)},
               {"pass", r.pass}, {"failed_checks", r.notes}};
}

}  // namespace ichev
