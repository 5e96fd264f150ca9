#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "ichev/weyl.hpp"

namespace ichev {

// Directed graph on W: x -> x s_beta for beta > 0, present when the length
// either rises by 1 (Bruhat edge) or drops by 2 ht(beta) - 1 (quantum edge).
enum class EdgeKind { none = 0, bruhat = 1, quantum = 2 };

inline const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::bruhat: return "bruhat";
    case EdgeKind::quantum: return "quantum";
    default: return "none";
  }
}

inline EdgeKind classify_length_change(Int diff, Int height) {
  if (diff == 1) return EdgeKind::bruhat;
  if (diff == 1 - 2 * height) return EdgeKind::quantum;
  return EdgeKind::none;
}

inline EdgeKind classify_edge(const WeylElt& x, int root_index) {
  const RootSystem& rs = x.rs();
  SignedRoot beta{root_index, +1};
  WeylElt xs = x * WeylElt::reflection(rs, beta);
  return classify_length_change(weyl_length(xs) - weyl_length(x), rs.height(beta));
}

struct QbgEdge {
  int source = 0;  // index into Weyl::elements()
  int target = 0;
  int root = 0;  // positive root index labelling the edge
  EdgeKind kind = EdgeKind::none;
};

// Full edge list; requires an interned group.
inline std::vector<QbgEdge> qbg_edges(const Weyl& W) {
  const RootSystem& rs = W.rs();
  const auto& elems = W.elements();
  std::vector<QbgEdge> edges;
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    WeylElt refl = WeylElt::reflection(rs, SignedRoot{r, +1});
    Int h = rs.height(SignedRoot{r, +1});
    for (int i = 0; i < (int)elems.size(); ++i) {
      int j = W.index_of(W.mul(elems[i], refl));
      EdgeKind kind = classify_length_change(W.length(elems[j]) - W.length(elems[i]), h);
      if (kind != EdgeKind::none) edges.push_back({i, j, r, kind});
    }
  }
  return edges;
}

// Graphviz rendering: solid arrows for Bruhat edges, dashed for quantum ones.
inline std::string qbg_dot(const Weyl& W) {
  const RootSystem& rs = W.rs();
  std::ostringstream out;
  out << "digraph qbg {\n  rankdir=BT;\n";
  for (int i = 0; i < W.size(); ++i)
    out << "  n" << i << " [label=\"" << word_to_string(W.word(W.elements()[i])) << "\"];\n";
  for (const QbgEdge& e : qbg_edges(W)) {
    out << "  n" << e.source << " -> n" << e.target << " [label=\""
        << to_string(rs.root_rc(SignedRoot{e.root, +1})) << "\"";
    if (e.kind == EdgeKind::quantum) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ichev
