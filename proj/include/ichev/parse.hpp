#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "ichev/type_a.hpp"

// Parsers for the command-line argument syntax: weights as "w:c1,...,cn"
// (fundamental coordinates) or "eps:i" (type A), Weyl elements as
// whitespace-separated 1-based simple-reflection indices, "w0", or "e".

namespace ichev {

inline Coords parse_coords(const RootSystem& rs, const std::string& s) {
  Coords c = Coords::zero(rs.rank());
  std::stringstream in(s);
  std::string item;
  int i = 0;
  while (std::getline(in, item, ',')) {
    if (i >= rs.rank()) throw invalid_argument_error("too many coordinates in \"" + s + "\"");
    try {
      size_t used = 0;
      c[i] = std::stoll(item, &used);
      while (used < item.size() && std::isspace((unsigned char)item[used])) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw invalid_argument_error("bad coordinate \"" + item + "\" in \"" + s + "\"");
    }
    ++i;
  }
  if (i != rs.rank())
    throw invalid_argument_error("expected " + std::to_string(rs.rank()) +
                                 " coordinates, got " + std::to_string(i));
  return c;
}

inline Coords parse_weight(const RootSystem& rs, const std::string& s) {
  if (s.rfind("w:", 0) == 0) return parse_coords(rs, s.substr(2));
  if (s.rfind("eps:", 0) == 0) {
    try {
      return epsilon_weight(rs, std::stoi(s.substr(4)));
    } catch (const invalid_argument_error&) {
      throw;
    } catch (const std::exception&) {
      throw invalid_argument_error("bad epsilon index in \"" + s + "\"");
    }
  }
  throw invalid_argument_error("weight must look like w:c1,...,cn or eps:i, got \"" + s + "\"");
}

inline WeylElt parse_weyl(const RootSystem& rs, const std::string& s) {
  std::stringstream in(s);
  std::string tok;
  std::vector<int> word;
  bool first = true;
  while (in >> tok) {
    if (first && tok == "w0") {
      if (in >> tok) throw invalid_argument_error("unexpected input after w0");
      return get_weyl(rs).w0();
    }
    if (first && tok == "e") {
      if (in >> tok) throw invalid_argument_error("unexpected input after e");
      return WeylElt::identity(rs);
    }
    first = false;
    int i = 0;
    try {
      size_t used = 0;
      i = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw invalid_argument_error("bad reflection index \"" + tok + "\"");
    }
    if (i < 1 || i > rs.rank())
      throw invalid_argument_error("reflection index " + std::to_string(i) +
                                   " out of range 1.." + std::to_string(rs.rank()));
    word.push_back(i - 1);
  }
  return WeylElt::from_word(rs, word);
}

}  // namespace ichev
