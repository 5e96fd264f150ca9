#pragma once

// Shared plumbing: fixed-capacity integer coordinate vectors, exact rational
// scalars, error types.  Everything downstream stores weights and roots as
// small integer vectors, so this file is deliberately allocation-free.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace ichev {

using Int = long long;
using Rat = boost::rational<Int>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

// Bad user input (CLI exit code 1).
struct invalid_argument_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally fine input outside the supported regime (CLI exit code 1).
struct unsupported_weight_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proved invariant failed; never expected to fire (CLI exit code 3).
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxRank = 9;

// Coordinate vector of length `n` (<= kMaxRank).  Which basis the entries
// refer to (fundamental weights or simple roots) is a matter of context.
struct Coords {
  std::array<Int, kMaxRank> v{};
  int n = 0;

  Coords() = default;
  explicit Coords(int rank) : n(rank) {}

  static Coords zero(int rank) { return Coords(rank); }
  static Coords unit(int rank, int i) {
    Coords c(rank);
    c.v[i] = 1;
    return c;
  }

  Int& operator[](int i) { return v[i]; }
  Int operator[](int i) const { return v[i]; }
  int size() const { return n; }

  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (v[i] != 0) return false;
    return true;
  }

  Coords& operator+=(const Coords& o) {
    for (int i = 0; i < n; ++i) v[i] += o.v[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    for (int i = 0; i < n; ++i) v[i] -= o.v[i];
    return *this;
  }
  Coords& operator*=(Int k) {
    for (int i = 0; i < n; ++i) v[i] *= k;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(Int k, Coords a) { return a *= k; }
  friend Coords operator-(Coords a) {
    for (int i = 0; i < a.n; ++i) a.v[i] = -a.v[i];
    return a;
  }

  friend bool operator==(const Coords& a, const Coords& b) {
    if (a.n != b.n) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.v[i] != b.v[i]) return false;
    return true;
  }
  friend bool operator!=(const Coords& a, const Coords& b) { return !(a == b); }
  // Lexicographic; the canonical tie-break order everywhere.
  friend bool operator<(const Coords& a, const Coords& b) {
    if (a.n != b.n) return a.n < b.n;
    for (int i = 0; i < a.n; ++i)
      if (a.v[i] != b.v[i]) return a.v[i] < b.v[i];
    return false;
  }
};

// Componentwise dot product.  Pairs fundamental-coordinate weights with
// root-coordinate roots: (lambda, beta) = sum_i <lambda,alpha_i^vee> c_i.
inline Int dot(const Coords& a, const Coords& b) {
  Int s = 0;
  for (int i = 0; i < a.n; ++i) s += a.v[i] * b.v[i];
  return s;
}

inline std::string to_string(const Coords& c, char sep = ',') {
  std::string s;
  for (int i = 0; i < c.n; ++i) {
    if (i) s += sep;
    s += std::to_string(c.v[i]);
  }
  return s;
}

struct CoordsHash {
  size_t operator()(const Coords& c) const {
    size_t h = 0x9e3779b97f4a7c15ull ^ (size_t)c.n;
    for (int i = 0; i < c.n; ++i) {
      h ^= std::hash<Int>()(c.v[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace ichev
