#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "ichev/oracle.hpp"

using namespace ichev;

namespace {

Coords fc(const RootSystem& rs, std::initializer_list<Int> xs) {
  Coords c(rs.rank());
  int i = 0;
  for (Int x : xs) c[i++] = x;
  return c;
}

HeisElt hx(const RootSystem& rs, const Coords& nu) { return HeisElt::x(rs, nu); }

}  // namespace

TEST_CASE("entry normal forms in rank one") {
  const RootSystem& a1 = get_root_system("A1");
  WeylElt e = WeylElt::identity(a1), s1 = WeylElt::simple(a1, 0);
  Coords alpha = a1.simple_root(0);

  // Raising diagonal at e: b = alpha, height 1.
  FactoredEntry d0 = kappa_g_entry(a1, SignedRoot{0, +1}, +1, e, true);
  CHECK(d0.coeff == 1);
  CHECK(d0.order == 0);
  CHECK(d0.x_mono.is_zero());
  REQUIRE(d0.num.size() == 1);
  CHECK(d0.num[0] == VxFactor{4, -alpha});
  REQUIRE(d0.den.size() == 1);
  CHECK(d0.den[0] == VxFactor{2, -alpha});
  CHECK(d0.limit_value() == HeisElt::one(a1));

  // Raising diagonal at s1: b = -alpha, height -1; the limit keeps a factor.
  FactoredEntry d1 = kappa_g_entry(a1, SignedRoot{0, +1}, +1, s1, true);
  CHECK(d1.coeff == 1);
  CHECK(d1.order == 2);
  REQUIRE(d1.num.size() == 1);
  CHECK(d1.num[0] == VxFactor{0, -alpha});
  CHECK(d1.limit_value() == HeisElt::one(a1) - hx(a1, -alpha));

  // Raising off-diagonal at e: constant -1 in the limit, order 0.
  FactoredEntry o0 = kappa_g_entry(a1, SignedRoot{0, +1}, +1, e, false);
  CHECK(o0.coeff == -1);
  CHECK(o0.order == 0);
  CHECK(o0.x_mono.is_zero());
  CHECK(o0.limit_value() == -HeisElt::one(a1));

  // Raising off-diagonal at s1: order 2 with monomial X^{-alpha}.
  FactoredEntry o1 = kappa_g_entry(a1, SignedRoot{0, +1}, +1, s1, false);
  CHECK(o1.coeff == 1);
  CHECK(o1.order == 2);
  CHECK(o1.x_mono == -alpha);
  CHECK(o1.limit_value() == hx(a1, -alpha));

  // Lowering entries at e: diagonal keeps (1 - X^{-alpha}) at order 0 since
  // the height is 1; off-diagonal sits at order -2.
  FactoredEntry ld = kappa_g_entry(a1, SignedRoot{0, +1}, -1, e, true);
  CHECK(ld.order == 0);
  CHECK(ld.limit_value() == HeisElt::one(a1) - hx(a1, -alpha));
  FactoredEntry lo = kappa_g_entry(a1, SignedRoot{0, +1}, -1, e, false);
  CHECK(lo.coeff == 1);
  CHECK(lo.order == -2);
  CHECK(lo.limit_value() == HeisElt::one(a1));

  // Lowering entries at s1: b = -alpha.
  FactoredEntry ld1 = kappa_g_entry(a1, SignedRoot{0, +1}, -1, s1, true);
  CHECK(ld1.order == -2);
  CHECK(ld1.limit_value() == HeisElt::one(a1));
  FactoredEntry lo1 = kappa_g_entry(a1, SignedRoot{0, +1}, -1, s1, false);
  CHECK(lo1.coeff == -1);
  CHECK(lo1.order == 0);
  CHECK(lo1.x_mono == -alpha);
  CHECK(lo1.limit_value() == -hx(a1, -alpha));
}

TEST_CASE("denominator exponents stay positive") {
  // Sampled across types: normalized denominators always have a >= 2, so the
  // v -> 0 limit of every denominator is exactly 1.
  for (const char* t : {"A3", "D4"}) {
    const RootSystem& rs = get_root_system(t);
    const Weyl& W = get_weyl(rs);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> pw(0, W.size() - 1);
    std::uniform_int_distribution<int> pr(0, int(rs.num_positive_roots()) - 1);
    for (int trial = 0; trial < 40; ++trial) {
      WeylElt w = W.elements()[pw(rng)];
      SignedRoot eta{pr(rng), +1};
      for (int sign : {+1, -1})
        for (bool diag : {true, false}) {
          FactoredEntry f = kappa_g_entry(rs, eta, sign, w, diag);
          for (const VxFactor& g : f.den) CHECK(g.a >= 2);
          for (const VxFactor& g : f.num) CHECK(g.a >= 0);
          CHECK((f.coeff == 1 || f.coeff == -1));
        }
    }
  }
}

TEST_CASE("rank one rows") {
  const RootSystem& a1 = get_root_system("A1");
  WeylElt e = WeylElt::identity(a1), s1 = WeylElt::simple(a1, 0);
  Coords alpha = a1.simple_root(0);
  Coords omega = a1.fundamental_weight(0);
  MinusculeDatum d = minuscule_datum(a1, omega);

  OracleRow row_e = rho0_row(d, e);
  REQUIRE(row_e.size() == 2);
  CHECK(row_e.at(e.key()).second == HeisElt::t(a1, omega));
  CHECK(row_e.at(s1.key()).second == -HeisElt::t(a1, omega));

  OracleRow row_s = rho0_row(d, s1);
  REQUIRE(row_s.size() == 2);
  CHECK(row_s.at(s1.key()).second ==
        HeisElt::t(a1, -omega) * (HeisElt::one(a1) - hx(a1, -alpha)));
  CHECK(row_s.at(e.key()).second == HeisElt::t(a1, -omega) * hx(a1, -alpha));

  // The quantum-walk sum reproduces both rows.
  CHECK(compare_rows(row_e, ylim_row(d, e)).empty());
  CHECK(compare_rows(row_s, ylim_row(d, s1)).empty());

  // Negative weight: first phase only.
  MinusculeDatum dm = minuscule_datum(a1, fc(a1, {-1}));
  OracleRow rm = rho0_row(dm, e);
  CHECK(compare_rows(rm, ylim_row(dm, e)).empty());
  REQUIRE(rm.size() == 2);
  CHECK(rm.at(e.key()).second ==
        HeisElt::t(a1, -omega) -
            HeisElt::monomial(a1, -omega, -alpha, LaurentQ::q_power(Rat(1))));
  CHECK(rm.at(s1.key()).second == HeisElt::t(a1, omega));
}

TEST_CASE("row support equals walk endpoints") {
  const RootSystem& a2 = get_root_system("A2");
  const Weyl& W = get_weyl(a2);
  for (int node : {0, 1}) {
    MinusculeDatum d = minuscule_datum(a2, a2.fundamental_weight(node));
    for (const WeylElt& w : W.elements()) {
      std::set<Coords> ends;
      for (const Walk& walk : quantum_walks(d, w)) ends.insert(walk.end.key());
      std::set<Coords> support;
      for (const auto& [key, entry] : rho0_row(d, w)) {
        support.insert(key);
        CHECK(entry.second.integral());
      }
      CHECK(support == ends);
    }
  }
}

TEST_CASE("limit rows agree exhaustively in small rank") {
  for (const char* t : {"A1", "A2", "A3"}) {
    const RootSystem& rs = get_root_system(t);
    const Weyl& W = get_weyl(rs);
    for (const Coords& lam : all_minuscule_weights(rs)) {
      MinusculeDatum d = minuscule_datum(rs, lam);
      for (const WeylElt& w : W.elements()) {
        auto mism = compare_rows(rho0_row(d, w), ylim_row(d, w));
        if (!mism.empty()) {
          UNSCOPED_INFO(t << " lambda=" << to_string(lam) << " w=" << word_to_string(reduced_word(w))
                          << " first mismatch at " << word_to_string(reduced_word(mism[0].vertex)));
        }
        REQUIRE(mism.empty());
      }
    }
  }
}

TEST_CASE("limit rows agree on sampled higher-rank data") {
  std::mt19937_64 rng(11);
  for (const char* t : {"A4", "D4", "D5"}) {
    const RootSystem& rs = get_root_system(t);
    const Weyl& W = get_weyl(rs);
    std::uniform_int_distribution<int> pw(0, W.size() - 1);
    auto weights = all_minuscule_weights(rs);
    std::uniform_int_distribution<size_t> pl(0, weights.size() - 1);
    for (int trial = 0; trial < 8; ++trial) {
      MinusculeDatum d = minuscule_datum(rs, weights[pl(rng)]);
      WeylElt w = W.elements()[pw(rng)];
      CHECK(compare_rows(rho0_row(d, w), ylim_row(d, w)).empty());
    }
  }
}
