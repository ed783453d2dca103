#include "common.hpp"

using namespace prohecke;
using namespace prohecke::fixtures;

TEST(Satake, CharacterCounts) {
  auto c = make(gl2(3));
  auto chars = enumerate_characters(c->G);
  EXPECT_EQ(chars.size(), 6u);
  for (const auto& chi : chars) {
    std::string why;
    EXPECT_TRUE(validate_character(c->Hp, c->F, chi, &why)) << why;
    EXPECT_EQ(chi.pi_chi & ~chi.pi_xibar, 0u);
  }
  // Independent count: each torus character contributes 2^(number of simple coroots it kills).
  for (const RootDatum& d : {sl2(5), sl3(3), sp4(3), gl3(3)}) {
    auto e = make(d);
    long want = 0;
    for (const auto& xi : e->G.all_characters()) {
      int bits = 0;
      for (int i = 0; i < d.num_simple(); ++i) {
        bool killed = true;
        for (Int a = 1; a < e->G.modulus(); ++a)
          killed = killed && floor_mod(xi.exps.dot(d.simple_coroot(i)) * a, e->G.modulus()) == 0;
        bits += killed;
      }
      want += 1L << bits;
    }
    EXPECT_EQ(static_cast<long>(enumerate_characters(e->G).size()), want) << d.name();
  }
}

TEST(Satake, GeneratorValues) {
  auto c = make(gl2(3));
  for (const auto& chi : enumerate_characters(c->G)) {
    Fq v = chi_generator(c->F, chi, 0);
    // -1 on roots where the torus character allows it, unless the character picks 0 there.
    if ((chi.pi_xibar & 1u) && !(chi.pi_chi & 1u))
      EXPECT_EQ(v.v, c->F.neg(1));
    else
      EXPECT_EQ(v.v, 0);
    EXPECT_EQ(chi_value(c->G, c->F, chi, c->G.identity()).v, 1);
  }
}

TEST(Satake, ProjectionAndBasis) {
  auto c = make(sl2(3));
  for (const auto& chi : enumerate_characters(c->G)) {
    SphericalModule mod(c->Hp, c->F, chi);
    SphericalElt one = mod.basis(c->W.ext_identity());
    EXPECT_EQ(one.coef.size(), 1u);
    EXPECT_EQ(mod.project(c->Hp.one()), one);
    EXPECT_EQ(c->satake.satake_T(chi, vec({0})), one);
    int dim = 0;
    auto f0 = c->satake.f_basis(chi, vec({0}), &dim);
    ASSERT_TRUE(f0.has_value());
    EXPECT_EQ(dim, 1);
    EXPECT_EQ(*f0, one);
    // A finite element acts through the character.
    const TameElt& n = c->Hp.simple_lift(0);
    EXPECT_EQ(mod.project(c->Hp.tau(n)), one.scaled(chi_value(c->G, c->F, chi, n)));
  }
}

TEST(Satake, EigenvectorsWithUnitLeadingTerm) {
  auto c = make(sp4(3));
  for (const auto& chi : enumerate_characters(c->G)) {
    SphericalModule mod(c->Hp, c->F, chi);
    for (const Vec& lam : dominant_box(c->datum, 1)) {
      SphericalElt T = c->satake.satake_T(chi, lam);
      std::string why;
      EXPECT_TRUE(mod.is_eigenvector(T, &why)) << why;
      ExtWeylElt top = c->W.translation(lam);
      EXPECT_EQ(T.at(top).v, 1);
      for (const auto& [d, coef] : T.coef)
        if (!(d == top)) EXPECT_TRUE(c->S.bruhat_less(d, top));
    }
  }
}

TEST(Satake, SteinbergIsSingleLayer) {
  auto c = make(gl2(3));
  int seen = 0;
  for (const auto& chi : enumerate_characters(c->G)) {
    if (chi.pi_chi != 0) continue;
    ++seen;
    for (const Vec& lam : dominant_box(c->datum, 2)) {
      SphericalElt T = c->satake.satake_T(chi, lam);
      for (const auto& [d, coef] : T.coef) EXPECT_TRUE(same(cartan_support(c->W, d), lam));
      int dim = 0;
      EXPECT_EQ(c->satake.f_basis(chi, lam, &dim), T);
    }
  }
  EXPECT_EQ(seen, 4);
}

TEST(Satake, SupportIdentities) {
  for (const RootDatum& d : {sl2(3), sl2(5), gl2(3)}) {
    auto c = make(d);
    for (const auto& chi : enumerate_characters(c->G))
      for (const Vec& lam : dominant_box(c->datum, 2)) {
        SphericalElt T = c->satake.satake_T(chi, lam);
        EXPECT_EQ(c->satake.sum_A(chi, lam), T) << d.name();
        EXPECT_EQ(c->satake.sum_B(chi, lam), T) << d.name();
      }
  }
}

TEST(Satake, SupportIdentitiesRequireSimplyConnectedDerivedGroup) {
  auto c = make(pgl2(3));
  auto chars = enumerate_characters(c->G);
  ASSERT_FALSE(chars.empty());
  EXPECT_THROW(c->satake.sum_A(chars.front(), vec({1})), DomainError);
  EXPECT_THROW(c->satake.sum_B(chars.front(), vec({1})), DomainError);
  EXPECT_NO_THROW(c->satake.sum_B(chars.front(), vec({1}), true));
}

TEST(Satake, MatrixShapes) {
  auto c = make(sl2(3));
  auto window = dominant_box(c->datum, 3);
  const Fq one{&c->F, 1}, zero{&c->F, 0};
  for (const auto& chi : enumerate_characters(c->G)) {
    SatakeMatrix M = c->satake.satake_matrix(chi, window);
    EXPECT_TRUE(M.unitriangular && M.inverse_ok && M.expansion_ok);
    const bool steinberg = chi.pi_chi == 0;
    const bool trivial = (chi.xi.exps.array() == 0).all() && chi.pi_chi == 1u;
    for (std::size_t i = 0; i < window.size(); ++i)
      for (std::size_t j = 0; j < window.size(); ++j) {
        if (steinberg) EXPECT_EQ(M.M[i][j], i == j ? one : zero);
        if (trivial) EXPECT_EQ(M.M[i][j], c->datum.preceq(window[j], window[i], c->datum.full_facet()) ? one : zero);
      }
  }
}

TEST(Satake, IotaExpansion) {
  auto c = make(sl2(3));
  for (const auto& w : ball(c->S, 6, 0)) EXPECT_TRUE(c->satake.iota_expansion_check(w));
}

TEST(Satake, AlphaIsMultiplicative) {
  for (const RootDatum& d : {sl2(3), gl2(3)}) {
    auto c = make(d);
    for (const auto& chi : enumerate_characters(c->G)) EXPECT_TRUE(alpha_multiplicative(c->G, chi));
  }
}

TEST(Satake, LinearAlgebra) {
  FiniteField F(5, 1);
  auto e = [&](int v) { return Fq{&F, v}; };
  std::vector<std::vector<Fq>> M{{e(1), e(2)}, {e(0), e(1)}};
  auto inv = invert(F, M);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv)[0][1], e(3));
  std::vector<std::vector<Fq>> S{{e(1), e(2)}, {e(2), e(4)}};
  EXPECT_FALSE(invert(F, S).has_value());
  auto ns = nullspace(F, S, 2);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE((e(1) * ns[0][0] + e(2) * ns[0][1]).is_zero());
}

TEST(Satake, CharacterCheckOnSuccessiveContexts) {
  Bounds b;
  b.max_length = 2;
  b.max_coord = 1;
  b.trials = 2;
  for (int p : {2, 3, 5}) {
    auto c = make(sl2(p));
    for (const Check& ch : run_suite(*c, "satake", b))
      if (ch.name == "characters") {
        EXPECT_FALSE(ch.failed()) << "q=" << p << " " << ch.witness.dump();
        EXPECT_EQ(ch.info.value("count", -1L), p) << "q=" << p;
      }
  }
}
