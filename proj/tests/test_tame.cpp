#include "common.hpp"

using namespace prohecke;
using namespace prohecke::fixtures;

namespace {

// Monomial n x n matrices over F_q((pi)) with entries c pi^k, c a unit.
struct Monomial {
  std::vector<int> col;
  std::vector<int> c;
  std::vector<Int> k;

  static Monomial diag(const FiniteField& F, const std::vector<int>& units, const std::vector<Int>& powers) {
    Monomial m;
    for (std::size_t i = 0; i < units.size(); ++i) {
      m.col.push_back(static_cast<int>(i));
      m.c.push_back(units[i]);
      m.k.push_back(powers[i]);
    }
    (void)F;
    return m;
  }
  Monomial times(const Monomial& o, const FiniteField& F) const {
    Monomial m;
    for (std::size_t i = 0; i < col.size(); ++i) {
      int j = col[i];
      m.col.push_back(o.col[j]);
      m.c.push_back(F.mul(c[i], o.c[j]));
      m.k.push_back(k[i] + o.k[j]);
    }
    return m;
  }
  bool operator==(const Monomial&) const = default;
};

// Realization for GL2 (E = identity) and SL2 (E = (1, -1)): cocharacters go to diagonal matrices
// through E, the simple reflection to the Tits matrix [[0, 1], [-1, 0]].
struct Realization {
  const TameGroup& G;
  const FiniteField& F;
  std::vector<Vec> E;  // row i: exponent of entry i as a linear form on X_*

  Monomial torus(const Vec& t) const {
    std::vector<int> u;
    for (const Vec& e : E) u.push_back(F.exp(e.dot(t)));
    return Monomial::diag(F, u, {0, 0});
  }
  Monomial translation(const Vec& lam) const {
    std::vector<Int> k;
    for (const Vec& e : E) k.push_back(e.dot(lam));
    return Monomial::diag(F, {1, 1}, k);
  }
  Monomial reflection() const {
    Monomial m;
    m.col = {1, 0};
    m.c = {1, F.neg(1)};
    m.k = {0, 0};
    return m;
  }
  Monomial operator()(const TameElt& y) const {
    Monomial m = torus(y.t);
    for (std::size_t i = 0; i < G.weyl().word(y.x.w).size(); ++i) m = m.times(reflection(), F);
    return m.times(translation(y.x.lam), F);
  }
};

std::vector<TameElt> sample(const TameGroup& G, int bound) {
  std::vector<TameElt> out;
  const WeylGroup& W = G.weyl();
  for (const Vec& t : G.all_torus_points())
    for (const Vec& lam : coweight_box(G.datum().rank(), bound))
      for (int w = 0; w < W.size(); ++w) out.push_back({t, {static_cast<WeylId>(w), lam}});
  return out;
}

}  // namespace

TEST(Tame, MonomialMatrixHomomorphism) {
  for (int p : {3, 5}) {
    for (bool gl : {false, true}) {
      auto c = make(gl ? gl2(p) : sl2(p));
      Realization R{c->G, c->F, gl ? std::vector<Vec>{vec({1, 0}), vec({0, 1})} : std::vector<Vec>{vec({1}), vec({-1})}};
      auto elts = sample(c->G, 1);
      for (std::size_t i = 0; i < elts.size(); i += 3)
        for (std::size_t j = 0; j < elts.size(); j += 5)
          ASSERT_EQ(R(c->G.mul(elts[i], elts[j])), R(elts[i]).times(R(elts[j]), c->F))
              << c->datum.name() << " q=" << p;
      for (const auto& y : elts) ASSERT_EQ(c->G.mul(y, c->G.inverse(y)), c->G.identity());
    }
  }
}

TEST(Tame, SimpleLiftsSquareToCorootOfMinusOne) {
  for (int p : {2, 3, 5}) {
    auto c = make(sl2(p));
    const GenericHecke& H = c->Hg;
    for (int A = 0; A < c->S.num_simple_affine(); ++A) {
      TameElt sq = c->G.mul(H.simple_lift(A), H.simple_lift(A));
      EXPECT_EQ(sq.x, c->W.ext_identity());
      EXPECT_TRUE(same(sq.t, vec({p == 2 ? 0 : (p - 1) / 2}))) << "q=" << p << " A=" << A;
    }
  }
  auto c = make(sl2(5));
  EXPECT_TRUE(same(c->G.minus_one(vec({1})), vec({2})));
}

TEST(Tame, CanonicalLiftOfNonSimpleReflection) {
  auto c = make(sl3(3));
  const RootDatum& d = c->datum;
  int beta = d.root_index(vec({1, 1}));
  ASSERT_GE(beta, 0);
  const Vec& cor = d.roots()[beta].coroot;
  EXPECT_TRUE(same(cor, vec({1, 1})));
  TameElt canonical = c->G.lift(c->W.finite(c->W.reflection(beta)));
  TameElt rooted = c->G.root_lift(beta);
  EXPECT_TRUE(same(c->G.pow(canonical, 2).t, vec({0, 0})));
  EXPECT_TRUE(same(c->G.pow(rooted, 2).t, c->G.minus_one(cor)));
  EXPECT_TRUE(same(c->G.minus_one(cor), vec({1, 1})));
  EXPECT_EQ(c->G.pow(rooted, 2).x, c->W.ext_identity());
}

TEST(Tame, StabilizerCanExceedCorootTriviality) {
  {
    auto c = make(sl2(3));
    TorusCharacter xi{vec({1})};
    EXPECT_EQ(c->G.char_stabilizer(xi), 1u);
    EXPECT_EQ(c->G.char_coroot_trivial(xi), 0u);
    EXPECT_EQ(character_support(c->G, xi), 0u);
  }
  {
    auto c = make(sl2(5));
    TorusCharacter xi{vec({2})};
    EXPECT_EQ(c->G.char_stabilizer(xi), 1u);
    EXPECT_EQ(c->G.char_coroot_trivial(xi), 0u);
    TorusCharacter one{vec({1})};
    EXPECT_EQ(c->G.char_stabilizer(one), 0u);
  }
}

TEST(Tame, GL2Actions) {
  auto c = make(gl2(3));
  WeylId s = c->W.simple(0);
  EXPECT_TRUE(same(c->G.act_torus(s, vec({1, 0})), vec({0, 1})));
  EXPECT_TRUE(same(c->G.act_char(s, TorusCharacter{vec({1, 0})}).exps, vec({0, 1})));
  EXPECT_EQ(c->G.all_characters().size(), 4u);
  EXPECT_EQ(c->G.all_torus_points().size(), 4u);
  EXPECT_EQ(c->G.char_eval(TorusCharacter{vec({1, 1})}, vec({1, 0})), 1);
  EXPECT_EQ(c->G.char_coroot_trivial(TorusCharacter{vec({1, 1})}), 1u);
  EXPECT_EQ(c->G.char_coroot_trivial(TorusCharacter{vec({1, 0})}), 0u);
}

TEST(Tame, Cocycles) {
  auto c = make(sl3(5));
  const WeylGroup& W = c->W;
  for (int a = 0; a < W.size(); ++a)
    for (int b = 0; b < W.size(); ++b) {
      WeylId x = static_cast<WeylId>(a), y = static_cast<WeylId>(b);
      if (W.length(W.mul(x, y)) == W.length(x) + W.length(y)) EXPECT_TRUE(same(c->G.cocycle(x, y), vec({0, 0})));
    }
  for (int i = 0; i < 2; ++i)
    EXPECT_TRUE(same(c->G.cocycle(W.simple(i), W.simple(i)), c->G.minus_one(c->datum.simple_coroot(i))));
}

TEST(Tame, LiftsSatisfyBraidRelations) {
  for (const RootDatum& d : {sl3(5), sp4(5), gl3(5)}) {
    auto c = make(d);
    const WeylGroup& W = c->W;
    for (int a = 0; a < W.size(); ++a) {
      WeylId w = static_cast<WeylId>(a);
      TameElt want = c->G.lift(W.finite(w));
      for (const auto& word : W.all_reduced_words(w)) EXPECT_EQ(c->G.lift_along(word), want) << d.name();
    }
    EXPECT_GT(W.all_reduced_words(W.longest()).size(), 1u);
  }
}

TEST(Tame, Associativity) {
  auto c = make(sp4(3));
  auto elts = sample(c->G, 0);
  for (std::size_t i = 0; i < elts.size(); i += 7)
    for (std::size_t j = 0; j < elts.size(); j += 5)
      for (std::size_t k = 0; k < elts.size(); k += 11) {
        const TameGroup& G = c->G;
        ASSERT_EQ(G.mul(G.mul(elts[i], elts[j]), elts[k]), G.mul(elts[i], G.mul(elts[j], elts[k])));
      }
}
