#include "common.hpp"

using namespace prohecke;
using namespace prohecke::fixtures;

namespace {

TameElt tr(const Context& c, const Vec& lam) { return c.G.lift(c.W.translation(lam)); }

}  // namespace

TEST(Bernstein, ChamberValueIsBasisElement) {
  auto c = make(sl3(3));
  for (Facet F : c->datum.facets()) {
    const BernsteinMaps& B = c->maps(F);
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (const Vec& lam : coweight_box(2, 2)) {
        if (!B.in_chamber(lam, s)) continue;
        EXPECT_EQ(B.bernstein(lam, s).value, c->Hg.tau(tr(*c, lam)));
      }
  }
  // The chamber attached to C and the plus sign is the dominant cone.
  const BernsteinMaps& BC = c->maps(Facet::chamber());
  for (const Vec& lam : dominant_box(c->datum, 2)) EXPECT_EQ(BC.bernstein(lam, Sign::Plus).value, c->Hg.tau(tr(*c, lam)));
}

TEST(Bernstein, ThetaIsMultiplicative) {
  auto c = make(gl2(3));
  for (Facet F : c->datum.facets()) {
    const BernsteinMaps& B = c->maps(F);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      EXPECT_EQ(B.theta(tr(*c, vec({0, 0})), s), c->Hg.one());
      for (const Vec& lam : coweight_box(2, 2)) {
        GenericElt prod = c->Hg.mul(B.theta(tr(*c, lam), s), B.theta(tr(*c, Vec(-lam)), s));
        EXPECT_EQ(prod, c->Hg.one()) << to_string(lam);
      }
    }
  }
}

TEST(Bernstein, ThetaIndependentOfAuxiliary) {
  auto c = make(sp4(3));
  for (Facet F : c->datum.facets()) {
    const BernsteinMaps& B = c->maps(F);
    for (const Vec& lam : coweight_box(2, 1)) {
      auto aux = B.auxiliaries(lam, Sign::Plus, 3);
      ASSERT_GE(aux.size(), 2u);
      for (const Vec& nu : aux) EXPECT_EQ(B.theta(tr(*c, lam), Sign::Plus, nu), B.theta(tr(*c, lam), Sign::Plus));
    }
  }
}

TEST(Bernstein, SL2VertexHasLowerTerms) {
  auto c = make(sl2(3));
  const Facet x0 = c->datum.full_facet();
  const BernsteinMaps& B = c->maps(x0);
  TameElt top = tr(*c, vec({1}));
  GenericElt val = B.bernstein(vec({1}), Sign::Plus).value;
  EXPECT_EQ(val.coeff(top), LaurentInt(1));
  EXPECT_GT(val.size(), 1u);
  EXPECT_TRUE(is_integral(val));
  for (const auto& [y, a] : val)
    if (!(y == top)) EXPECT_TRUE(c->S.bruhat_less(y.x, top.x));
  // On the antidominant side the element is the basis element itself.
  EXPECT_EQ(B.bernstein(vec({-1}), Sign::Plus).value, c->Hg.tau(tr(*c, vec({-1}))));
}

TEST(Bernstein, SwapIdentityExhaustiveOnA1) {
  for (int p : {2, 3, 5}) {
    auto c = make(sl2(p));
    for (Facet F : c->datum.facets()) {
      const BernsteinMaps& B = c->maps(F);
      for (Int l = -3; l <= 3; ++l)
        for (const Vec& t : c->G.all_torus_points())
          EXPECT_TRUE(iota_swap_check(B, TameElt{t, c->W.translation(vec({l}))})) << "q=" << p << " lam=" << l;
    }
  }
}

TEST(Bernstein, DominantConeIsMultiplicative) {
  auto c = make(gl2(5));
  for (Facet F : c->datum.facets())
    for (const Vec& a : dominant_box(c->datum, 1))
      for (const Vec& b : dominant_box(c->datum, 1))
        EXPECT_EQ(c->Hg.mul(c->satake.bernstein_plus(F, a), c->satake.bernstein_plus(F, b)),
                  c->satake.bernstein_plus(F, Vec(a + b)));
}

TEST(Bernstein, CommutationClauses) {
  for (const RootDatum& d : {sl2(3), sl3(2)}) {
    auto c = make(d);
    for (Facet F : c->datum.facets())
      for (const Vec& lam : dominant_box(c->datum, 2))
        for (int a = 0; a < c->datum.num_simple(); ++a) {
          auto rep = commutation_report(c->maps(F), tr(*c, lam), a);
          ASSERT_EQ(rep.size(), 2u);
          for (const auto& e : rep) {
            EXPECT_TRUE(e.ok) << d.name() << " facet " << F.mask << " clause " << e.clause;
            EXPECT_EQ(e.pairing, c->datum.pair(lam, a));
          }
          EXPECT_EQ(rep[0].clause, F.contains(a) ? "a" : "b");
        }
  }
  auto c = make(sl2(3));
  EXPECT_THROW(commutation_report(c->maps(c->datum.full_facet()), tr(*c, vec({-1})), 0), DomainError);
}

TEST(Bernstein, LeviCompatibility) {
  for (const RootDatum& d : {gl2(3), sl3(2)}) {
    auto c = make(d);
    for (Facet F : c->datum.facets())
      for (const Vec& lam : dominant_box(c->datum, 1)) {
        LeviCheck r = levi_compat_check(c->maps(F), c->levi(F), tr(*c, lam));
        EXPECT_TRUE(r.equal && r.leading_ok && r.support_ok) << d.name() << " " << F.mask << " " << r.detail;
      }
  }
}

TEST(Bernstein, InadmissibleAuxiliaryThrows) {
  auto c = make(sl2(3));
  const BernsteinMaps& B = c->maps(c->datum.full_facet());
  EXPECT_THROW(B.theta(tr(*c, vec({1})), Sign::Plus, vec({1})), DomainError);
  EXPECT_THROW(B.theta(tr(*c, vec({2})), Sign::Plus, vec({-1})), DomainError);
  EXPECT_NO_THROW(B.theta(tr(*c, vec({2})), Sign::Plus, vec({-2})));
  EXPECT_THROW(B.theta(c->G.lift(c->W.finite(c->W.simple(0))), Sign::Plus), DomainError);
}

TEST(Bernstein, AuxiliariesAreAdmissible) {
  auto c = make(sp4(3));
  for (Facet F : c->datum.facets()) {
    const BernsteinMaps& B = c->maps(F);
    for (Sign s : {Sign::Plus, Sign::Minus})
      for (const Vec& lam : coweight_box(2, 2))
        for (const Vec& nu : B.auxiliaries(lam, s, 3)) {
          EXPECT_TRUE(B.in_chamber(nu, s));
          EXPECT_TRUE(B.in_chamber(Vec(lam + nu), s));
        }
  }
}
