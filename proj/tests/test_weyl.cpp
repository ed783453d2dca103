#include "common.hpp"

#include <map>

using namespace prohecke;
using namespace prohecke::fixtures;

TEST(Weyl, OrderAndLongestElement) {
  struct Case {
    RootDatum d;
    int order;
  };
  for (const auto& [d, order] : {Case{sl2(), 2}, Case{gl2(), 2}, Case{sl3(), 6}, Case{gl3(), 6}, Case{sp4(), 8},
                                 Case{a1xa1(), 4}}) {
    WeylGroup W(d);
    EXPECT_EQ(W.size(), order) << d.name();
    EXPECT_EQ(W.length(W.longest()), d.num_positive()) << d.name();
    for (int a = 0; a < W.size(); ++a) {
      WeylId w = static_cast<WeylId>(a);
      EXPECT_EQ(W.from_word(W.word(w)), w);
      EXPECT_EQ(W.mul(w, W.inv(w)), W.identity());
    }
  }
}

TEST(Weyl, FiniteLengthIsInversionCount) {
  for (const RootDatum& d : {sl3(), sp4(), gl3()}) {
    WeylGroup W(d);
    for (int a = 0; a < W.size(); ++a) {
      int inv = 0;
      for (int r = 0; r < d.num_positive(); ++r)
        if (!W.root_positive(W.act_root(static_cast<WeylId>(a), r))) ++inv;
      EXPECT_EQ(W.length(static_cast<WeylId>(a)), inv);
    }
  }
}

TEST(Weyl, LengthExamples) {
  RootDatum g = gl2();
  WeylGroup Wg(g);
  EXPECT_EQ(Wg.length(Wg.translation(vec({1, 0}))), 1);
  EXPECT_EQ(Wg.length(Wg.translation(vec({0, 1}))), 1);
  EXPECT_EQ(Wg.length(Wg.translation(vec({1, 1}))), 0);
  RootDatum s = sl2();
  WeylGroup Ws(s);
  EXPECT_EQ(Ws.length(Ws.translation(vec({1}))), 2);
  EXPECT_EQ(Ws.length(Ws.ext_identity()), 0);
}

namespace {

// Affine maps v -> M (v + lam) composed directly.
struct AffineMap {
  Mat M;
  Vec shift;  // image of 0
  Vec apply(const Vec& v) const { return Vec(M * v + shift); }
};

AffineMap as_map(const WeylGroup& W, const ExtWeylElt& x) {
  const Mat& M = W.coweight_matrix(x.w);
  return {M, Vec(M * x.lam)};
}

}  // namespace

TEST(Weyl, GroupLawMatchesAffineMaps) {
  for (const RootDatum& d : {gl2(), gl3(), sp4()}) {
    WeylGroup W(d);
    auto box = coweight_box(d.rank(), 1);
    for (int a = 0; a < W.size(); ++a)
      for (int b = 0; b < W.size(); ++b)
        for (const Vec& la : box) {
          ExtWeylElt x{static_cast<WeylId>(a), la}, y{static_cast<WeylId>(b), box[(a + 3 * b) % box.size()]};
          AffineMap fx = as_map(W, x), fy = as_map(W, y), fxy = as_map(W, W.mul(x, y));
          for (const Vec& v : {Vec(Vec::Zero(d.rank())), box.front(), box.back()})
            ASSERT_TRUE(same(fxy.apply(v), fx.apply(fy.apply(v))));
          ASSERT_EQ(W.mul(x, W.inverse(x)), W.ext_identity());
        }
  }
}

TEST(Weyl, GL3IsMonomialMatrices) {
  RootDatum d = gl3();
  WeylGroup W(d);
  for (int i = 0; i < 2; ++i) {
    Mat P = Mat::Zero(3, 3);
    P(0, 0) = P(1, 1) = P(2, 2) = 1;
    P(i, i) = P(i + 1, i + 1) = 0;
    P(i, i + 1) = P(i + 1, i) = 1;
    EXPECT_EQ(W.coweight_matrix(W.simple(i)), P);
  }
}

namespace {

// In the infinite dihedral group every element has a unique reduced word, which alternates.
std::vector<ExtWeylElt> alternating(const WeylGroup& W, const AffineSystem& S, int first, int len) {
  std::vector<ExtWeylElt> prefixes{W.ext_identity()};
  for (int k = 0; k < len; ++k) prefixes.push_back(W.mul(prefixes.back(), S.simple_reflection((first + k) % 2)));
  return prefixes;
}

}  // namespace

TEST(Weyl, InfiniteDihedralOracle) {
  RootDatum d = sl2();
  WeylGroup W(d);
  AffineSystem S(W, d.full_facet());
  ASSERT_EQ(S.num_simple_affine(), 2);
  std::vector<std::pair<ExtWeylElt, int>> elts{{W.ext_identity(), 0}};
  for (int first = 0; first < 2; ++first) {
    auto pre = alternating(W, S, first, 7);
    for (int k = 1; k <= 7; ++k) elts.emplace_back(pre[k], k);
  }
  for (std::size_t i = 0; i < elts.size(); ++i) {
    EXPECT_EQ(W.length(elts[i].first), elts[i].second);
    EXPECT_EQ(W.length_by_inversions(elts[i].first), elts[i].second);
    for (std::size_t j = 0; j < elts.size(); ++j) {
      if (i != j) EXPECT_FALSE(elts[i].first == elts[j].first);
      bool want = i == j || elts[i].second < elts[j].second;
      EXPECT_EQ(S.bruhat_leq(elts[i].first, elts[j].first), want) << i << " " << j;
    }
  }
  // Only the identity has length zero: the coweight lattice is the coroot lattice.
  EXPECT_EQ(omega_box(W, 3).size(), 1u);
}

namespace {

std::map<std::pair<int, std::vector<Int>>, int> cayley_distances(const WeylGroup& W, const AffineSystem& S, int depth) {
  std::map<std::pair<int, std::vector<Int>>, int> dist;
  std::vector<ExtWeylElt> layer{W.ext_identity()};
  dist[{0, key(W.ext_identity().lam)}] = 0;
  for (int l = 1; l <= depth; ++l) {
    std::vector<ExtWeylElt> next;
    for (const auto& x : layer)
      for (int A = 0; A < S.num_simple_affine(); ++A) {
        ExtWeylElt y = W.mul(x, S.simple_reflection(A));
        if (dist.emplace(std::make_pair(int(y.w), key(y.lam)), l).second) next.push_back(y);
      }
    layer = std::move(next);
  }
  return dist;
}

}  // namespace

TEST(Weyl, LengthIsWordMetric) {
  for (const RootDatum& d : {gl2(), sl3(), sp4()}) {
    WeylGroup W(d);
    AffineSystem S(W, d.full_facet());
    auto dist = cayley_distances(W, S, 5);
    auto omegas = omega_box(W, 1);
    for (const auto& [k, l] : dist) {
      ExtWeylElt u{static_cast<WeylId>(k.first), vec(k.second)};
      for (const auto& om : omegas) ASSERT_EQ(W.length(W.mul(om, u)), l) << d.name();
    }
  }
}

TEST(Weyl, BruhatMatchesSubwords) {
  for (const RootDatum& d : {sl3(), sp4()}) {
    WeylGroup W(d);
    AffineSystem S(W, d.full_facet());
    auto pool = ball(S, 4, 0);
    for (const auto& x : pool) {
      ReducedWord rw = S.reduced_word(x);
      const int k = static_cast<int>(rw.letters.size());
      std::vector<ExtWeylElt> below;
      for (int mask = 0; mask < (1 << k); ++mask) {
        ExtWeylElt y = rw.omega;
        for (int i = 0; i < k; ++i)
          if (mask >> i & 1) y = W.mul(y, S.simple_reflection(rw.letters[i]));
        below.push_back(y);
      }
      for (const auto& v : pool) {
        bool want = std::find(below.begin(), below.end(), v) != below.end();
        ASSERT_EQ(S.bruhat_leq(v, x), want) << d.name();
      }
    }
  }
}

TEST(Weyl, GL2TranslationsAreIncomparable) {
  RootDatum d = gl2();
  WeylGroup W(d);
  AffineSystem S(W, d.full_facet());
  ExtWeylElt a = W.translation(vec({1, 0})), b = W.translation(vec({0, 1}));
  EXPECT_FALSE(S.bruhat_leq(a, b));
  EXPECT_FALSE(S.bruhat_leq(b, a));
  ReducedWord rw = S.reduced_word(a);
  EXPECT_EQ(rw.letters.size(), 1u);
  EXPECT_EQ(W.length(rw.omega), 0);
  EXPECT_FALSE(rw.omega == W.ext_identity());
  EXPECT_EQ(product(W, rw, S), a);
}

TEST(Weyl, DistinguishedRepresentatives) {
  RootDatum d = sl3();
  WeylGroup W(d);
  const Facet full = d.full_facet();
  EXPECT_TRUE(in_D(W, W.ext_identity(), full));
  EXPECT_FALSE(in_D(W, W.finite(W.simple(0)), full));
  EXPECT_TRUE(in_D(W, W.finite(W.simple(0)), Facet::chamber()));
  EXPECT_EQ(D_in_double_coset(W, full, vec({1, 1})).size(), 6u);
  EXPECT_EQ(D_in_double_coset(W, full, vec({0, 0})).size(), 1u);
  RootDatum g = gl2();
  WeylGroup Wg(g);
  EXPECT_EQ(D_in_double_coset(Wg, g.full_facet(), vec({1, 0})).size(), 2u);
  EXPECT_EQ(D_in_double_coset(Wg, g.full_facet(), vec({1, 1})).size(), 1u);
}

TEST(Weyl, CosetFactorIsUniqueAndAdditive) {
  RootDatum d = sp4();
  WeylGroup W(d);
  AffineSystem S(W, d.full_facet());
  for (Facet F : d.facets())
    for (const auto& x : ball(S, 4, 1)) {
      auto [u, dd] = coset_factor(W, x, F);
      EXPECT_EQ(W.mul(W.finite(u), dd), x);
      EXPECT_EQ(W.length(x), W.length(u) + W.length(dd));
      int reps = 0;
      for (WeylId v : W.parabolic(F)) reps += in_D(W, W.mul(W.finite(W.inv(v)), x), F);
      EXPECT_EQ(reps, 1);
    }
}

TEST(Weyl, Chambers) {
  RootDatum d = sl3();
  for (const Vec& lam : coweight_box(2, 2)) {
    EXPECT_EQ(chamber_member(d, lam, Facet::chamber(), Sign::Plus), d.is_dominant(lam));
    EXPECT_EQ(chamber_member(d, lam, Facet::chamber(), Sign::Minus), d.is_dominant(Vec(-lam)));
    EXPECT_EQ(chamber_member(d, lam, d.full_facet(), Sign::Plus), d.is_dominant(Vec(-lam)));
  }
  // Facet {alpha_1}: antidominant for alpha_1, dominant for the rest.
  Facet F{1};
  EXPECT_TRUE(chamber_member(d, vec({-1, 2}), F, Sign::Plus));
  EXPECT_FALSE(chamber_member(d, vec({1, 1}), F, Sign::Plus));
}

TEST(Weyl, CartanSupportAndLongestInDoubleCoset) {
  RootDatum d = sl3();
  WeylGroup W(d);
  ExtWeylElt x{W.simple(1), vec({-1, 0})};
  EXPECT_TRUE(same(cartan_support(W, x), vec({1, 1})));
  ExtWeylElt top = longest_in_double_coset(W, vec({1, 0}));
  for (const auto& y : double_coset(W, vec({1, 0}))) EXPECT_LE(W.length(y), W.length(top));
}

TEST(Weyl, FacetLengths) {
  RootDatum d = gl2();
  WeylGroup W(d);
  AffineSystem full(W, d.full_facet()), chamber(W, Facet::chamber());
  EXPECT_EQ(chamber.num_simple_affine(), 0);
  for (const Vec& lam : coweight_box(2, 2)) {
    ExtWeylElt t = W.translation(lam);
    EXPECT_EQ(full.length(t), W.length(t));
    EXPECT_EQ(chamber.length(t), 0);
  }
  EXPECT_FALSE(chamber.contains(W.finite(W.simple(0))));
  EXPECT_THROW(chamber.length(W.finite(W.simple(0))), DomainError);
}
